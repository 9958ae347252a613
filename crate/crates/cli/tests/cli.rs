//! End-to-end checks of the binary: output layouts, format matrix, exit
//! codes, error wording, banner routing, and agreement with the shipped
//! JSON schema.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn tameram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tameram"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal deaths")
}

#[test]
fn classify_text_layout_is_frozen() {
    let output = tameram(&["classify", "--q", "3", "--e", "4", "--f", "2", "--no-banner"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(
        stdout(&output),
        "q = 3  e = 4  f = 2\n\
         lines: 4 (g_f)  stable: 2 (g)  orbits: 3  galoisian: 2  abelian: no\n\
         x = 0: size 1, stable, galoisian, closure 1, split 1, group dihedral-8 (s = 0)\n\
         x = 1: size 2, not stable, closure 2\n\
         x = 2: size 1, stable, galoisian, closure 1, split 2, group quaternion-8 (s = 2)\n"
    );
}

#[test]
fn classify_handles_the_trivial_shape() {
    let output = tameram(&["classify", "--q", "2", "--e", "1", "--f", "1", "--no-banner"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("orbits: 1  galoisian: 1"), "{text}");
}

fn object_keys(value: &Value) -> BTreeSet<String> {
    value.as_object().expect("JSON object").keys().cloned().collect()
}

#[test]
fn classify_json_matches_the_shipped_schema_shape() {
    let output =
        tameram(&["classify", "--q", "3", "--e", "4", "--f", "2", "--format", "json", "--no-banner"]);
    assert_eq!(exit_code(&output), 0);
    let report: Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");

    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/classify.schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).expect("schema ships in repo"))
            .expect("schema is valid JSON");

    let top_properties = object_keys(&schema["properties"]);
    assert_eq!(object_keys(&report), top_properties, "report keys == schema properties");
    let required: BTreeSet<String> = schema["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_owned())
        .collect();
    assert_eq!(required, top_properties, "every schema property is required");

    for key in ["q", "e", "f", "g", "g_f"] {
        assert!(report[key].is_u64(), "{key} is an integer");
    }

    let orbit_properties = object_keys(&schema["properties"]["orbits"]["items"]["properties"]);
    let orbits = report["orbits"].as_array().expect("orbits array");
    assert_eq!(orbits.len(), 3);
    for orbit in orbits {
        assert_eq!(object_keys(orbit), orbit_properties, "orbit keys == schema item properties");
        assert!(orbit["rep"].is_u64() && orbit["size"].is_u64());
        assert!(orbit["stable"].is_boolean() && orbit["galoisian"].is_boolean());
        assert!(orbit["closure_degree"].is_u64());
        assert!(orbit["group"].is_string() || orbit["group"].is_null());
        assert!(orbit["s"].is_u64() || orbit["s"].is_null());
        assert!(orbit["split_degree"].is_u64() || orbit["split_degree"].is_null());
        assert_eq!(orbit["galoisian"].as_bool(), Some(!orbit["group"].is_null()));
    }

    assert_eq!(report["q"], 3);
    assert_eq!(report["g_f"], 4);
    assert_eq!(orbits[0]["group"], "dihedral-8");
    assert_eq!(orbits[2]["group"], "quaternion-8");
}

#[test]
fn classify_csv_rows_match_sweep_rows() {
    let single = tameram(&["classify", "--q", "5", "--e", "8", "--f", "2", "--format", "csv", "--no-banner"]);
    assert_eq!(
        stdout(&single),
        "q,e,f,g,g_f,orbit_count,galoisian_count,abelian\n5,8,2,4,8,6,4,false\n"
    );

    let swept = tameram(&["sweep", "--q-max", "5", "--e-max", "8", "--f-max", "2", "--no-banner"]);
    assert_eq!(exit_code(&swept), 0);
    let atlas = stdout(&swept);
    let mut lines = atlas.lines();
    assert_eq!(lines.next(), Some("q,e,f,g,g_f,orbit_count,galoisian_count,abelian"));
    assert!(atlas.contains("\n5,8,2,4,8,6,4,false\n"));
    assert!(atlas.contains("\n3,4,2,2,4,3,2,false\n"));
    assert!(atlas.contains("\n2,1,1,1,1,1,1,true\n"));
}

#[test]
fn sweep_of_a_single_cell_has_one_row() {
    let output = tameram(&["sweep", "--q-max", "2", "--e-max", "1", "--f-max", "1", "--no-banner"]);
    assert_eq!(
        stdout(&output),
        "q,e,f,g,g_f,orbit_count,galoisian_count,abelian\n2,1,1,1,1,1,1,true\n"
    );
}

#[test]
fn sweep_rows_are_in_lexicographic_order() {
    let output = tameram(&["sweep", "--q-max", "9", "--e-max", "6", "--f-max", "3", "--no-banner"]);
    let atlas = stdout(&output);
    let triples: Vec<(u64, u64, u64)> = atlas
        .lines()
        .skip(1)
        .map(|line| {
            let mut cells = line.split(',').map(|c| c.parse::<u64>());
            (
                cells.next().unwrap().unwrap(),
                cells.next().unwrap().unwrap(),
                cells.next().unwrap().unwrap(),
            )
        })
        .collect();
    assert!(!triples.is_empty());
    assert!(triples.windows(2).all(|w| w[0] < w[1]), "strictly increasing (q, e, f)");
}

#[test]
fn mass_json_reports_exact_values() {
    let output = tameram(&["mass", "--q", "5", "--e", "6", "--format", "json", "--no-banner"]);
    assert_eq!(exit_code(&output), 0);
    let report: Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["subfield_count_sum"], 6);
    assert_eq!(report["per_class_weighted_sum"], 1);
    assert_eq!(report["class_count"], 2);
    assert_eq!(report["subfields_per_class"], 3);
}

#[test]
fn l3_json_carries_the_narrative() {
    let output = tameram(&["l3", "--q", "3", "--l", "2", "--format", "json", "--no-banner"]);
    let report: Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["feasible"], true);
    assert_eq!(report["extensions"][0]["group"], "dihedral-8");
    assert_eq!(report["extensions"][1]["group"], "quaternion-8");
    assert_eq!(report["narrative"]["split_level"], 8);
    assert_eq!(report["abelian_shapes"], Value::Null);

    let with_abelian =
        tameram(&["l3", "--q", "3", "--l", "2", "--include-abelian", "--format", "json", "--no-banner"]);
    let report: Value = serde_json::from_str(&stdout(&with_abelian)).unwrap();
    assert_eq!(report["abelian_shapes"].as_array().unwrap().len(), 3);
}

#[test]
fn cohomology_json_reports_both_orders() {
    let output = tameram(&["cohomology", "--m", "4", "--n", "2", "--a", "3", "--format", "json", "--no-banner"]);
    let report: Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["h1_order"], 2);
    assert_eq!(report["h2_order"], 2);
    assert_eq!(report["norm_image_generator"], 4);
}

#[test]
fn invalid_cardinality_exits_2_with_the_pinned_message() {
    let output = tameram(&["classify", "--q", "6", "--e", "2", "--f", "1", "--no-banner"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("q is not a prime power"), "{}", stderr(&output));
    assert!(stdout(&output).is_empty());
}

#[test]
fn wild_index_exits_2_with_the_pinned_message() {
    let output = tameram(&["classify", "--q", "3", "--e", "6", "--f", "1", "--no-banner"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("gcd(e,p) != 1"), "{}", stderr(&output));
}

#[test]
fn csv_is_rejected_where_it_has_no_meaning() {
    for args in [
        vec!["mass", "--q", "5", "--e", "4", "--format", "csv"],
        vec!["l3", "--q", "3", "--l", "2", "--format", "csv"],
        vec!["cohomology", "--m", "4", "--n", "2", "--a", "3", "--format", "csv"],
    ] {
        let mut args = args;
        args.push("--no-banner");
        let output = tameram(&args);
        assert_eq!(exit_code(&output), 2, "{args:?}");
        assert!(stderr(&output).contains("no CSV form"), "{args:?}");
    }
}

#[test]
fn invalid_action_and_degenerate_bounds_exit_2() {
    let output = tameram(&["cohomology", "--m", "4", "--n", "2", "--a", "2", "--no-banner"]);
    assert_eq!(exit_code(&output), 2, "a = 2 is not a unit mod 4");

    let output = tameram(&["sweep", "--q-max", "0", "--e-max", "4", "--f-max", "1", "--no-banner"]);
    assert_eq!(exit_code(&output), 2);

    let output = tameram(&["sweep", "--q-max", "999999", "--e-max", "999999", "--f-max", "99", "--no-banner"]);
    assert_eq!(exit_code(&output), 2, "oversized grids are refused up front");
}

#[test]
fn unknown_flags_exit_2() {
    let output = tameram(&["classify", "--bogus"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unwritable_out_path_exits_3() {
    let output = tameram(&[
        "classify", "--q", "3", "--e", "4", "--f", "2",
        "--out", "/nonexistent-dir/report.json", "--no-banner",
    ]);
    assert_eq!(exit_code(&output), 3);
    assert!(stderr(&output).contains("cannot write"));
}

#[test]
fn out_file_matches_stdout_bytes() {
    let path = std::env::temp_dir().join(format!("tameram-cli-test-{}.csv", std::process::id()));
    let to_file = tameram(&[
        "sweep", "--q-max", "4", "--e-max", "6", "--f-max", "2",
        "--out", path.to_str().unwrap(), "--no-banner",
    ]);
    assert_eq!(exit_code(&to_file), 0);
    assert!(stdout(&to_file).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();

    let to_stdout = tameram(&["sweep", "--q-max", "4", "--e-max", "6", "--f-max", "2", "--no-banner"]);
    assert_eq!(written, stdout(&to_stdout));
}

#[test]
fn banner_goes_to_stderr_and_no_banner_silences_it() {
    let with_banner = tameram(&["classify", "--q", "3", "--e", "4", "--f", "2"]);
    assert!(stderr(&with_banner).starts_with("tameram "));
    let without = tameram(&["classify", "--q", "3", "--e", "4", "--f", "2", "--no-banner"]);
    assert!(stderr(&without).is_empty());
    assert_eq!(stdout(&with_banner), stdout(&without), "the banner never touches stdout");
}

#[test]
fn oracle_passes_on_a_small_grid() {
    let output = tameram(&[
        "oracle", "--q-max", "5", "--e-max", "6", "--f-max", "2",
        "--cocycle-max", "3", "--group-max", "6", "--no-banner",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("all oracle suites passed"));
}
