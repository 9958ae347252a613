//! Deterministic text, CSV, and JSON renderings of the library reports.
//!
//! Every numeric JSON field is an exact integer; exact non-integer
//! rationals render as the string "numerator/denominator". Nothing here
//! depends on time, locale, or hashing order.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;
use tameram::{ClassifyReport, CyclicAction, L3Report, MassReport, Nat};

/// Fixed CSV column set; future columns append only.
pub const ATLAS_HEADER: &str = "q,e,f,g,g_f,orbit_count,galoisian_count,abelian";

/// One atlas line for a classified shape.
pub fn atlas_row(report: &ClassifyReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        report.q,
        report.e,
        report.f,
        report.g,
        report.g_f,
        report.orbit_count(),
        report.galoisian_count(),
        report.abelian()
    )
}

pub fn classify_csv(report: &ClassifyReport) -> String {
    format!("{ATLAS_HEADER}\n{}\n", atlas_row(report))
}

pub fn classify_json(report: &ClassifyReport) -> String {
    pretty(report)
}

pub fn classify_text(report: &ClassifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "q = {}  e = {}  f = {}", report.q, report.e, report.f);
    let _ = writeln!(
        out,
        "lines: {} (g_f)  stable: {} (g)  orbits: {}  galoisian: {}  abelian: {}",
        report.g_f,
        report.g,
        report.orbit_count(),
        report.galoisian_count(),
        yes_no(report.abelian())
    );
    for orbit in &report.orbits {
        let _ = write!(
            out,
            "x = {}: size {}, {}{}, closure {}",
            orbit.rep,
            orbit.size,
            if orbit.stable { "stable" } else { "not stable" },
            if orbit.galoisian { ", galoisian" } else { "" },
            orbit.closure_degree
        );
        if let (Some(group), Some(s), Some(split)) = (&orbit.group, orbit.s, orbit.split_degree) {
            let _ = write!(out, ", split {split}, group {group} (s = {s})");
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct MassJson {
    q: u64,
    degree: u64,
    class_count: u64,
    aut_order: u64,
    subfields_per_class: u64,
    subfield_count_sum: Value,
    per_class_weighted_sum: Value,
}

pub fn mass_json(report: &MassReport) -> String {
    pretty(&MassJson {
        q: report.field.q(),
        degree: report.degree,
        class_count: report.class_count,
        aut_order: report.aut_order,
        subfields_per_class: report.subfields_per_class,
        subfield_count_sum: rational_value(&report.subfield_count_sum),
        per_class_weighted_sum: rational_value(&report.per_class_weighted_sum),
    })
}

pub fn mass_text(report: &MassReport) -> String {
    format!(
        "mass of the tame totally ramified degree-{} extensions over q = {}\n\
         classes: {}, automorphisms per class: {}, subfields per class: {}\n\
         subfield count sum: {}\n\
         per-class weighted sum: {}\n",
        report.degree,
        report.field.q(),
        report.class_count,
        report.aut_order,
        report.subfields_per_class,
        rational_text(&report.subfield_count_sum),
        rational_text(&report.per_class_weighted_sum)
    )
}

pub fn l3_json(report: &L3Report) -> String {
    pretty(report)
}

pub fn l3_text(report: &L3Report) -> String {
    let mut out = String::new();
    let cube = report.l.pow(3);
    let _ = writeln!(out, "galoisian degree-{cube} classification over q = {}", report.q);
    let _ = writeln!(out, "v_{}(q - 1) = {}", report.l, report.v_l_q_minus_1);
    if report.feasible {
        let _ = writeln!(
            out,
            "nonabelian shape (e, f) = ({}, {}): {} lines, {} orbits, {} galoisian",
            report.e.expect("feasible reports carry the shape"),
            report.f.expect("feasible reports carry the shape"),
            report.line_count,
            report.orbit_count,
            report.galoisian_count
        );
        for ext in &report.extensions {
            let _ = writeln!(
                out,
                "x = {}: {}, order {}, split degree {}",
                ext.x, ext.group, ext.order, ext.split_degree
            );
        }
        if let Some(n) = &report.narrative {
            let _ = writeln!(
                out,
                "lines {:?} merge at level {} (closure degree {}) into line {}; \
                 the merged class has order {} and splits at level {}",
                n.non_galoisian_orbit,
                n.closure_level,
                n.closure_degree,
                n.merged_line,
                n.merged_class_order,
                n.split_level
            );
        }
    } else {
        let _ = writeln!(out, "no nonabelian galoisian extensions of degree {cube}");
    }
    if let Some(shapes) = &report.abelian_shapes {
        let _ = writeln!(out, "abelian shapes:");
        for shape in shapes {
            let _ = writeln!(
                out,
                "  (e, f) = ({}, {}): {} lines, {} orbits, {} galoisian",
                shape.e, shape.f, shape.line_count, shape.orbit_count, shape.galoisian_count
            );
        }
    }
    out
}

#[derive(Serialize)]
struct CohomologyJson {
    m: u64,
    n: u64,
    a: u64,
    norm_sum: u64,
    norm_image_generator: u64,
    h1_order: u64,
    h2_order: u64,
}

pub fn cohomology_json(action: &CyclicAction) -> String {
    pretty(&cohomology_fields(action))
}

pub fn cohomology_text(action: &CyclicAction) -> String {
    let fields = cohomology_fields(action);
    format!(
        "cyclic action: m = {}, n = {}, a = {}\n\
         norm sum = {}, norm image generated by {}\n\
         h1 order = {}\n\
         h2 order = {}\n",
        fields.m,
        fields.n,
        fields.a,
        fields.norm_sum,
        fields.norm_image_generator,
        fields.h1_order,
        fields.h2_order
    )
}

fn cohomology_fields(action: &CyclicAction) -> CohomologyJson {
    CohomologyJson {
        m: nat_u64(action.m()),
        n: action.n(),
        a: nat_u64(action.a()),
        norm_sum: nat_u64(&action.norm_sum()),
        norm_image_generator: nat_u64(&action.norm_image_generator()),
        h1_order: nat_u64(&action.h1_order()),
        h2_order: nat_u64(&action.h2_order()),
    }
}

fn nat_u64(value: &Nat) -> u64 {
    value.to_u64().expect("cohomology values are bounded by the u64 input m")
}

/// Exact JSON form of a rational: an integer when the denominator is 1,
/// otherwise the string "numerator/denominator".
fn rational_value(value: &BigRational) -> Value {
    if value.is_integer() {
        match value.numer().to_u64() {
            Some(n) => Value::from(n),
            None => Value::String(value.numer().to_string()),
        }
    } else {
        Value::String(rational_text(value))
    }
}

fn rational_text(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    out.push('\n');
    out
}
