//! Command-line surface over the `tameram` library: single-shape
//! classification, grid sweeps as a CSV atlas, mass and degree-l^3
//! reports, cohomology of cyclic actions, and brute-force oracle suites
//! for CI gating.
//!
//! Exit codes: 0 success, 2 invalid input, 3 I/O failure, 4 oracle
//! mismatch. Data sections go to stdout (or `--out`); the version banner
//! goes to stderr and `--no-banner` suppresses it, so piped output is
//! clean and byte-identical across runs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tameram::{classify_l3, tame_mass, ClassifyReport, CyclicAction, LocalField, TameShape};

mod oracle;
mod render;

/// Ceiling on `q_max * e_max * f_max` for grid-walking commands, so a
/// mistyped bound fails fast instead of looping for hours.
const GRID_BOUND: u64 = 10_000_000;

/// Failure cases, each tied to its contractual exit code.
pub enum CliError {
    /// Exit 2: the request itself is invalid.
    Input(String),
    /// Exit 3: the request is fine but writing the result failed.
    Io(String),
    /// Exit 4: a brute-force oracle disagreed with a closed form.
    OracleMismatch(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Input(msg) | CliError::Io(msg) | CliError::OracleMismatch(msg) => msg,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
            CliError::OracleMismatch(_) => 4,
        }
    }
}

impl From<tameram::Error> for CliError {
    fn from(err: tameram::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "tameram",
    version,
    about = "Classify tamely ramified extensions of local fields with exact arithmetic"
)]
struct Cli {
    /// Suppress the version banner on stderr.
    #[arg(long, global = true)]
    no_banner: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the extensions with ramification index e and residual degree f.
    Classify(ClassifyArgs),
    /// Write the classification atlas over a whole shape grid as CSV.
    Sweep(SweepArgs),
    /// Mass report for the tame totally ramified extensions of one degree.
    Mass(MassArgs),
    /// Classify the galoisian extensions of degree l^3.
    #[command(name = "l3")]
    L3(L3Args),
    /// Cohomology of a cyclic group acting on a cyclic module through a unit.
    Cohomology(CohomologyArgs),
    /// Run the brute-force cross-check suites; any mismatch exits nonzero.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Residue cardinality q = p^r.
    #[arg(long)]
    q: u64,
    /// Ramification index, necessarily prime to p.
    #[arg(long)]
    e: u64,
    /// Residual degree.
    #[arg(long)]
    f: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest residue cardinality to include.
    #[arg(long)]
    q_max: u64,
    /// Largest ramification index to include.
    #[arg(long)]
    e_max: u64,
    /// Largest residual degree to include.
    #[arg(long)]
    f_max: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MassArgs {
    /// Residue cardinality q = p^r.
    #[arg(long)]
    q: u64,
    /// Degree of the totally ramified extensions, necessarily prime to p.
    #[arg(long)]
    e: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct L3Args {
    /// Residue cardinality q = p^r.
    #[arg(long)]
    q: u64,
    /// The prime l, necessarily different from p.
    #[arg(long)]
    l: u64,
    /// Also count the abelian shapes (1, l^3), (l, l^2) and (l^3, 1).
    #[arg(long)]
    include_abelian: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Order of the acted-on cyclic module Z/m.
    #[arg(long)]
    m: u64,
    /// Order of the acting cyclic group Z/n.
    #[arg(long)]
    n: u64,
    /// Unit through which the generator acts; a^n must be 1 mod m.
    #[arg(long)]
    a: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Largest residue cardinality in the class-equivalence grid.
    #[arg(long, default_value_t = 49)]
    q_max: u64,
    /// Largest ramification index in the class-equivalence grid.
    #[arg(long, default_value_t = 36)]
    e_max: u64,
    /// Largest residual degree in the class-equivalence grid.
    #[arg(long, default_value_t = 6)]
    f_max: u64,
    /// Largest m and n for the cocycle-table count.
    #[arg(long, default_value_t = 6)]
    cocycle_max: u64,
    /// Largest m and n for the group-enumeration suite.
    #[arg(long, default_value_t = 12)]
    group_max: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.no_banner {
        eprintln!("tameram {}", env!("CARGO_PKG_VERSION"));
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify(args) => cmd_classify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Mass(args) => cmd_mass(args),
        Command::L3(args) => cmd_l3(args),
        Command::Cohomology(args) => cmd_cohomology(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let shape = TameShape::new(LocalField::new(args.q)?, args.e, args.f)?;
    let report = ClassifyReport::new(&shape)?;
    let data = match args.format {
        Format::Json => render::classify_json(&report),
        Format::Text => render::classify_text(&report),
        Format::Csv => render::classify_csv(&report),
    };
    emit(&data, args.out.as_deref())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    check_grid(args.q_max, args.e_max, args.f_max)?;
    let mut csv = String::from(render::ATLAS_HEADER);
    csv.push('\n');
    for q in 2..=args.q_max {
        let field = match LocalField::new(q) {
            Ok(field) => field,
            Err(tameram::Error::NotPrimePower(_)) => continue,
            Err(err) => return Err(err.into()),
        };
        for e in 1..=args.e_max {
            if e % field.p() == 0 {
                continue;
            }
            for f in 1..=args.f_max {
                let report = ClassifyReport::new(&TameShape::new(field, e, f)?)?;
                csv.push_str(&render::atlas_row(&report));
                csv.push('\n');
            }
        }
    }
    emit(&csv, args.out.as_deref())
}

/// Shared validation for the grid-walking commands.
fn check_grid(q_max: u64, e_max: u64, f_max: u64) -> Result<(), CliError> {
    if q_max == 0 || e_max == 0 || f_max == 0 {
        return Err(CliError::Input("grid bounds must be positive".into()));
    }
    let cells = q_max.checked_mul(e_max).and_then(|qe| qe.checked_mul(f_max));
    if !matches!(cells, Some(c) if c <= GRID_BOUND) {
        return Err(CliError::Input(format!(
            "grid too large: q-max * e-max * f-max must stay at or below {GRID_BOUND}"
        )));
    }
    Ok(())
}

fn cmd_mass(args: MassArgs) -> Result<(), CliError> {
    reject_csv(args.format, "mass")?;
    let report = tame_mass(LocalField::new(args.q)?, args.e)?;
    let data = match args.format {
        Format::Json => render::mass_json(&report),
        Format::Text | Format::Csv => render::mass_text(&report),
    };
    emit(&data, args.out.as_deref())
}

fn cmd_l3(args: L3Args) -> Result<(), CliError> {
    reject_csv(args.format, "l3")?;
    let report = classify_l3(LocalField::new(args.q)?, args.l, args.include_abelian)?;
    let data = match args.format {
        Format::Json => render::l3_json(&report),
        Format::Text | Format::Csv => render::l3_text(&report),
    };
    emit(&data, args.out.as_deref())
}

fn cmd_cohomology(args: CohomologyArgs) -> Result<(), CliError> {
    reject_csv(args.format, "cohomology")?;
    let action = CyclicAction::from_u64(args.m, args.n, args.a)?;
    let data = match args.format {
        Format::Json => render::cohomology_json(&action),
        Format::Text | Format::Csv => render::cohomology_text(&action),
    };
    emit(&data, args.out.as_deref())
}

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    check_grid(args.q_max, args.e_max, args.f_max)?;
    oracle::run_all(&oracle::OracleBounds {
        q_max: args.q_max,
        e_max: args.e_max,
        f_max: args.f_max,
        cocycle_max: args.cocycle_max,
        group_max: args.group_max,
    })
}

fn reject_csv(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Input(format!(
            "{command} has no CSV form; use --format json or --format text"
        )));
    }
    Ok(())
}

fn emit(data: &str, out: Option<&Path>) -> Result<(), CliError> {
    use std::io::Write as _;
    match out {
        Some(path) => std::fs::write(path, data)
            .map_err(|err| CliError::Io(format!("cannot write {}: {err}", path.display()))),
        None => std::io::stdout()
            .write_all(data.as_bytes())
            .map_err(|err| CliError::Io(err.to_string())),
    }
}
