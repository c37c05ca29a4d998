//! Command-line front end: generate catalog data, verify files, print reports.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (or is
//! unsupported), 2 on usage, input or parse errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vafa_core::battery::{
    check_report, exponent_report, fpdim_report, full_report, vafa_verb_report, BatteryOptions, DimSelection,
};
use vafa_core::catalog::{generate, CatalogFamily};
use vafa_core::io::{modular_to_json, parse_input, Input};
use vafa_core::modular::ModularData;
use vafa_core::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vafa",
    version,
    about = "Exact verification of fusion rings and modular data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write catalog modular data as JSON.
    Generate(GenerateArgs),
    /// Run every ring-level and modular check.
    Check(InputArgs),
    /// Frobenius-Perron dimensions.
    Fpdim(InputArgs),
    /// Twist orders against the global dimension.
    Vafa(InputArgs),
    /// Braiding spectrum and exponent.
    Exponent(InputArgs),
    /// All checks plus every computed invariant.
    Report(InputArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// trivial, semion, fibonacci, ising, toric_code, su2, pointed (or a full spec like su2:3)
    #[arg(long)]
    family: String,
    /// Level k for su2.
    #[arg(long)]
    level: Option<u32>,
    /// Order n for pointed.
    #[arg(long)]
    order: Option<u64>,
    /// Quadratic form exponent for pointed.
    #[arg(long)]
    form: Option<i64>,
    /// Twist exponent of τ for fibonacci (2 or 3).
    #[arg(long)]
    twist: Option<i64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DimArg {
    Categorical,
    Fp,
    Both,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Path to a JSON file, or `catalog:<spec>` (e.g. catalog:su2:3).
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Tolerance for floating-point checks.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Dimension function for the determinant identities.
    #[arg(long = "dimension-function", value_enum, default_value_t = DimArg::Both)]
    dimension_function: DimArg,
}

impl InputArgs {
    fn options(&self) -> Result<BatteryOptions, String> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(format!("--tolerance must be a positive number, got {}", self.tolerance));
        }
        Ok(BatteryOptions {
            tolerance: self.tolerance,
            dimensions: match self.dimension_function {
                DimArg::Categorical => DimSelection::Categorical,
                DimArg::Fp => DimSelection::FrobeniusPerron,
                DimArg::Both => DimSelection::Both,
            },
            ..BatteryOptions::default()
        })
    }
}

fn family_spec(args: &GenerateArgs) -> Result<CatalogFamily, String> {
    let base = args.family.trim().to_ascii_lowercase();
    let spec = if base.contains(':') {
        base
    } else {
        match base.replace('-', "_").as_str() {
            "su2" | "su2_level_k" => {
                let level = args.level.ok_or("--family su2 needs --level")?;
                format!("su2:{level}")
            }
            "pointed" | "pointed_zn" => {
                let order = args.order.ok_or("--family pointed needs --order")?;
                match args.form {
                    Some(k) => format!("pointed:{order}:{k}"),
                    None => format!("pointed:{order}"),
                }
            }
            "fibonacci" => format!("fibonacci:{}", args.twist.unwrap_or(2)),
            _ => base,
        }
    };
    spec.parse()
        .map_err(|e: vafa_core::catalog::CatalogError| e.to_string())
}

fn load(input: &str) -> Result<Input, String> {
    if let Some(spec) = input.strip_prefix("catalog:") {
        let family: CatalogFamily = spec
            .parse()
            .map_err(|e: vafa_core::catalog::CatalogError| e.to_string())?;
        return generate(&family).map(Input::Modular).map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?;
    parse_input(&text).map_err(|e| format!("{input}: {e}"))
}

fn modular(input: Input, verb: &str) -> Result<ModularData, String> {
    match input {
        Input::Modular(md) => Ok(md),
        Input::Ring { .. } => Err(format!("`{verb}` needs modular data (twists and smat)")),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

fn run_input(args: &InputArgs, verb: &str, out: &mut dyn Write) -> Result<i32, String> {
    let opts = args.options()?;
    let input = load(&args.input)?;
    let report = match verb {
        "check" => check_report(&input, &opts),
        "fpdim" => fpdim_report(&input, &opts),
        "vafa" => vafa_verb_report(&modular(input, verb)?, &opts),
        "exponent" => exponent_report(&modular(input, verb)?),
        _ => full_report(&input, &opts),
    };
    out.write_all(render(&report, args.format).as_bytes())
        .map_err(|e| format!("cannot write report: {e}"))?;
    Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn run_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<i32, String> {
    let family = family_spec(args)?;
    let md = generate(&family).map_err(|e| e.to_string())?;
    let text = modular_to_json(&md);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(EXIT_PASS)
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_PASS;
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => run_generate(a, out),
        Command::Check(a) => run_input(a, "check", out),
        Command::Fpdim(a) => run_input(a, "fpdim", out),
        Command::Vafa(a) => run_input(a, "vafa", out),
        Command::Exponent(a) => run_input(a, "exponent", out),
        Command::Report(a) => run_input(a, "report", out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
