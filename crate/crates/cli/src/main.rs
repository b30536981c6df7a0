//! `ordbell`: print polynomial families, convert between bases, list number
//! tables and run the identity checks.
//!
//! Exit codes: 0 success, 1 a theorem-path mismatch, 2 a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use ordbell::exact::combin::stirling2_row;
use ordbell::exact::limits::{check_degree, set_max_degree, DEFAULT_MAX_DEGREE};
use ordbell::exact::{parse_rational, Coeff, LambdaMode, LambdaPoly, Rational, XPoly};
use ordbell::families::{family_poly, number_table, FamilyId, FamilyKind};
use ordbell::identities::{reports_to_json, run_suite, IdentityId, IdentityReport, SuiteConfig, Verdict};
use ordbell::represent::json::{lambda_from_json, parse_poly, poly_to_json, AnyPoly};
use ordbell::represent::{represent_any, FormulaVariant};
use ordbell::Error;

#[derive(Parser)]
#[command(name = "ordbell", version, about = "Exact ordered Bell and degenerate ordered Bell polynomial toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Largest polynomial degree or series order any command may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    /// Seed for the random points at which mismatch witnesses are sampled.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print one member of a polynomial family.
    Family(FamilyArgs),
    /// Expand a polynomial in a target basis.
    Represent(RepresentArgs),
    /// Print the numbers P_n(0) of a family, or a row of Stirling numbers.
    Numbers(NumbersArgs),
    /// Run the identity checks and write a report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// bernoulli, euler, genocchi, ordered-bell, degenerate-ordered-bell,
    /// falling-factorial or monomial.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    /// Order r of the ordered Bell kinds.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// `sym` or a nonzero rational; required by the λ-dependent kinds.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Args)]
struct RepresentArgs {
    /// Polynomial JSON document.
    #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
    input: Option<PathBuf>,
    /// Inline λ-free coefficients `a0,a1,...`, lowest degree first.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Target basis kind.
    #[arg(long)]
    basis: String,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// functional, iterated-difference, factored-difference, binomial-sum or
    /// stirling-derivative.
    #[arg(long, default_value = "stirling-derivative")]
    variant: String,
}

#[derive(Args)]
struct NumbersArgs {
    /// A family kind, or `stirling2` for the row S2(n, 0..=n).
    #[arg(long)]
    kind: String,
    /// How many numbers, starting at index 0.
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// Row index for `stirling2`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity tags to run (comma separated or repeated); all by default.
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    r_max: usize,
    /// λ modes for the degenerate identities; `sym`, 1/3 and -2/5 by default.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Vec<String>,
    /// Where to write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Command failure, mapped to an exit code.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_max_degree(cli.max_degree);
    let result = match &cli.command {
        Command::Family(args) => cmd_family(&cli, args),
        Command::Represent(args) => cmd_represent(&cli, args),
        Command::Numbers(args) => cmd_numbers(&cli, args),
        Command::Verify(args) => cmd_verify(&cli, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_lambda(text: Option<&str>) -> Result<LambdaMode, Error> {
    lambda_from_json(text)
}

fn family_id(kind: &str, r: usize, lambda: Option<&str>) -> Result<FamilyId, Error> {
    FamilyId::new(kind.parse::<FamilyKind>()?, r, parse_lambda(lambda)?)
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("documents serialize"));
}

fn cmd_family(cli: &Cli, args: &FamilyArgs) -> Outcome {
    let id = family_id(&args.kind, args.r, args.lambda.as_deref())?;
    match &id.lambda {
        LambdaMode::Symbolic => print_poly(cli, &family_poly::<LambdaPoly>(&id, args.n)?, &id.lambda),
        lambda => print_poly(cli, &family_poly::<Rational>(&id, args.n)?, lambda),
    }
    Ok(())
}

fn print_poly<C: Coeff>(cli: &Cli, poly: &XPoly<C>, lambda: &LambdaMode) {
    match cli.format {
        Format::Text => println!("{poly}"),
        Format::Json => print_json(&poly_to_json(poly, lambda)),
    }
}

fn read_input(args: &RepresentArgs) -> Result<AnyPoly, Error> {
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
        return parse_poly(&text);
    }
    let coeffs = args.coeffs.as_deref().unwrap_or_default();
    let values = coeffs
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AnyPoly::Rational { lambda: LambdaMode::NotApplicable, poly: XPoly::new(values) })
}

fn cmd_represent(cli: &Cli, args: &RepresentArgs) -> Outcome {
    let target = family_id(&args.basis, args.r, args.lambda.as_deref())?;
    let variant = args.variant.parse::<FormulaVariant>()?;
    let input = read_input(args)?;
    let rep = represent_any(&input, &target, variant)?;
    match cli.format {
        Format::Text => {
            let basis = rep.basis();
            let mut header = format!("basis {} r={}", basis.kind, basis.order);
            if basis.lambda.is_applicable() {
                header.push_str(&format!(" lambda={}", basis.lambda));
            }
            println!("{header}");
            for (k, a) in rep.coeff_strings().iter().enumerate() {
                println!("a_{k} = {a}");
            }
        }
        Format::Json => print_json(&rep.to_json()),
    }
    Ok(())
}

fn cmd_numbers(cli: &Cli, args: &NumbersArgs) -> Outcome {
    let (label, values): (String, Vec<String>) = if args.kind == "stirling2" {
        let n = args.n.ok_or_else(|| Error::usage("stirling2 needs --n"))?;
        check_degree(n)?;
        (format!("stirling2 n={n}"), stirling2_row(n).iter().map(ToString::to_string).collect())
    } else {
        if args.n.is_some() {
            return Err(Failure::Usage("--n is only used with --kind stirling2".into()));
        }
        if args.count > 0 {
            check_degree(args.count - 1)?;
        }
        let id = family_id(&args.kind, args.r, args.lambda.as_deref())?;
        let values = match id.lambda {
            LambdaMode::Symbolic => strings(&number_table::<LambdaPoly>(&id, args.count)?.values),
            _ => strings(&number_table::<Rational>(&id, args.count)?.values),
        };
        (id.kind.to_string(), values)
    };
    match cli.format {
        Format::Text => {
            for (n, v) in values.iter().enumerate() {
                println!("{n} {v}");
            }
        }
        Format::Json => print_json(&json!({ "kind": label, "values": values })),
    }
    Ok(())
}

fn strings<C: ToString>(values: &[C]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let filter = args.filter.iter().map(|t| t.parse::<IdentityId>()).collect::<Result<Vec<_>, _>>()?;
    let mut config = SuiteConfig { filter, max_n: args.max_n, r_max: args.r_max, ..SuiteConfig::default() };
    if !args.lambda.is_empty() {
        config.lambda_modes = args.lambda.iter().map(|l| parse_lambda(Some(l))).collect::<Result<_, _>>()?;
    }
    let reports = run_suite(&config)?;
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&reports_to_json(&reports)).expect("report serializes");
        fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut rng = StdRng::seed_from_u64(cli.seed);
    match cli.format {
        Format::Text => print_reports_text(&reports, &mut rng),
        Format::Json => {
            let mut doc = reports_to_json(&reports);
            strip_timing(&mut doc);
            print_json(&doc);
        }
    }
    if reports.iter().all(IdentityReport::passed) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn strip_timing(doc: &mut Value) {
    if let Some(reports) = doc["reports"].as_array_mut() {
        for report in reports.iter_mut().filter_map(Value::as_object_mut) {
            report.remove("elapsed_ms");
        }
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    Rational::new(rng.gen_range(-100..=100).into(), rng.gen_range(1..=37).into())
}

/// `witness(x) = value` at a random point, showing the difference is nonzero.
fn sample_witness(witness: &AnyPoly, rng: &mut StdRng) -> String {
    let x = random_rational(rng);
    match witness {
        AnyPoly::Rational { poly, .. } => format!("x = {x}: {}", poly.eval(&x)),
        AnyPoly::Symbolic(poly) => {
            let lambda = random_rational(rng);
            let value = poly.map(|c| c.eval(&lambda)).eval(&x);
            format!("x = {x}, lambda = {lambda}: {value}")
        }
    }
}

fn print_reports_text(reports: &[IdentityReport], rng: &mut StdRng) {
    for report in reports {
        let printed = report.printed_form.map_or("n/a", Verdict::as_str);
        println!("{} {}: theorem path {}, printed form {printed}", report.id, report.params, report.theorem_path);
        for (label, witness) in [("theorem-path", &report.witness), ("printed-form", &report.printed_witness)] {
            if let Some(w) = witness {
                println!("  {label} witness: {w}");
                println!("  {label} witness at {}", sample_witness(w, rng));
            }
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let printed = reports.iter().filter(|r| r.printed_form == Some(Verdict::Mismatch)).count();
    println!(
        "{} checks: {} theorem-path mismatches, {} printed-form mismatches",
        reports.len(),
        failures,
        printed
    );
    println!("status: {}", if failures == 0 { "pass" } else { "mismatch" });
}
