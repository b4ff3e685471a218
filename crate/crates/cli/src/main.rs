//! jlint: exact Jones/averaged-Jones computations and integrality
//! verdicts over PD-coded link diagrams.
//!
//! Exit codes: 0 = success / check passed, 1 = input or usage error,
//! 2 = a mathematical check failed or was flagged. All arithmetic is
//! exact; output is deterministic.

use clap::{Args, Parser, Subcommand, ValueEnum};
use jlint_core::{
    check_conjecture41, check_prop1, check_prop2, corpus_diagram, eq1_report, format_rational,
    jones_reduced, padic_valuation, parse_pd, phi_brunnian, phi_gsl, phi_knot, phi_series,
    phi_trivial, sublinks_trivial, ConventionBundle, LinkDiagram, PhiResult, SeriesAtOne,
    ValuationReport, Verdict, CORPUS,
};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::{fs, process};

#[derive(Parser)]
#[command(
    name = "jlint",
    version,
    about = "Exact averaged-Jones polynomial and integrality checks for PD-coded links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Jones polynomial of the input diagram
    Jones(DiagramArgs),
    /// Print Phi(L;t) in exact closed form
    Phi(DiagramArgs),
    /// Expand Phi(L;t) at t = 1 and print the coefficients
    Expand(DiagramArgs),
    /// Run an integrality check; exits 2 when the check fails or flags
    #[command(subcommand)]
    Check(CheckCommand),
    /// Inspect the embedded diagram corpus
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Verify a_0..a_mu of the expansion all vanish
    Eq1(DiagramArgs),
    /// Verify the 3-adic coefficient ladder for split unions of knots
    Prop1(DiagramArgs),
    /// Verify 2^(n-2) * a_n is an integer across the expansion
    Prop2(DiagramArgs),
    /// Evaluate n! * phi_n and test membership in 6Z
    Conj41(DiagramArgs),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// One line per embedded diagram
    List,
    /// PD text and facts for one embedded diagram
    Show { name: String },
}

#[derive(Args)]
struct DiagramArgs {
    /// PD file to read; see the repository README for the line format
    file: Option<PathBuf>,
    /// Use an embedded corpus diagram instead of a file
    #[arg(long, conflicts_with = "file")]
    corpus: Option<String>,
    /// Series truncation order
    #[arg(long, default_value_t = 40)]
    order: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Link class; inferred from the diagram when omitted
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Jones variable convention; auto calibrates against the corpus
    #[arg(long, value_enum, default_value_t = ConventionArg::Auto)]
    convention: ConventionArg,
    /// Index n for the n! * phi_n check
    #[arg(short = 'n', default_value_t = 3)]
    n: usize,
    /// Replace the input by a split union of this many copies of it
    #[arg(long, default_value_t = 1)]
    gsl_power: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Knot,
    Brunnian,
    Gsl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Auto,
    Plain,
    Invert,
}

/// Input-level failure; always exits 1.
struct CliError(String);

macro_rules! wrap_errors {
    ($($ty:path),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        })*
    };
}

wrap_errors!(
    jlint_core::PdError,
    jlint_core::BracketError,
    jlint_core::CalibrationError,
    jlint_core::PhiError,
    jlint_core::SeriesError,
    jlint_core::IntegralityError,
    jlint_core::UnknownName,
);

fn main() {
    process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Jones(args) => cmd_jones(&args),
        Command::Phi(args) => cmd_phi(&args),
        Command::Expand(args) => cmd_expand(&args),
        Command::Check(which) => match which {
            CheckCommand::Eq1(args) => cmd_check_eq1(&args),
            CheckCommand::Prop1(args) => cmd_check_prop1(&args),
            CheckCommand::Prop2(args) => cmd_check_prop2(&args),
            CheckCommand::Conj41(args) => cmd_check_conj41(&args),
        },
        Command::Corpus(which) => cmd_corpus(&which),
    }
}

fn input_name(args: &DiagramArgs) -> String {
    match (&args.corpus, &args.file) {
        (Some(name), _) => name.clone(),
        (None, Some(path)) => path.display().to_string(),
        (None, None) => "<none>".into(),
    }
}

fn load_diagram(args: &DiagramArgs) -> Result<LinkDiagram, CliError> {
    let base = match (&args.corpus, &args.file) {
        (Some(name), None) => corpus_diagram(name)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            parse_pd(&text)?
        }
        (None, None) => return Err(CliError("provide a PD file or --corpus NAME".into())),
        (Some(_), Some(_)) => unreachable!("clap rejects --corpus with a file"),
    };
    if args.gsl_power == 0 {
        return Err(CliError("--gsl-power must be at least 1".into()));
    }
    let mut d = base.clone();
    for _ in 1..args.gsl_power {
        d = d.disjoint_union(&base);
    }
    Ok(d)
}

fn convention(args: &DiagramArgs) -> Result<ConventionBundle, CliError> {
    Ok(match args.convention {
        ConventionArg::Auto => ConventionBundle::auto()?,
        ConventionArg::Plain => ConventionBundle::PLAIN,
        ConventionArg::Invert => ConventionBundle::INVERT,
    })
}

/// Rejects multi-component pieces that cannot be fed to the Brunnian
/// formula: nonzero linking numbers are never acceptable, and for
/// mu <= 3 sublink triviality is checked outright.
fn validate_brunnian(d: &LinkDiagram, cfg: ConventionBundle) -> Result<(), CliError> {
    if !d.is_algebraically_split() {
        return Err(CliError(
            "CLASS_UNSUPPORTED: nonzero linking numbers; Phi here covers knots, \
             Brunnian links and split unions of them"
                .into(),
        ));
    }
    if d.mu() <= 3 && !sublinks_trivial(d, cfg)? {
        return Err(CliError(
            "CLASS_UNSUPPORTED: a proper sublink is nontrivial, so the diagram \
             is not Brunnian"
                .into(),
        ));
    }
    Ok(())
}

/// Phi of a diagram treated as a split union; each connected piece is
/// dispatched by its own shape.
fn phi_split(d: &LinkDiagram, cfg: ConventionBundle) -> Result<PhiResult, CliError> {
    let pieces = d.split_components();
    for piece in &pieces {
        if piece.crossing_count() > 0 && piece.mu() >= 2 {
            validate_brunnian(piece, cfg)?;
        }
    }
    Ok(phi_gsl(&pieces, cfg)?)
}

fn compute_phi(
    d: &LinkDiagram,
    args: &DiagramArgs,
    cfg: ConventionBundle,
) -> Result<PhiResult, CliError> {
    match args.class {
        Some(ClassArg::Knot) => Ok(phi_knot(d, cfg)?),
        Some(ClassArg::Brunnian) => {
            if d.mu() >= 2 && d.crossing_count() > 0 {
                validate_brunnian(d, cfg)?;
            }
            Ok(phi_brunnian(d, cfg)?)
        }
        Some(ClassArg::Gsl) => phi_split(d, cfg),
        None => {
            if d.crossing_count() == 0 {
                return Ok(phi_trivial(d.mu()));
            }
            if d.mu() == 1 {
                return Ok(phi_knot(d, cfg)?);
            }
            if d.split_components().len() >= 2 {
                return phi_split(d, cfg);
            }
            if d.mu() > 3 {
                return Err(CliError(
                    "CLASS_UNSUPPORTED: cannot infer Brunnian-ness above 3 components; \
                     pass --class brunnian to declare it"
                        .into(),
                ));
            }
            validate_brunnian(d, cfg)?;
            Ok(phi_brunnian(d, cfg)?)
        }
    }
}

fn verdict_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass => 0,
        Verdict::Fail | Verdict::Flagged => 2,
    }
}

fn print_report(report: &ValuationReport, format: Format) {
    match format {
        Format::Text => println!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.render_csv()),
    }
}

fn series_csv(series: &SeriesAtOne) -> String {
    let mut out = String::from("index,value,v2,v3\n");
    for (i, a) in series.coefficients().iter().enumerate() {
        let v2 = padic_valuation(a, 2).expect("2 is prime");
        let v3 = padic_valuation(a, 3).expect("3 is prime");
        let _ = writeln!(out, "{i},{},{v2},{v3}", format_rational(a));
    }
    out
}

fn cmd_jones(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let v = jones_reduced(&d, cfg)?;
    match args.format {
        Format::Text => println!("{v}"),
        Format::Json => println!(
            "{}",
            json!({
                "input": input_name(args),
                "mu": d.mu(),
                "writhe": d.writhe(),
                "jones": v.to_string(),
            })
        ),
        Format::Csv => {
            return Err(CliError(
                "csv output applies to series; use text or json here".into(),
            ))
        }
    }
    Ok(0)
}

fn cmd_phi(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let phi = compute_phi(&d, args, cfg)?;
    match args.format {
        Format::Text => println!("{phi}"),
        Format::Json => println!(
            "{}",
            json!({
                "input": input_name(args),
                "mu": phi.mu,
                "class": phi.link_class.to_string(),
                "num": phi.num.to_string(),
                "den": phi.den.to_string(),
                "closed_form": phi.to_string(),
            })
        ),
        Format::Csv => {
            return Err(CliError(
                "csv output applies to series; use text or json here".into(),
            ))
        }
    }
    Ok(0)
}

fn cmd_expand(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let phi = compute_phi(&d, args, cfg)?;
    let series = phi_series(&phi, args.order)?;
    match args.format {
        Format::Text => {
            let joined: Vec<String> = series.coefficients().iter().map(format_rational).collect();
            println!("{}", joined.join(","));
        }
        Format::Json => println!(
            "{}",
            json!({
                "input": input_name(args),
                "mu": phi.mu,
                "series": series.to_json(),
            })
        ),
        Format::Csv => print!("{}", series_csv(&series)),
    }
    Ok(0)
}

fn cmd_check_eq1(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let phi = compute_phi(&d, args, cfg)?;
    let series = phi_series(&phi, args.order)?;
    let report = eq1_report(&series, phi.mu)?;
    print_report(&report, args.format);
    Ok(verdict_code(report.verdict))
}

fn cmd_check_prop1(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let pieces = d.split_components();
    let mut knot_factors = 0usize;
    for piece in &pieces {
        if piece.crossing_count() == 0 {
            continue;
        }
        if piece.mu() != 1 {
            return Err(CliError(
                "the valuation ladder applies to split unions of knots; \
                 a multi-component piece is present"
                    .into(),
            ));
        }
        knot_factors += 1;
    }
    let phi = phi_split(&d, cfg)?;
    let series = phi_series(&phi, args.order)?;
    let report = check_prop1(&series, knot_factors)?;
    print_report(&report, args.format);
    Ok(verdict_code(report.verdict))
}

fn cmd_check_prop2(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let phi = compute_phi(&d, args, cfg)?;
    let series = phi_series(&phi, args.order)?;
    let report = check_prop2(&series, args.order);
    print_report(&report, args.format);
    Ok(verdict_code(report.verdict))
}

fn cmd_check_conj41(args: &DiagramArgs) -> Result<i32, CliError> {
    let d = load_diagram(args)?;
    let cfg = convention(args)?;
    let phi = compute_phi(&d, args, cfg)?;
    let series = phi_series(&phi, args.order)?;
    let outcome = check_conjecture41(&series, phi.mu, args.n)?;
    match args.format {
        Format::Text => {
            println!("n = {}", args.n);
            println!("phi_n = {}", format_rational(&outcome.phi_n));
            println!("n! * phi_n = {}", format_rational(&outcome.value));
            println!("in 6Z: {}", outcome.in_6z);
        }
        Format::Json => println!(
            "{}",
            json!({
                "input": input_name(args),
                "n": args.n,
                "mu": phi.mu,
                "phi_n": format_rational(&outcome.phi_n),
                "value": format_rational(&outcome.value),
                "in_6z": outcome.in_6z,
            })
        ),
        Format::Csv => {
            return Err(CliError(
                "csv output applies to series; use text or json here".into(),
            ))
        }
    }
    Ok(if outcome.in_6z { 0 } else { 2 })
}

fn corpus_tags(d: &LinkDiagram) -> String {
    let mut tags: Vec<&str> = Vec::new();
    if d.crossing_count() == 0 {
        tags.push("trivial");
    } else if d.mu() == 1 {
        tags.push("knot");
    }
    if d.mu() >= 2 {
        if d.is_algebraically_split() {
            tags.push("asl");
        }
        if d.mu() <= 3
            && d.is_algebraically_split()
            && sublinks_trivial(d, ConventionBundle::INVERT).unwrap_or(false)
        {
            tags.push("brunnian");
        }
    }
    if d.is_geometrically_split() {
        tags.push("split");
    }
    if tags.is_empty() {
        tags.push("link");
    }
    tags.join(",")
}

fn cmd_corpus(which: &CorpusCommand) -> Result<i32, CliError> {
    match which {
        CorpusCommand::List => {
            for entry in &CORPUS {
                let d = corpus_diagram(entry.name).expect("corpus parses");
                println!(
                    "{:<14} mu={} crossings={:<2} [{}] {}",
                    entry.name,
                    d.mu(),
                    d.crossing_count(),
                    corpus_tags(&d),
                    entry.about,
                );
            }
            Ok(0)
        }
        CorpusCommand::Show { name } => {
            let entry = jlint_core::builtin_corpus(name)?;
            let d = corpus_diagram(name).expect("corpus parses");
            println!("name: {}", entry.name);
            println!("about: {}", entry.about);
            println!("mu: {}", d.mu());
            println!("crossings: {}", d.crossing_count());
            println!("writhe: {}", d.writhe());
            println!("tags: {}", corpus_tags(&d));
            println!("pd:");
            for line in entry.pd.lines() {
                println!("  {}", line.trim());
            }
            Ok(0)
        }
    }
}
