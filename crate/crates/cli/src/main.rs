//! `platforge` command-line front end.
//!
//! Exit codes: 0 success, 1 failed `--assert-window`, 2 input or domain
//! error, 3 resource limit, 4 internal inconsistency.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use platforge::braid::{braid_equal, family_b, family_tilde, BraidWord};
use platforge::diagram::{circular_plat_diagram, closure_diagram, simplify, LinkDiagram, DEFAULT_BUDGET};
use platforge::dynamics::{scaling_scan_with, ScanOptions};
use platforge::invariants::{invariant_report, ReportOptions};
use platforge::{Error, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "platforge", version, about = "Braids, circular plat closures and homological dilatations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid word utilities.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// Link diagrams and their invariants.
    Link {
        #[command(subcommand)]
        op: LinkOp,
    },
    /// Homological dilatations of tilde(b_g) over a range of genera.
    Scan(ScanArgs),
}

#[derive(Subcommand)]
enum BraidOp {
    /// Skew involution.
    Skew { #[arg(long)] n: usize, word: String },
    /// skew(b) b.
    Tilde { #[arg(long)] n: usize, word: String },
    /// Whether the word equals its skew letter by letter.
    Palindromic { #[arg(long)] n: usize, word: String },
    /// b_g = s3 s4 ... s_{2g+1} in B_{2g+2}.
    Family {
        #[arg(long)]
        g: usize,
        /// Print tilde(b_g) instead.
        #[arg(long)]
        tilde: bool,
    },
    /// Equality in the braid group.
    Equal { #[arg(long)] n: usize, first: String, second: String },
    /// Underlying permutation in cycle notation.
    Perm { #[arg(long)] n: usize, word: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Action {
    Invariants,
    Simplify,
    ExportPd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Pd,
    Text,
}

#[derive(Args, Clone)]
struct LinkOpts {
    /// Add an unknot certificate from the simplifier.
    #[arg(long)]
    certify_unknot: bool,
    /// Add the Kauffman bracket (at most 14 crossings).
    #[arg(long)]
    bracket: bool,
    /// Simplifier budget; overrides PLATFORGE_BUDGET.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LinkOp {
    /// Circular plat closure of a braid in B_{2g+2}.
    Plat {
        #[arg(long)]
        g: usize,
        word: String,
        #[arg(value_enum, default_value = "invariants")]
        action: Action,
        #[command(flatten)]
        opts: LinkOpts,
    },
    /// Standard closure of a braid in B_n.
    Closure {
        #[arg(long)]
        n: usize,
        word: String,
        #[arg(value_enum, default_value = "invariants")]
        action: Action,
        #[command(flatten)]
        opts: LinkOpts,
    },
    /// Read a PD file, then run an action on it.
    ImportPd {
        path: PathBuf,
        #[arg(value_enum, default_value = "invariants")]
        action: Action,
        #[command(flatten)]
        opts: LinkOpts,
    },
    /// Invariant report for a PD file.
    Invariants {
        path: PathBuf,
        #[command(flatten)]
        opts: LinkOpts,
    },
    /// Simplify a PD file.
    Simplify {
        path: PathBuf,
        #[command(flatten)]
        opts: LinkOpts,
    },
    /// Canonical PD code of a PD file.
    ExportPd {
        path: PathBuf,
        #[command(flatten)]
        opts: LinkOpts,
    },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    gmin: usize,
    #[arg(long)]
    gmax: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Record wall time per genus (the report is then not reproducible).
    #[arg(long)]
    timing: bool,
    /// Fail unless every g log λ lies in [C1, C2].
    #[arg(long, num_args = 2, value_names = ["C1", "C2"], allow_negative_numbers = true)]
    assert_window: Option<Vec<f64>>,
}

/// Echo of the validated run configuration, embedded in JSON output.
#[derive(Serialize)]
struct RunConfig {
    command: String,
    input: String,
    budget: usize,
    format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

enum Failure {
    Lib(Error),
    Io(String),
    Window(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Window(_) => 1,
        Failure::Io(_) => 2,
        Failure::Lib(e) => match e {
            Error::Parse(_) | Error::Malformed(_) | Error::Domain(_) | Error::Dimension(_) => 2,
            Error::Resource(_) => 3,
            Error::Internal(_) => 4,
        },
    }
}

fn env_budget() -> Result<usize, Failure> {
    match std::env::var("PLATFORGE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Lib(Error::Parse(format!("PLATFORGE_BUDGET=`{v}` is not a nonnegative integer")))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn run_braid(op: BraidOp) -> Outcome {
    let line = match op {
        BraidOp::Skew { n, word } => BraidWord::parse(&word, n)?.skew().to_string(),
        BraidOp::Tilde { n, word } => BraidWord::parse(&word, n)?.tilde().to_string(),
        BraidOp::Palindromic { n, word } => BraidWord::parse(&word, n)?.is_skew_palindromic().to_string(),
        BraidOp::Family { g, tilde } => {
            if tilde {
                family_tilde(g)?.to_string()
            } else {
                family_b(g)?.to_string()
            }
        }
        BraidOp::Equal { n, first, second } => {
            braid_equal(&BraidWord::parse(&first, n)?, &BraidWord::parse(&second, n)?)?.to_string()
        }
        BraidOp::Perm { n, word } => BraidWord::parse(&word, n)?.permutation().to_string(),
    };
    emit(&format!("{line}\n"), None)
}

fn read_pd(path: &PathBuf) -> Result<LinkDiagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(LinkDiagram::from_pd(&text)?)
}

#[derive(Serialize)]
struct SimplifyReport<'a> {
    schema: &'static str,
    config: &'a RunConfig,
    crossings_before: usize,
    crossings_after: usize,
    components: usize,
    pd: String,
}

#[derive(Serialize)]
struct LinkReport<'a, T: Serialize> {
    config: &'a RunConfig,
    #[serde(flatten)]
    report: T,
}

fn run_link_action(command: &str, input: String, d: LinkDiagram, action: Action, opts: LinkOpts) -> Outcome {
    let budget = match opts.budget {
        Some(b) => b,
        None => env_budget()?,
    };
    let format = opts.format.unwrap_or(match action {
        Action::ExportPd => Format::Pd,
        _ => Format::Json,
    });
    let config = RunConfig {
        command: format!("link {command} {}", action.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()),
        input,
        budget,
        format,
        out: opts.out.as_ref().map(|p| p.display().to_string()),
    };
    let text = match action {
        Action::Invariants => {
            let ropts = ReportOptions { certify_budget: opts.certify_unknot.then_some(budget), bracket: opts.bracket };
            let r = invariant_report(&d, ropts)?;
            match format {
                Format::Json => to_json(&LinkReport { config: &config, report: &r }),
                Format::Text => {
                    let mut t = format!(
                        "components: {}\ncrossings: {}\nalexander: {}\ndeterminant: {}\ndouble cover H1: {}\n",
                        r.components, r.crossings, r.alexander, r.determinant, r.double_cover_group
                    );
                    if let Some(c) = r.unknot_certificate {
                        t += &format!("unknot certificate: {}\n", c.as_str());
                    }
                    if let Some(b) = &r.normalized_bracket {
                        t += &format!("normalized bracket: {b}\n");
                    }
                    t
                }
                Format::Pd => d.to_pd(),
                Format::Csv => return Err(Error::Domain("csv output is only available for scan".into()).into()),
            }
        }
        Action::Simplify => {
            let s = simplify(&d, budget);
            match format {
                Format::Pd => s.to_pd(),
                Format::Json | Format::Text => to_json(&SimplifyReport {
                    schema: SCHEMA_VERSION,
                    config: &config,
                    crossings_before: d.crossing_count(),
                    crossings_after: s.crossing_count(),
                    components: s.component_count(),
                    pd: s.to_pd(),
                }),
                Format::Csv => return Err(Error::Domain("csv output is only available for scan".into()).into()),
            }
        }
        Action::ExportPd => match format {
            Format::Pd | Format::Text => d.to_pd(),
            _ => return Err(Error::Domain("export-pd writes PD text only".into()).into()),
        },
    };
    emit(&text, opts.out.as_ref())
}

fn run_link(op: LinkOp) -> Outcome {
    match op {
        LinkOp::Plat { g, word, action, opts } => {
            if g == 0 {
                return Err(Error::Domain("plat closures need g >= 1".into()).into());
            }
            let b = BraidWord::parse(&word, 2 * g + 2)?;
            let d = circular_plat_diagram(&b)?;
            run_link_action("plat", format!("{}:{word}", 2 * g + 2), d, action, opts)
        }
        LinkOp::Closure { n, word, action, opts } => {
            let b = BraidWord::parse(&word, n)?;
            run_link_action("closure", format!("{n}:{word}"), closure_diagram(&b), action, opts)
        }
        LinkOp::ImportPd { path, action, opts } => {
            let d = read_pd(&path)?;
            run_link_action("import-pd", path.display().to_string(), d, action, opts)
        }
        LinkOp::Invariants { path, opts } => {
            let d = read_pd(&path)?;
            run_link_action("invariants", path.display().to_string(), d, Action::Invariants, opts)
        }
        LinkOp::Simplify { path, opts } => {
            let d = read_pd(&path)?;
            run_link_action("simplify", path.display().to_string(), d, Action::Simplify, opts)
        }
        LinkOp::ExportPd { path, opts } => {
            let d = read_pd(&path)?;
            run_link_action("export-pd", path.display().to_string(), d, Action::ExportPd, opts)
        }
    }
}

#[derive(Serialize)]
struct ScanJson<'a> {
    config: &'a RunConfig,
    #[serde(flatten)]
    report: &'a platforge::dynamics::ScalingReport,
}

fn run_scan(args: ScanArgs) -> Outcome {
    let budget = env_budget()?;
    let format = args.format.unwrap_or_else(|| match &args.out {
        Some(p) if p.extension().is_some_and(|e| e == "json") => Format::Json,
        _ => Format::Csv,
    });
    if !matches!(format, Format::Csv | Format::Json) {
        return Err(Error::Domain("scan writes csv or json".into()).into());
    }
    if let Some(w) = &args.assert_window {
        if w[0] > w[1] {
            return Err(Error::Domain(format!("empty window [{}, {}]", w[0], w[1])).into());
        }
    }
    let report = scaling_scan_with(args.gmin, args.gmax, ScanOptions { timing: args.timing, budget })?;
    let config = RunConfig {
        command: "scan".into(),
        input: format!("gmin={} gmax={}", args.gmin, args.gmax),
        budget,
        format,
        out: args.out.as_ref().map(|p| p.display().to_string()),
    };
    let text = match format {
        Format::Json => to_json(&ScanJson { config: &config, report: &report }),
        _ => report.to_csv(),
    };
    emit(&text, args.out.as_ref())?;
    if let (Some(w), Some((lo, hi))) = (&args.assert_window, report.window()) {
        if lo < w[0] || hi > w[1] {
            return Err(Failure::Window(format!(
                "g log lambda ranges over [{lo:.12}, {hi:.12}], outside [{}, {}]",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Braid { op } => run_braid(op),
        Command::Link { op } => run_link(op),
        Command::Scan(args) => run_scan(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Lib(e) => e.to_string(),
                Failure::Io(m) => format!("io error: {m}"),
                Failure::Window(m) => format!("window check failed: {m}"),
            };
            eprintln!("platforge: {msg}");
            ExitCode::from(exit_code(&f))
        }
    }
}
