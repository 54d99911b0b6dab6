//! Command-line front end: batch subcommands over JSON files.
//!
//! Every subcommand reads JSON, writes one JSON document (compact by
//! default, `--pretty` for humans), and exits 0 on success, 2 on any
//! validation or parse error, 3 when a configured cap is exceeded.
//! Failures print a one-line JSON diagnostic to stderr. Identical inputs
//! produce byte-identical outputs.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use beadcalc::format;
use beadcalc::{
    builtin_t, builtin_x, canonicalize, hair, insert, kernel_check, lambda_mult,
    split_by_bead_degree, DiagramKey, EngineError, LambdaElement, Limits, LinComb, Quotient,
    QuotientCache, SectorSpec,
};

#[derive(Parser)]
#[command(
    name = "beadcalc",
    version,
    about = "Exact calculator for spaces of uni-trivalent diagrams with beads"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest diagram degree the enumerator will accept.
    #[arg(long, global = true, env = "BEADCALC_MAX_DEGREE", value_name = "D")]
    max_degree: Option<usize>,

    /// Largest truncation order for hair expansions.
    #[arg(long, global = true, value_name = "D")]
    max_truncation: Option<usize>,

    /// Largest degree for Λ-element constructions.
    #[arg(long, global = true, value_name = "D")]
    max_lambda_degree: Option<usize>,

    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the output to a file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical encoding and antisymmetry sign of one diagram.
    Canon {
        /// Diagram file.
        file: PathBuf,
    },
    /// Dimension of one graded piece of the diagram space modulo IHX.
    Dim(DimArgs),
    /// Normal form of a combination modulo antisymmetry and IHX.
    Reduce {
        /// Combination file.
        file: PathBuf,
    },
    /// Split a beaded combination into its bead-degree graded pieces.
    BeadSplit {
        /// Beaded combination file.
        file: PathBuf,
    },
    /// Hair expansion of a beaded combination, reduced degree by degree.
    Hair {
        /// Beaded combination file.
        file: PathBuf,
        /// Total degree at which the expansion is truncated.
        #[arg(long, value_name = "D")]
        truncate: usize,
    },
    /// Report, degree by degree, whether the hair image vanishes.
    KernelCheck {
        /// Beaded combination file.
        file: PathBuf,
        /// Total degree at which the expansion is truncated.
        #[arg(long, value_name = "D")]
        truncate: usize,
    },
    /// Λ-algebra elements and operations.
    Lambda {
        #[command(subcommand)]
        op: LambdaOp,
    },
}

#[derive(Args)]
struct DimArgs {
    /// Diagram degree of the sector.
    #[arg(long)]
    degree: usize,
    /// Number of legs (unlabeled hair unless --named).
    #[arg(long, default_value_t = 0)]
    legs: usize,
    /// Restrict to connected diagrams.
    #[arg(long)]
    connected: bool,
    /// Legs named 1..=N on connected diagrams with a trivalent vertex.
    #[arg(long)]
    named: bool,
}

#[derive(Subcommand)]
enum LambdaOp {
    /// The triangle generator t.
    T,
    /// The ladder generator x_N (x_1 = t).
    X {
        /// Number of rungs.
        #[arg(value_name = "N")]
        n: usize,
    },
    /// Product of two Λ elements.
    Mult {
        /// Combination file of the first factor.
        a: PathBuf,
        /// Combination file of the second factor.
        b: PathBuf,
    },
    /// Insert a Λ element at a trivalent vertex of a host diagram.
    Insert {
        /// Trivalent vertex of the host that is replaced.
        #[arg(long, value_name = "V")]
        at: usize,
        /// Combination file of the Λ element.
        lambda: PathBuf,
        /// Diagram file of the host.
        host: PathBuf,
    },
    /// Check the antisymmetry certificate of a would-be Λ element.
    Verify {
        /// Combination file.
        file: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error("{path}: {err}")]
    Json {
        path: PathBuf,
        err: serde_json::Error,
    },
    #[error("could not write output: {0}")]
    Write(std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Engine(EngineError::CapExceeded { .. }) => "cap-exceeded",
            Failure::Engine(_) | Failure::Invalid(_) => "validation",
            Failure::Json { .. } => "parse",
            Failure::Io { .. } | Failure::Write(_) => "io",
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Engine(EngineError::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            return fail(Failure::Invalid(e.to_string()));
        }
        Err(e) => {
            // --help and --version print as usual.
            e.exit();
        }
    };
    let limits = match resolve_limits(&cli) {
        Ok(l) => l,
        Err(f) => return fail(f),
    };
    match execute(&cli.command, limits).and_then(|v| emit(&cli, &v)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": f.to_string(), "kind": f.kind() }));
    ExitCode::from(f.code())
}

fn resolve_limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Some(d) = cli.max_degree {
        limits.max_degree = d;
    }
    if let Some(t) = cli.max_truncation {
        limits.max_truncation = t;
    }
    if let Some(x) = cli.max_lambda_degree {
        limits.max_lambda_degree = x;
    }
    if limits.max_degree == 0 || limits.max_truncation == 0 || limits.max_lambda_degree == 0 {
        return Err(Failure::Invalid("caps must be positive".into()));
    }
    Ok(limits)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|err| Failure::Io {
        path: path.to_owned(),
        err,
    })?;
    serde_json::from_str(&text).map_err(|err| Failure::Json {
        path: path.to_owned(),
        err,
    })
}

fn emit(cli: &Cli, value: &Value) -> Result<(), Failure> {
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON values serialize");
    text.push('\n');
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|err| Failure::Io {
            path: path.clone(),
            err,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(Failure::Write),
    }
}

fn execute(cmd: &Command, limits: Limits) -> Result<Value, Failure> {
    let cache = QuotientCache::new(limits);
    match cmd {
        Command::Canon { file } => {
            let d = format::diagram_from_json(&read_json(file)?).map_err(EngineError::from)?;
            let form = canonicalize(&d);
            Ok(json!({
                "encoding": form.encoding.to_hex(),
                "sign": form.sign.as_i8(),
            }))
        }
        Command::Dim(args) => {
            let sector = if args.named {
                SectorSpec::named(args.degree, args.legs)
            } else {
                SectorSpec::hairy(args.degree, args.legs, args.connected)
            };
            let q = Quotient::build(sector, &limits)?;
            Ok(json!({
                "degree": args.degree,
                "legs": args.legs,
                "connected": args.connected || args.named,
                "named": args.named,
                "classes": q.reps.len(),
                "relation_rank": q.span.rank(),
                "dimension": q.dimension(),
            }))
        }
        Command::Reduce { file } => {
            let v = format::lincomb_from_json(&read_json(file)?)?;
            // Reduce each graded sector (degree, leg multiset) in its own
            // quotient; the sectors do not interact.
            let mut sectors: BTreeMap<_, LinComb<DiagramKey>> = BTreeMap::new();
            for (key, coeff) in v.terms() {
                let rep = key.decode().map_err(EngineError::from)?;
                sectors
                    .entry((rep.degree(), rep.leg_multiset()))
                    .or_default()
                    .add_term(key.clone(), coeff.clone());
            }
            let mut out = LinComb::zero();
            for ((degree, legs), piece) in sectors {
                let q = cache.get(SectorSpec::new(degree, legs, false))?;
                out.add(&q.reduce(piece));
            }
            Ok(format::lincomb_to_json(&out))
        }
        Command::BeadSplit { file } => {
            let v = format::beaded_lincomb_from_json(&read_json(file)?)?;
            let pieces: Vec<Value> = split_by_bead_degree(&v)
                .into_iter()
                .map(|(p, piece)| {
                    json!({
                        "bead_degree": p,
                        "terms": format::beaded_lincomb_to_json(&piece),
                    })
                })
                .collect();
            Ok(Value::Array(pieces))
        }
        Command::Hair { file, truncate } => {
            let v = format::beaded_lincomb_from_json(&read_json(file)?)?;
            let image = hair(&v, *truncate, &cache)?;
            let pieces: Vec<Value> = (0..=*truncate)
                .map(|d| {
                    let piece = image.degree_piece(d);
                    json!({
                        "degree": d,
                        "is_zero": piece.is_zero(),
                        "terms": format::lincomb_to_json(&piece),
                    })
                })
                .collect();
            Ok(json!({ "truncation": truncate, "pieces": pieces }))
        }
        Command::KernelCheck { file, truncate } => {
            let v = format::beaded_lincomb_from_json(&read_json(file)?)?;
            let report = kernel_check(&v, *truncate, &cache)?;
            let in_kernel = report.values().all(|&z| z);
            let pieces: Vec<Value> = report
                .iter()
                .map(|(&d, &z)| json!({ "degree": d, "is_zero": z }))
                .collect();
            Ok(json!({
                "truncation": truncate,
                "pieces": pieces,
                "in_kernel": in_kernel,
            }))
        }
        Command::Lambda { op } => lambda_op(op, &cache),
    }
}

fn read_lambda(path: &Path, cache: &QuotientCache) -> Result<LambdaElement, Failure> {
    let v = format::lincomb_from_json(&read_json(path)?)?;
    Ok(LambdaElement::certified(v, cache)?)
}

fn lambda_op(op: &LambdaOp, cache: &QuotientCache) -> Result<Value, Failure> {
    match op {
        LambdaOp::T => Ok(format::lincomb_to_json(builtin_t(cache)?.value())),
        LambdaOp::X { n } => {
            if *n == 0 {
                return Err(Failure::Invalid("ladders start at x_1".into()));
            }
            Ok(format::lincomb_to_json(builtin_x(*n, cache)?.value()))
        }
        LambdaOp::Mult { a, b } => {
            let ea = read_lambda(a, cache)?;
            let eb = read_lambda(b, cache)?;
            Ok(format::lincomb_to_json(lambda_mult(&ea, &eb, cache)?.value()))
        }
        LambdaOp::Insert { at, lambda, host } => {
            let el = read_lambda(lambda, cache)?;
            let host =
                format::diagram_from_json(&read_json(host)?).map_err(EngineError::from)?;
            Ok(format::lincomb_to_json(&insert(&el, &host, *at)?))
        }
        LambdaOp::Verify { file } => {
            let v = format::lincomb_from_json(&read_json(file)?)?;
            match LambdaElement::certified(v, cache) {
                Ok(_) => Ok(json!({ "certified": true })),
                Err(e @ (EngineError::NotInF3 | EngineError::NotAntisymmetric { .. })) => {
                    Ok(json!({ "certified": false, "reason": e.to_string() }))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}
