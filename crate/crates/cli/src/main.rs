mod cache_file;
mod report;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use schurlc::logconcavity::{
    as_expansions, check_strong_lc_q, check_strong_schur_lc, conjecture1_scan, conjecture2_scan, diagonal_terms,
    theorem1_hypotheses, theorem1_terms, CheckReport, Conjecture1Bounds, Conjecture2Bounds, FamilySpec, Verdict,
};
use schurlc::lr::lr_coefficient;
use schurlc::qring::quantum_binomial;
use schurlc::{Execution, IntVector, LrCache, Partition, SchurExpansion};

use report::{attach_check, render_text, PointJson, Report, Summary};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("corrupt cache file, line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(..) => 3,
            CliError::Corrupt { .. } => 4,
        }
    }
}

impl From<schurlc::Error> for CliError {
    fn from(e: schurlc::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Exact Schur-function arithmetic and log-concavity checks.
#[derive(Debug, Parser)]
#[command(name = "schurlc", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    output: Output,
    /// Include certificates in reports.
    #[arg(long, global = true)]
    verbose: bool,
    /// LR cache file, read at start and rewritten at exit.
    #[arg(long, env = "SCHURLC_CACHE", global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for scans; 1 runs sequentially.
    #[arg(long, global = true)]
    parallelism: Option<NonZeroUsize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^θ_{μν}.
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        theta: Partition,
    },
    /// Schur expansion of s_μ s_ν, optionally restricted to n variables.
    Product {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Quantum binomial coefficient.
    Qbinom {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Quantum binomials along a diagonal of slope α/β.
    Diagonal {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        imax: Option<usize>,
    },
    /// Strong Schur log-concavity of one family.
    #[command(group(ArgGroup::new("family_kind").required(true).args(["family", "theorem1"])))]
    Check {
        /// `λ;β;α`, e.g. `[3,3];[3];[1,1]`.
        #[arg(long)]
        family: Option<String>,
        /// `λ;k;j`, e.g. `[2,1];1;1`.
        #[arg(long)]
        theorem1: Option<String>,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        imax: usize,
    },
    /// Exhaustive scans over bounded parameter boxes.
    #[command(group(ArgGroup::new("scan_kind").required(true).args(["conjecture1", "conjecture2"])))]
    Scan {
        #[arg(long)]
        conjecture1: bool,
        #[arg(long)]
        conjecture2: bool,
        #[command(flatten)]
        bounds: ScanBounds,
    },
}

#[derive(Debug, Args)]
struct ScanBounds {
    /// Largest |λ| (Conjecture 1).
    #[arg(long, default_value_t = 5)]
    max_size: u32,
    /// Largest ℓ(λ) (Conjecture 1).
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    alpha_min: i64,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    alpha_max: i64,
    /// Largest |β| (Conjecture 1).
    #[arg(long, default_value_t = 4)]
    max_beta: u32,
    /// Also scan ℓ(α) = ℓ(λ) and β₁ > λ_ℓ(λ) (Conjecture 1).
    #[arg(long)]
    include_out_of_regime: bool,
    /// Sequence length.
    #[arg(long, default_value_t = 4)]
    terms: usize,
    #[arg(long, default_value_t = 1)]
    imax: usize,
    /// Largest n (Conjecture 2).
    #[arg(long, default_value_t = 7, allow_hyphen_values = true)]
    max_n: i64,
    /// Slopes α (Conjecture 2).
    #[arg(long, value_delimiter = ',', default_values_t = [-1, 0, 1, 2], allow_hyphen_values = true)]
    alphas: Vec<i64>,
    /// Slopes β (Conjecture 2).
    #[arg(long, value_delimiter = ',', default_values_t = [0, 1, 2], allow_hyphen_values = true)]
    betas: Vec<i64>,
}

struct Context {
    verbose: bool,
    exec: Execution,
}

/// A rendered report and whether it counts as a failure.
struct Outcome {
    report: Report,
    failed: bool,
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn split3(literal: &str, what: &str) -> Result<[String; 3], CliError> {
    let parts: Vec<String> = literal.split(';').map(|s| s.trim().to_string()).collect();
    parts
        .try_into()
        .map_err(|_| CliError::Usage(format!("{what} expects three `;`-separated fields, got `{literal}`")))
}

fn parse<T: std::str::FromStr<Err = schurlc::Error>>(s: &str) -> Result<T, CliError> {
    s.parse().map_err(CliError::from)
}

fn parse_u32(s: &str) -> Result<u32, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("`{s}` is not a non-negative integer")))
}

fn check_outcome(mut report: Report, check: &CheckReport, ctx: &Context) -> Outcome {
    attach_check(&mut report, check, ctx.verbose);
    Outcome {
        failed: check.verdict == Verdict::Fails,
        report,
    }
}

fn run(command: Command, ctx: &Context) -> Result<Outcome, CliError> {
    match command {
        Command::Lr { mu, nu, theta } => {
            let c = lr_coefficient(&mu, &nu, &theta);
            let mut report = Report::new(
                "lr",
                params(&[
                    ("mu", json!(mu.to_string())),
                    ("nu", json!(nu.to_string())),
                    ("theta", json!(theta.to_string())),
                ]),
                "ok",
            );
            report.result = Some(json!(c.to_string()));
            Ok(Outcome { report, failed: false })
        }
        Command::Product { mu, nu, vars } => {
            let mut f = SchurExpansion::schur(mu.clone()).multiply(&SchurExpansion::schur(nu.clone()));
            if let Some(n) = vars {
                f = f.restrict_vars(n);
            }
            let mut report = Report::new(
                "product",
                params(&[
                    ("mu", json!(mu.to_string())),
                    ("nu", json!(nu.to_string())),
                    ("vars", json!(vars)),
                ]),
                "ok",
            );
            report.result = Some(json!(f.to_string()));
            Ok(Outcome { report, failed: false })
        }
        Command::Qbinom { n, k } => {
            let poly = quantum_binomial(n, k)?;
            let mut report = Report::new("qbinom", params(&[("n", json!(n)), ("k", json!(k))]), "ok");
            report.result = Some(json!(poly.to_string()));
            Ok(Outcome { report, failed: false })
        }
        Command::Diagonal {
            n,
            k,
            alpha,
            beta,
            len,
            imax,
        } => {
            quantum_binomial(n, k)?;
            let terms = diagonal_terms(n, k, alpha, beta, len);
            let mut report = Report::new(
                "diagonal",
                params(&[
                    ("n", json!(n)),
                    ("k", json!(k)),
                    ("alpha", json!(alpha)),
                    ("beta", json!(beta)),
                    ("len", json!(len)),
                    ("imax", json!(imax)),
                ]),
                "ok",
            );
            report.result = Some(Value::Array(terms.iter().map(|t| json!(t.to_string())).collect()));
            match imax {
                Some(i_max) => {
                    let check = check_strong_lc_q(&terms, i_max)?;
                    Ok(check_outcome(report, &check, ctx))
                }
                None => Ok(Outcome { report, failed: false }),
            }
        }
        Command::Check {
            family,
            theorem1,
            terms,
            imax,
        } => {
            let (report, expansions) = if let Some(lit) = family {
                let [l, b, a] = split3(&lit, "--family")?;
                let spec = FamilySpec::new(parse(&l)?, parse(&b)?, parse::<IntVector>(&a)?, terms)?;
                let mut report = Report::new(
                    "check",
                    params(&[
                        ("family", json!(format!("{};{};{}", spec.lambda, spec.beta, spec.alpha))),
                        ("in_hypothesis", json!(spec.in_tested_regime())),
                        ("terms", json!(terms)),
                        ("imax", json!(imax)),
                    ]),
                    "",
                );
                report.result = None;
                (report, as_expansions(&spec.terms()))
            } else {
                let lit = theorem1.expect("clap enforces one of the two");
                let [l, k, j] = split3(&lit, "--theorem1")?;
                let (lambda, k, j) = (parse::<Partition>(&l)?, parse_u32(&k)?, parse_u32(&j)?);
                let report = Report::new(
                    "check",
                    params(&[
                        ("theorem1", json!(format!("{lambda};{k};{j}"))),
                        ("in_hypothesis", json!(theorem1_hypotheses(&lambda, k, j))),
                        ("terms", json!(terms)),
                        ("imax", json!(imax)),
                    ]),
                    "",
                );
                (report, as_expansions(&theorem1_terms(&lambda, k, j, terms)))
            };
            let check = check_strong_schur_lc(&expansions, imax);
            Ok(check_outcome(report, &check, ctx))
        }
        Command::Scan {
            conjecture1, bounds, ..
        } => Ok(if conjecture1 {
            scan1(&bounds, ctx)
        } else {
            scan2(&bounds, ctx)
        }),
    }
}

fn tally(summary: &mut Summary, verdict: Verdict, in_hypothesis: bool) {
    summary.points += 1;
    match verdict {
        Verdict::Holds => summary.holds += 1,
        Verdict::Vacuous => summary.vacuous += 1,
        Verdict::Fails if in_hypothesis => summary.in_hypothesis_failures += 1,
        Verdict::Fails => summary.other_failures += 1,
    }
}

fn point_json(label: String, in_hypothesis: bool, check: &CheckReport, ctx: &Context) -> PointJson {
    PointJson {
        label,
        in_hypothesis,
        verdict: check.verdict.as_str().to_string(),
        witness: check.first_failure().and_then(report::witness_json),
        pairs: if ctx.verbose {
            report::pairs_json(check, true)
        } else {
            Vec::new()
        },
    }
}

fn finish_scan(mut report: Report, points: Vec<PointJson>, summary: Summary) -> Outcome {
    let failed = summary.in_hypothesis_failures > 0;
    report.verdict = if failed { "fails" } else { "holds" }.to_string();
    report.points = Some(points);
    report.summary = Some(summary);
    Outcome { report, failed }
}

fn scan1(b: &ScanBounds, ctx: &Context) -> Outcome {
    let bounds = Conjecture1Bounds {
        max_lambda_size: b.max_size,
        max_lambda_len: b.max_len,
        alpha_min: b.alpha_min,
        alpha_max: b.alpha_max,
        max_beta_size: b.max_beta,
        max_terms: b.terms,
        i_max: b.imax,
        include_out_of_regime: b.include_out_of_regime,
    };
    let report = Report::new(
        "scan",
        params(&[
            ("conjecture", json!(1)),
            ("max_size", json!(b.max_size)),
            ("max_len", json!(b.max_len)),
            ("alpha_min", json!(b.alpha_min)),
            ("alpha_max", json!(b.alpha_max)),
            ("max_beta", json!(b.max_beta)),
            ("include_out_of_regime", json!(b.include_out_of_regime)),
            ("terms", json!(b.terms)),
            ("imax", json!(b.imax)),
        ]),
        "",
    );
    let mut summary = Summary::default();
    let points = conjecture1_scan(&bounds, ctx.exec)
        .into_iter()
        .map(|pt| {
            tally(&mut summary, pt.report.verdict, pt.in_regime);
            let label = format!("{};{};{}", pt.spec.lambda, pt.spec.beta, pt.spec.alpha);
            point_json(label, pt.in_regime, &pt.report, ctx)
        })
        .collect();
    finish_scan(report, points, summary)
}

fn scan2(b: &ScanBounds, ctx: &Context) -> Outcome {
    let bounds = Conjecture2Bounds {
        max_n: b.max_n,
        alphas: b.alphas.clone(),
        betas: b.betas.clone(),
        len: b.terms,
        i_max: b.imax,
    };
    let report = Report::new(
        "scan",
        params(&[
            ("conjecture", json!(2)),
            ("max_n", json!(b.max_n)),
            ("alphas", json!(b.alphas)),
            ("betas", json!(b.betas)),
            ("terms", json!(b.terms)),
            ("imax", json!(b.imax)),
        ]),
        "",
    );
    let mut summary = Summary::default();
    let points = conjecture2_scan(&bounds, ctx.exec)
        .into_iter()
        .map(|pt| {
            tally(&mut summary, pt.report.verdict, pt.in_conjecture);
            let label = format!("{};{};{};{}", pt.n, pt.k, pt.alpha, pt.beta);
            point_json(label, pt.in_conjecture, &pt.report, ctx)
        })
        .collect();
    finish_scan(report, points, summary)
}

fn configure_pool(parallelism: Option<NonZeroUsize>) -> Execution {
    match parallelism {
        Some(n) if n.get() == 1 => Execution::Sequential,
        Some(_n) => {
            #[cfg(feature = "parallel")]
            {
                // only fails if the pool already exists, which is harmless
                let _ = rayon::ThreadPoolBuilder::new().num_threads(_n.get()).build_global();
            }
            Execution::Parallel
        }
        None => Execution::Parallel,
    }
}

fn main_inner(cli: Cli) -> Result<bool, CliError> {
    let ctx = Context {
        verbose: cli.verbose,
        exec: configure_pool(cli.parallelism),
    };
    let cache = LrCache::global();
    if let Some(path) = &cli.cache {
        cache_file::load(path, cache)?;
    }
    let outcome = run(cli.command, &ctx)?;
    let text = match cli.output {
        Output::Text => render_text(&outcome.report, ctx.verbose),
        Output::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    if let Some(path) = &cli.cache {
        cache_file::store(path, cache)?;
    }
    print!("{text}");
    Ok(outcome.failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match main_inner(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("schurlc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
