use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use thompson_scl::dynamics::{self, SearchBudget, DEFAULT_DENOM_CAP, DEFAULT_MAX_PROBES};
use thompson_scl::error::Error;
use thompson_scl::extension::{ExtensionError, TnElement};
use thompson_scl::numeric::Rational;
use thompson_scl::plmap::{CanonicalLift, ElementFile};
use thompson_scl::realizer::realize_scl;
use thompson_scl::tree_pair::TreePair;
use thompson_scl::verify::{self, parse_suites};
use thompson_scl::word::{evaluate_builtin_expr, parse_word, GeneratorTable};

/// Exact scl in central extensions of Thompson's group T and the braided
/// Ptolemy-Thompson groups.
#[derive(Debug, Parser)]
#[command(name = "tscl", version)]
struct Cli {
    /// Maximum number of sign tests in the rotation-number search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PROBES)]
    budget: u32,
    /// Largest denominator the rotation-number search may test.
    #[arg(long, global = true, default_value_t = DEFAULT_DENOM_CAP)]
    denom_cap: u64,
    /// Print {"value": ..., "certificate": ...} JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for `verify` sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ElementArgs {
    /// JSON file with {"breakpoints": [["x", "y"], ...]}.
    #[arg(long)]
    element: Option<PathBuf>,
    /// Tree pair "domainBits | rangeBits | r".
    #[arg(long)]
    tree: Option<String>,
    /// Word over the builtins id, A, B, R, e.g. "A B^-1 R".
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
}

impl ElementArgs {
    fn resolve(&self) -> Result<CanonicalLift, Error> {
        if let Some(path) = &self.element {
            return Ok(ElementFile::from_json(&read(path)?)?);
        }
        if let Some(tree) = &self.tree {
            return Ok(tree.parse::<TreePair>()?.to_plmap());
        }
        let expr = self.expr.as_deref().unwrap_or_default();
        Ok(evaluate_builtin_expr(expr)?)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact translation number of the canonical lift.
    Rot {
        #[command(flatten)]
        element: ElementArgs,
        /// Also print a periodic point x with F^q(x) = x + p.
        #[arg(long)]
        certificate: bool,
    },
    /// φ_n(t, j) = j + n·τ(t).
    Phi {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, allow_negative_numbers = true, default_value = "0")]
        j: BigInt,
    },
    /// scl of a word in T*, T♯ or T_n.
    Scl {
        /// t-star, t-sharp or tn:<n>.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Generator table JSON; replaces the builtin generators.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Build an element of T_n whose scl is exactly q.
    Realize {
        #[arg(long)]
        q: Rational,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Write the element as T_n element JSON.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run the seeded property suites.
    Verify {
        /// arith, plmap, dynamics, extension, word, realizer or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Print the canonical breakpoint JSON of an element.
    Compose {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Evaluate the canonical lift at a point.
    Eval {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, allow_hyphen_values = true)]
        at: Rational,
    },
    /// Report relators of a generator table that do not map to the identity.
    CheckTable {
        #[arg(long)]
        table: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn group_table(group: &str) -> Result<GeneratorTable, Error> {
    match group {
        "t-star" => Ok(GeneratorTable::t_star()),
        "t-sharp" => Ok(GeneratorTable::t_sharp()),
        other => {
            let n = other
                .strip_prefix("tn:")
                .and_then(|n| n.parse::<i64>().ok())
                .ok_or_else(|| {
                    Error::Usage(format!(
                        "unknown group {other:?} (expected t-star, t-sharp or tn:<n>)"
                    ))
                })?;
            Ok(GeneratorTable::braided(n)?)
        }
    }
}

/// What a command prints: a value and, optionally, extra certificate fields.
struct Report {
    value: String,
    certificate: Option<Value>,
    plain_extra: Vec<String>,
    failed: bool,
}

impl Report {
    fn value(value: impl ToString) -> Self {
        Report {
            value: value.to_string(),
            certificate: None,
            plain_extra: Vec::new(),
            failed: false,
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let budget = SearchBudget {
        max_probes: cli.budget,
        denom_cap: cli.denom_cap,
    };
    match &cli.command {
        Command::Rot {
            element,
            certificate,
        } => {
            let f = element.resolve()?;
            let cert = dynamics::translation_number(&f, &budget)?;
            let mut report = Report::value(&cert.value);
            if *certificate {
                let (p, q) = (
                    cert.value.numer().to_string(),
                    cert.value.denom().to_string(),
                );
                report.plain_extra = vec![
                    format!("witness {}", cert.witness),
                    format!("q {q}"),
                    format!("p {p}"),
                ];
                report.certificate = Some(json!({
                    "witness": cert.witness.to_string(),
                    "q": q,
                    "p": p,
                    "iterations": cert.iterations,
                }));
            }
            Ok(report)
        }
        Command::Phi { n, element, j } => {
            let g = TnElement::new(*n, element.resolve()?, j.clone())?;
            Ok(Report::value(g.phi(&budget)?))
        }
        Command::Scl { group, word, table } => {
            let table = match (group, table) {
                (None, None) => {
                    return Err(Error::Usage("scl needs --group or --table".into()));
                }
                (Some(g), None) => group_table(g)?,
                (group, Some(path)) => {
                    let table = GeneratorTable::from_json(&read(path)?)?;
                    if let Some(g) = group {
                        let expected = group_table(g)?.level();
                        if expected != table.level() {
                            return Err(ExtensionError::LevelMismatch {
                                left: expected,
                                right: table.level(),
                            }
                            .into());
                        }
                    }
                    table
                }
            };
            let word = parse_word(word)?;
            Ok(Report::value(table.scl_of_word(&word, &budget)?))
        }
        Command::Realize { q, n, emit } => {
            let cert = realize_scl(q, *n, &budget)?;
            let element = serde_json::to_value(cert.element.to_file()).expect("serializable");
            if let Some(path) = emit {
                let text = serde_json::to_string_pretty(&element).expect("serializable");
                fs::write(path, text + "\n").map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            let mut report = Report::value(&cert.verified_scl);
            report.plain_extra = vec![
                format!("target {}", cert.target),
                format!("element {element}"),
                format!("phi {}", cert.verified_phi),
            ];
            report.certificate = Some(json!({
                "target": cert.target.to_string(),
                "element": element,
                "verified_phi": cert.verified_phi.to_string(),
                "verified_scl": cert.verified_scl.to_string(),
            }));
            Ok(report)
        }
        Command::Verify { suite, samples } => {
            let suites = parse_suites(suite).map_err(Error::Usage)?;
            let outcomes = verify::run(&suites, *samples, cli.seed, &budget);
            let failed = outcomes.iter().any(|o| !o.passed());
            let mut report = Report::value(if failed { "fail" } else { "pass" });
            if *samples == 0 {
                report
                    .plain_extra
                    .push("warning: --samples 0, sampled properties pass vacuously".into());
            }
            report
                .plain_extra
                .extend(outcomes.iter().map(ToString::to_string));
            report.certificate = Some(json!({
                "seed": cli.seed,
                "samples": samples,
                "properties": outcomes.iter().map(|o| json!({
                    "suite": o.suite.name(),
                    "name": o.name,
                    "cases": o.checked,
                    "passed": o.passed(),
                    "detail": o.failure,
                })).collect::<Vec<_>>(),
            }));
            report.failed = failed;
            Ok(report)
        }
        Command::Compose { element } => {
            let f = element.resolve()?;
            let text = serde_json::to_string(&ElementFile::from(f.lift())).expect("serializable");
            Ok(Report::value(text))
        }
        Command::Eval { element, at } => {
            let f = element.resolve()?;
            Ok(Report::value(f.evaluate(at)))
        }
        Command::CheckTable { table } => {
            let table = GeneratorTable::from_json(&read(table)?)?;
            let failed = table.verify_relations()?;
            let mut report = Report::value(if failed.is_empty() { "ok" } else { "failed" });
            report.plain_extra = failed.iter().map(|r| format!("relator {r}")).collect();
            report.certificate = Some(json!({ "failed": failed }));
            report.failed = !failed.is_empty();
            Ok(report)
        }
    }
}

fn print(report: &Report, json_mode: bool, summary_last: bool) -> io::Result<()> {
    let mut out = io::stdout().lock();
    if json_mode {
        let mut doc = json!({ "value": report.value });
        if let Some(cert) = &report.certificate {
            doc["certificate"] = cert.clone();
        }
        return writeln!(out, "{doc}");
    }
    if !summary_last {
        writeln!(out, "{}", report.value)?;
    }
    for line in &report.plain_extra {
        writeln!(out, "{line}")?;
    }
    if summary_last {
        writeln!(out, "{}", report.value)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            // verify prints its per-property lines before the summary
            let summary_last = matches!(cli.command, Command::Verify { .. });
            // a closed pipe (e.g. `| head`) is not an error
            let _ = print(&report, cli.json, summary_last);
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.kind(), e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
