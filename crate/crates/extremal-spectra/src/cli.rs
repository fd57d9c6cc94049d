//! Command-line front end: construct, spectrum, enumerate, verify,
//! sweep, and audit subcommands over the library.
//!
//! Conventions: results go to stdout as a single JSON document (CSV for
//! sweep, a text table for audit, bare lines for graph formats), and
//! diagnostics go to stderr. Floats are rounded to 12 significant
//! digits on output. Exit code 0 means the requested check passed or
//! produced output, 1 means a verify verdict came back refuted, and 2
//! means the invocation itself was unusable. The worker pool is owned
//! here: `--jobs` (or the `SPECTRA_JOBS` environment variable) sizes a
//! dedicated rayon pool, and only the enumeration scans fan out into
//! it. Scans shard deterministically, so the job count never changes
//! any output byte.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::constructions::{build_b, build_bb, build_cal_b, BParams, BbParams, BbVariant};
use crate::enumeration::{
    count_class, dedup_isomorphs, par_map_class, ClassFilter, DiameterRule,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quotient::{alpha, f_poly, g_poly, theta};
use crate::spectra::graph_spectrum;
use crate::verifier::{
    audit_suite, verify_lemma_3_2, verify_theorem_3_1, verify_theorem_3_4, verify_theorem_4_3,
    ExtremalReport, Verdict,
};

#[derive(Parser)]
#[command(
    name = "spectra",
    about = "Spectra of graph complements under connectivity constraints",
    version
)]
struct Cli {
    /// Worker threads for enumeration scans. Defaults to SPECTRA_JOBS
    /// when set, otherwise to the number of cores. Never changes output.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and print it.
    Construct {
        /// One of: calB, B, BB.
        #[arg(long)]
        family: String,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Connectivity parameter kappa.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        /// BB connection geometry: join or matching.
        #[arg(long, default_value = "join")]
        variant: String,
        /// Print the complement instead of the graph itself.
        #[arg(long)]
        complement: bool,
        /// Output format: graph6, edgelist, or json.
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    /// Read a graph and print its adjacency spectrum as JSON. The graph
    /// is used as given; pipe a complement in if that is what you want.
    Spectrum {
        /// Input file, or - for stdin (the default).
        #[arg(long, default_value = "-")]
        input: String,
        /// Input format: graph6 or edgelist.
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    /// Enumerate a connectivity class of connected graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        /// Diameter restriction: 2, ge3, or any.
        #[arg(long, default_value = "any")]
        diameter: String,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
        /// Collapse isomorphic graphs to canonical representatives.
        #[arg(long)]
        dedup: bool,
        /// Permit order-8 scans, which are much larger.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run one claim's exhaustive scan and print the report as JSON.
    Verify {
        /// One of: 3.1, 3.4, 4.3, lemma3.2.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Permit order-8 scans, which are much larger.
        #[arg(long)]
        allow_large: bool,
    },
    /// Print a CSV sweep of the quartic root monotonicity claims.
    Sweep {
        /// One of: 3.3 (f roots and theta), 4.2 (g roots and alpha).
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Print the audit table of side inequalities, honest about failures.
    Audit {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
}

/// Rounds to 12 significant digits so printed values are stable.
fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - exp);
    (x * scale).round() / scale
}

fn round_report(mut r: ExtremalReport) -> ExtremalReport {
    r.min_value = r.min_value.map(sig12);
    r.runner_up = r.runner_up.map(sig12);
    r.predicted_value = r.predicted_value.map(sig12);
    r
}

fn parse_diameter(s: &str) -> Result<DiameterRule> {
    match s {
        "2" => Ok(DiameterRule::ExactlyTwo),
        "ge3" => Ok(DiameterRule::AtLeastThree),
        "any" => Ok(DiameterRule::Any),
        other => Err(Error::InvalidParams(format!(
            "--diameter must be 2, ge3, or any, not {}",
            other
        ))),
    }
}

fn parse_variant(s: &str) -> Result<BbVariant> {
    match s {
        "join" => Ok(BbVariant::Join),
        "matching" => Ok(BbVariant::Matching),
        other => Err(Error::InvalidParams(format!(
            "--variant must be join or matching, not {}",
            other
        ))),
    }
}

fn construct_graph(
    family: &str,
    s: Option<usize>,
    t: Option<usize>,
    k: Option<usize>,
    n1: Option<usize>,
    n2: Option<usize>,
    variant: &str,
) -> Result<Graph> {
    let need = |v: Option<usize>, name: &str, fam: &str| {
        v.ok_or_else(|| Error::InvalidParams(format!("--{} is required for family {}", name, fam)))
    };
    match family {
        "calB" => {
            let (s, t, k) = (need(s, "s", "calB")?, need(t, "t", "calB")?, need(k, "k", "calB")?);
            build_cal_b(s, t, k)
        }
        "B" => {
            let p = BParams::new(need(s, "s", "B")?, need(t, "t", "B")?, need(k, "k", "B")?)?;
            Ok(build_b(&p))
        }
        "BB" => {
            let p = BbParams::new(
                need(n1, "n1", "BB")?,
                need(n2, "n2", "BB")?,
                need(k, "k", "BB")?,
                parse_variant(variant)?,
            )?;
            Ok(build_bb(&p))
        }
        other => Err(Error::InvalidParams(format!(
            "--family must be calB, B, or BB, not {}",
            other
        ))),
    }
}

fn read_graph(input: &str, format: &str, piped: Option<&str>) -> Result<Graph> {
    let text = match piped {
        Some(text) => text.to_string(),
        None => std::fs::read_to_string(input)?,
    };
    match format {
        "graph6" => crate::graph6::decode(text.trim_end()),
        "edgelist" => Graph::from_edge_list_str(&text),
        other => Err(Error::InvalidParams(format!(
            "--format must be graph6 or edgelist, not {}",
            other
        ))),
    }
}

fn json_number(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(sig12(x))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

/// Buffered result of one subcommand: output bytes plus the exit code.
/// Buffering keeps the computation free of live stream handles, so it
/// can run inside a dedicated worker pool.
struct Outcome {
    stdout: Vec<u8>,
    stderr: Vec<u8>,
    code: i32,
}

fn run_command(command: Command, piped: Option<String>) -> Result<Outcome> {
    let mut out: Vec<u8> = Vec::new();
    let mut err: Vec<u8> = Vec::new();
    let stdout = &mut out;
    let stderr = &mut err;
    let code: Result<i32> = match command {
        Command::Construct {
            family,
            s,
            t,
            k,
            n1,
            n2,
            variant,
            complement,
            format,
        } => {
            let built = construct_graph(&family, s, t, k, n1, n2, &variant)?;
            let g = if complement { built.complement() } else { built };
            match format.as_str() {
                "graph6" => writeln!(stdout, "{}", crate::graph6::encode(&g))?,
                "edgelist" => write!(stdout, "{}", g.to_edge_list_string())?,
                "json" => {
                    let doc = serde_json::json!({
                        "family": family,
                        "complement": complement,
                        "n": g.n(),
                        "edge_count": g.edge_count(),
                        "edges": g.edges(),
                        "graph6": crate::graph6::encode(&g),
                    });
                    writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
                }
                other => {
                    return Err(Error::InvalidParams(format!(
                        "--format must be graph6, edgelist, or json, not {}",
                        other
                    )))
                }
            }
            Ok(0)
        }
        Command::Spectrum { input, format } => {
            let g = read_graph(&input, &format, piped.as_deref())?;
            let sp = graph_spectrum(&g, false);
            let doc = serde_json::json!({
                "n": g.n(),
                "eigenvalues": sp.values.iter().map(|&v| json_number(v)).collect::<Vec<_>>(),
                "lambda_1": json_number(sp.lambda_1()),
                "lambda_n": json_number(sp.lambda_n()),
                "residual": json_number(sp.residual),
            });
            writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            kappa,
            diameter,
            count_only,
            dedup,
            allow_large,
        } => {
            if n == 8 && !allow_large {
                return Err(Error::InvalidParams(
                    "order 8 scans 2^28 graphs; pass --allow-large to proceed".into(),
                ));
            }
            let filter = ClassFilter::new(n, kappa).with_diameter(parse_diameter(&diameter)?);
            let mut doc = serde_json::json!({
                "n": n,
                "kappa": kappa,
                "diameter": diameter,
            });
            if count_only {
                doc["count"] = count_class(&filter)?.into();
            } else {
                let graphs = par_map_class(&filter, |g| g.clone())?;
                doc["count"] = (graphs.len() as u64).into();
                if dedup {
                    let classes = dedup_isomorphs(&graphs)?;
                    doc["class_count"] = (classes.len() as u64).into();
                    doc["graphs"] = classes
                        .iter()
                        .map(|g| crate::graph6::encode(g))
                        .collect::<Vec<_>>()
                        .into();
                } else {
                    doc["graphs"] = graphs
                        .iter()
                        .map(crate::graph6::encode)
                        .collect::<Vec<_>>()
                        .into();
                }
            }
            writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            n,
            kappa,
            out,
            allow_large,
        } => {
            if n == 8 && !allow_large {
                return Err(Error::InvalidParams(
                    "order 8 scans 2^28 graphs; pass --allow-large to proceed".into(),
                ));
            }
            let (json, exit, summary) = match theorem.as_str() {
                "3.1" | "3.4" | "4.3" => {
                    let report = match theorem.as_str() {
                        "3.1" => verify_theorem_3_1(n, kappa)?,
                        "3.4" => verify_theorem_3_4(n, kappa)?,
                        _ => verify_theorem_4_3(n, kappa)?,
                    };
                    let report = round_report(report);
                    let exit = if report.verdict == Verdict::Refuted { 1 } else { 0 };
                    let summary = format!(
                        "claim {} at n={}, kappa={}: {:?}, class size {}, minimum {}",
                        report.claim,
                        n,
                        kappa,
                        report.verdict,
                        report.class_size,
                        report
                            .min_value
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "none".into()),
                    );
                    (serde_json::to_value(&report)?, exit, summary)
                }
                "lemma3.2" => {
                    let report = verify_lemma_3_2(n, kappa)?;
                    let exit = if report.holds { 0 } else { 1 };
                    let summary = format!(
                        "cut comparison at n={}, kappa={}: {} comparisons over {} graphs, {}",
                        n,
                        kappa,
                        report.comparisons,
                        report.class_size,
                        if report.holds { "all hold" } else { "violations found" },
                    );
                    (serde_json::to_value(&report)?, exit, summary)
                }
                other => {
                    return Err(Error::InvalidParams(format!(
                        "--theorem must be 3.1, 3.4, 4.3, or lemma3.2, not {}",
                        other
                    )))
                }
            };
            let text = serde_json::to_string_pretty(&json)?;
            writeln!(stdout, "{}", text)?;
            if let Some(path) = out {
                std::fs::write(&path, format!("{}\n", text))?;
            }
            writeln!(stderr, "{}", summary)?;
            Ok(exit)
        }
        Command::Sweep { lemma, max_n } => {
            let max_n = max_n.min(60);
            match lemma.as_str() {
                "3.3" => {
                    writeln!(
                        stdout,
                        "s,t,kappa,max_root_f,max_root_f_shifted,monotone,theta,above_theta"
                    )?;
                    for k in 1..=max_n {
                        for s in 2..=max_n {
                            for t in s..=max_n {
                                if s + t + k > max_n || BParams::new(s, t, k).is_err() {
                                    continue;
                                }
                                let root = f_poly(s, t, k).extreme_roots()?.0;
                                let shifted = f_poly(s - 1, t + 1, k).extreme_roots()?.0;
                                let th = theta(s, t, k)?;
                                writeln!(
                                    stdout,
                                    "{},{},{},{},{},{},{},{}",
                                    s,
                                    t,
                                    k,
                                    sig12(root),
                                    sig12(shifted),
                                    root > shifted,
                                    sig12(th),
                                    root > th
                                )?;
                            }
                        }
                    }
                }
                "4.2" => {
                    writeln!(
                        stdout,
                        "n1,n2,kappa,min_root_g,min_root_g_shifted,monotone,alpha"
                    )?;
                    for k in 1..=max_n {
                        for n2 in k..=max_n {
                            for n1 in n2 + 2..=max_n {
                                if n1 + n2 > max_n
                                    || BbParams::new(n1, n2, k, BbVariant::Join).is_err()
                                    || BbParams::new(n1 - 1, n2 + 1, k, BbVariant::Join).is_err()
                                {
                                    continue;
                                }
                                let root = g_poly(n1, n2, k).extreme_roots()?.1;
                                let shifted = g_poly(n1 - 1, n2 + 1, k).extreme_roots()?.1;
                                writeln!(
                                    stdout,
                                    "{},{},{},{},{},{},{}",
                                    n1,
                                    n2,
                                    k,
                                    sig12(root),
                                    sig12(shifted),
                                    root > shifted,
                                    sig12(alpha(k))
                                )?;
                            }
                        }
                    }
                }
                other => {
                    return Err(Error::InvalidParams(format!(
                        "--lemma must be 3.3 or 4.2, not {}",
                        other
                    )))
                }
            }
            Ok(0)
        }
        Command::Audit { max_n } => {
            let records = audit_suite(max_n)?;
            let mut failures = 0;
            writeln!(
                stdout,
                "{:<72} {:>16} {:>16} {:>6}  instance",
                "claim", "lhs", "rhs", "holds"
            )?;
            for r in &records {
                if !r.holds {
                    failures += 1;
                }
                writeln!(
                    stdout,
                    "{:<72} {:>16} {:>16} {:>6}  {}",
                    r.claim,
                    sig12(r.lhs),
                    sig12(r.rhs),
                    r.holds,
                    r.instance
                )?;
            }
            writeln!(
                stderr,
                "{} claims audited, {} hold, {} fail",
                records.len(),
                records.len() - failures,
                failures
            )?;
            Ok(0)
        }
    };
    Ok(Outcome {
        stdout: out,
        stderr: err,
        code: code?,
    })
}

/// Parses arguments and runs one invocation against the given streams.
/// Returns the process exit code: 0 success, 1 refuted verdict, 2
/// unusable invocation.
pub fn run(
    args: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e);
                return 0;
            }
            let _ = write!(stderr, "{}", e);
            return 2;
        }
    };

    let jobs = cli.jobs.or_else(|| {
        std::env::var("SPECTRA_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });

    // Commands that read stdin consume it before any pool is entered,
    // so the computation itself holds no live stream handles.
    let piped = match &cli.command {
        Command::Spectrum { input, .. } if input == "-" => {
            let mut buf = String::new();
            match stdin.read_to_string(&mut buf) {
                Ok(_) => Some(buf),
                Err(e) => {
                    let _ = writeln!(stderr, "error: {}", e);
                    return 2;
                }
            }
        }
        _ => None,
    };

    let outcome = match jobs {
        Some(j) if j >= 1 => {
            match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
                Ok(pool) => pool.install(move || run_command(cli.command, piped)),
                Err(e) => Err(Error::InvalidParams(format!(
                    "could not build a {}-thread worker pool: {}",
                    j, e
                ))),
            }
        }
        Some(_) => Err(Error::InvalidParams("--jobs must be at least 1".into())),
        None => run_command(cli.command, piped),
    };

    match outcome {
        Ok(done) => {
            let _ = stdout.write_all(&done.stdout);
            let _ = stderr.write_all(&done.stderr);
            done.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e);
            2
        }
    }
}

/// Entry point for the binary: wires real stdio and the process args.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdin = std::io::stdin();
    let mut locked = stdin.lock();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run(&args, &mut locked, &mut stdout, &mut stderr)
}
