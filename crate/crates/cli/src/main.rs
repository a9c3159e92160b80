use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use steiner_core::graphs::Graph;
use steiner_core::harness::{
    extremal_radius, graham_pollak_check, sweep_trees, Cache, Compute, Mode, RunConfig, Scope,
};
use steiner_core::hypermatrix::build_steiner_hypermatrix;
use steiner_core::resultant::hyperdet;
use steiner_core::spectra::{eigenvalues_k2, nqz_spectral_radius, spectral_radius_k2};
use steiner_core::sylvester2::hyperdet_dim2;
use steiner_core::wendt::{lehmer_vanishes, theorem1_vanishes, wendt};

#[derive(Parser)]
#[command(name = "steiner-spectra", version, about = "Steiner distance hypermatrices: hyperdeterminants, spectra and conjecture sweeps")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for substitutions and relabeling spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON-lines result cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Nqz,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Labeled,
    Unlabeled,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Trees,
    ConnectedGraphs,
}

#[derive(Subcommand)]
enum Command {
    /// Wendt's determinant W_m.
    Wendt {
        #[arg(long)]
        m: usize,
    },
    /// Vanishing verdict for D_k of a tree on n vertices (JSON).
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Dimension-2 hyperdeterminant by the Sylvester formula (default graph K_2).
    Det2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exact hyperdeterminant of D_k(G) and the route used.
    Hyperdet {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Eigenvalues and spectral radius of D_k(G) (JSON).
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "nqz")]
        method: Method,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Sweep every tree on n vertices and report conjecture verdicts.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Compute hyperdeterminants (default when neither flag is given).
        #[arg(long)]
        det: bool,
        /// Compute NQZ spectral radii.
        #[arg(long)]
        radius: bool,
        #[arg(long, value_enum, default_value = "labeled")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Distance-matrix determinants of all labeled trees against Graham-Pollak.
    GpCheck {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Rank graphs on n vertices by spectral radius of D_k.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "trees")]
        scope: ScopeArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Print CSV (canonical form, degree sequence, radius) instead.
        #[arg(long)]
        csv: bool,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

/// Outcome of a subcommand: whether a falsifying witness was found.
enum Outcome {
    Pass,
    Witness,
}

fn run(cli: Cli) -> Result<Outcome> {
    let cache = cli.cache.as_ref().map(Cache::open).transpose()?;
    let base = RunConfig {
        seed: cli.seed,
        jobs: cli.jobs,
        cache: cache.as_ref(),
        ..RunConfig::default()
    };
    match cli.command {
        Command::Wendt { m } => {
            let w = wendt(m)?;
            if cli.json {
                print_json(&json!({"m": m, "value": w.to_string(), "lehmer_vanishes": lehmer_vanishes(m)}))?;
            } else {
                out!("{w}");
            }
        }
        Command::Classify { k, n } => {
            if k < 1 || n < 1 {
                bail!("k and n must be positive");
            }
            print_json(&theorem1_vanishes(k, n))?;
        }
        Command::Det2 { k, graph } => {
            let g = match graph {
                Some(p) => read_graph(&p)?,
                None => Graph::path(2),
            };
            let d = hyperdet_dim2(&build_steiner_hypermatrix(&g, k)?)?;
            if cli.json {
                print_json(&json!({"k": k, "value": d.to_string()}))?;
            } else {
                out!("{d}");
            }
        }
        Command::Hyperdet { graph, k } => {
            let g = read_graph(&graph)?;
            let h = hyperdet(&build_steiner_hypermatrix(&g, k)?, cli.seed)?;
            if cli.json {
                print_json(&json!({"k": k, "value": h.value.to_string(), "route": h.route}))?;
            } else {
                out!("{} {}", h.value, h.route);
            }
        }
        Command::Spectrum { graph, k, method, tol } => {
            let g = read_graph(&graph)?;
            let report: Value = match method {
                Method::Closed => {
                    if g.n() != 2 {
                        bail!("closed-form spectra exist only for K_2 (n = 2); use --method nqz");
                    }
                    let spectrum = eigenvalues_k2(k)?;
                    let radius = spectral_radius_k2(k)?;
                    json!({
                        "eigenvalues": spectrum,
                        "spectral_radius": radius.to_string().parse::<Value>()?,
                        "enclosure": Value::Null,
                    })
                }
                Method::Nqz => {
                    let r = nqz_spectral_radius(&build_steiner_hypermatrix(&g, k)?, tol)?;
                    json!({
                        "eigenvalues": [],
                        "spectral_radius": r.radius,
                        "enclosure": {"lo": r.lo, "hi": r.hi, "iterations": r.iterations},
                    })
                }
            };
            print_json(&report)?;
        }
        Command::Sweep { n, k, det, radius, mode, tol } => {
            let compute = Compute {
                det: det || !radius,
                radius,
            };
            let mode = match mode {
                ModeArg::Labeled => Mode::Labeled,
                ModeArg::Unlabeled => Mode::Unlabeled,
            };
            let cfg = RunConfig { tol, ..base };
            let report = sweep_trees(n, k, compute, mode, &cfg)?;
            if cli.json {
                print_json(&report)?;
            } else {
                out!("n = {n}, k = {k}, {} trees", report.records.len());
                let v = &report.verdicts;
                for (name, verdict) in [
                    ("conjecture 1", v.conjecture1),
                    ("conjecture 2", v.conjecture2),
                    ("vanishing classification", v.theorem1),
                    ("Wendt identity", v.wendt_identity),
                ] {
                    if let Some(verdict) = verdict {
                        out!("{name}: {}", serde_json::to_value(verdict)?.as_str().unwrap_or("?"));
                    }
                }
                if let Some(q) = &v.question2 {
                    out!("question 2: {}", serde_json::to_value(q.verdict)?.as_str().unwrap_or("?"));
                }
                if let Some(d) = report.records.first().and_then(|r| r.det.as_ref()) {
                    out!("first det: {d}");
                }
                if let Some(w) = &report.witness {
                    out!("witness: {}", serde_json::to_string(w)?);
                }
            }
            if report.witness.is_some() {
                return Ok(Outcome::Witness);
            }
        }
        Command::GpCheck { n_max } => {
            let report = graham_pollak_check(n_max, &base)?;
            if cli.json {
                print_json(&report)?;
            } else {
                for row in &report.rows {
                    let status = if row.pass { "pass" } else { "FAIL" };
                    out!("n = {}: {} trees, det {} {status}", row.n, row.trees, row.expected);
                }
            }
            if !report.pass {
                return Ok(Outcome::Witness);
            }
        }
        Command::Extremal { n, k, scope, tol, csv } => {
            let scope = match scope {
                ScopeArg::Trees => Scope::Trees,
                ScopeArg::ConnectedGraphs => Scope::ConnectedGraphs,
            };
            let cfg = RunConfig { tol, ..base };
            let report = extremal_radius(n, k, scope, &cfg)?;
            if csv {
                write!(std::io::stdout().lock(), "{}", report.to_csv())?;
            } else if cli.json {
                print_json(&report)?;
            } else {
                for e in &report.ranking {
                    let tag = if e.is_path { " (path)" } else { "" };
                    out!("{:.10} {:?}{tag}", e.spectral_radius.value, e.degree_sequence);
                }
                out!("top is path: {}", report.top_is_path);
                if let Some(w) = &report.witness {
                    out!("witness: {}", serde_json::to_string(w)?);
                }
            }
            if report.witness.is_some() {
                return Ok(Outcome::Witness);
            }
        }
    }
    Ok(Outcome::Pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Witness) => ExitCode::from(2),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}
