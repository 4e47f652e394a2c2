//! `hdx`: generate complexes, compute expansion data and run the verification suite.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, input or computation errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use hdx_core::caps::Caps;
use hdx_core::cochain::{certify_gromov, expansion_report, norms};
use hdx_core::generators::{cayley_clique_complex, complete_complex, fixture, flag_complex};
use hdx_core::io::{self, complex_to_json, to_json_string};
use hdx_core::local::{dim2_lemma_suite, locally_minimize, IsoperimetryParams};
use hdx_core::overlap::{geometric_overlap_2d, geometric_overlap_mc, OverlapResult};
use hdx_core::rational;
use hdx_core::report::{certificate_json, expansion_report_json, norms_json, Value};
use hdx_core::suite::{run_suite, SuiteConfig};
use hdx_core::{Error, SimplicialComplex};

#[derive(Parser)]
#[command(name = "hdx", version, about = "Exact F2 coboundary expansion toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated complex as JSON.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Expansion constants, systoles, cohomology and spectral data of a complex.
    Compute {
        complex: PathBuf,
        /// Only this dimension.
        #[arg(long = "i", conflicts_with = "all")]
        dim: Option<isize>,
        /// Every dimension plus the spectral summary of the 1-skeleton.
        #[arg(long)]
        all: bool,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Also certify the systolic hypotheses with this cofilling bound (needs --eta).
        #[arg(long, requires = "eta")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        eta: Option<String>,
    },
    /// Locally minimize a cochain by link corrections.
    Localmin {
        complex: PathBuf,
        cochain: PathBuf,
        /// Write the minimized cochain here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the dimension-2 counting identities and edge-exit inequalities for a 1-cochain.
    Lemmas {
        complex: PathBuf,
        cochain: PathBuf,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[arg(long = "eps-prime", default_value = "1/10")]
        eps_prime: String,
        #[arg(long, default_value = "1/10")]
        xi: String,
        /// Field order for the literal-parameter evaluation.
        #[arg(long)]
        q: Option<u32>,
    },
    /// Maximum number of facet images through a common point.
    Overlap {
        complex: PathBuf,
        points: PathBuf,
        /// Exact planar computation (default for 2-complexes).
        #[arg(long, conflicts_with = "mc")]
        exact: bool,
        /// Seeded sampling with this many random points.
        #[arg(long, value_name = "N")]
        mc: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "mc")]
        seed: u64,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the report as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Out {
    /// Output file (stdout when absent).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// All (d+1)-subsets of n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Flag complex of the proper subspaces of F_q^m.
    Flag {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Clique complex of a Cayley graph given by a generator file.
    Cayley {
        generators: PathBuf,
        #[arg(long = "max-dim", default_value_t = 2)]
        max_dim: usize,
        #[command(flatten)]
        out: Out,
    },
    /// A named fixture such as rp2_6, petersen or cycle_5.
    Fixture {
        name: String,
        #[command(flatten)]
        out: Out,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => io::write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn overlap_json(x: &SimplicialComplex, r: &OverlapResult) -> Json {
    json!({
        "max_depth": r.max_depth,
        "facets": x.count(x.dim()),
        "fraction": Value::exact(&r.fraction),
        "witness_point": r.witness_point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "covering_facets": r.covering_facets.iter().map(|&j| x.face_labels(&x.facets()[j])).collect::<Vec<_>>(),
        "candidates": r.candidates,
        "closed_simplices": true,
    })
}

/// Returns whether all checks passed.
fn run(cmd: Command, caps: &Caps) -> Result<bool, Error> {
    match cmd {
        Command::Gen { family } => {
            let (x, out, extra) = match family {
                Family::Complete { n, d, out } => (complete_complex(n, d)?, out, None),
                Family::Flag { q, m, out } => (flag_complex(q, m)?, out, None),
                Family::Fixture { name, out } => (fixture(&name)?, out, None),
                Family::Cayley { generators, max_dim, out } => {
                    let g = io::generators_from_json(&io::read_text(&generators)?)?;
                    let c = cayley_clique_complex(&g.generators, max_dim, caps)?;
                    let note = format!(
                        "group order {}, clique counts {:?}, dropped faces {}",
                        c.elements.len(),
                        c.clique_counts,
                        c.dropped_faces
                    );
                    (c.complex, out, Some(note))
                }
            };
            if let Some(note) = extra {
                eprintln!("{note}");
            }
            emit(&out.output, &complex_to_json(&x))?;
            Ok(true)
        }
        Command::Compute { complex, dim, all: _, csv, mu, eta } => {
            let x = io::read_complex(&complex)?;
            let dims = dim.map(|i| vec![i]);
            let mut r = expansion_report(&x, dims.as_deref(), caps)?;
            if dim.is_some() {
                r.spectral = None;
            }
            if csv {
                print!("{}", io::expansion_report_csv(&r)?);
                return Ok(true);
            }
            let mut j = expansion_report_json(&x, &r);
            let mut ok = true;
            if let (Some(mu), Some(eta)) = (mu, eta) {
                let c = certify_gromov(&x, &rational::parse(&mu)?, &rational::parse(&eta)?, caps)?;
                ok = c.passes();
                j["certificate"] = certificate_json(&x, &c);
            }
            print!("{}", to_json_string(&j));
            Ok(ok)
        }
        Command::Localmin { complex, cochain, output } => {
            let x = io::read_complex(&complex)?;
            let a = io::read_cochain(&x, &cochain)?;
            let r = locally_minimize(&x, &a, caps)?;
            let j = json!({
                "dim": a.dim(),
                "input": norms_json(&norms(&x, &a, caps)?),
                "output": norms_json(&norms(&x, &r.alpha, caps)?),
                "steps": r.steps,
                "corrected_vertices": r.corrected.iter().map(|&v| x.label(v)).collect::<Vec<_>>(),
                "alpha": r.alpha.face_labels(&x),
                "gamma": r.gamma.face_labels(&x),
            });
            if let Some(p) = output {
                io::write_text(p, &io::cochain_to_json(&x, &r.alpha))?;
            }
            print!("{}", to_json_string(&j));
            Ok(true)
        }
        Command::Lemmas { complex, cochain, eps, eps_prime, xi, q } => {
            let x = io::read_complex(&complex)?;
            let a = io::read_cochain(&x, &cochain)?;
            let params = IsoperimetryParams {
                epsilon: rational::parse(&eps)?,
                epsilon_prime: rational::parse(&eps_prime)?,
                xi: rational::parse(&xi)?,
                q,
            };
            let r = dim2_lemma_suite(&x, &a, &params, caps)?;
            let mut j = serde_json::to_value(&r)?;
            j["pass"] = json!(r.pass());
            print!("{}", to_json_string(&j));
            Ok(r.pass())
        }
        Command::Overlap { complex, points, exact: _, mc, seed } => {
            let x = io::read_complex(&complex)?;
            let p = io::read_points(&points)?;
            let j = match mc {
                None => overlap_json(&x, &geometric_overlap_2d(&x, &p)?),
                Some(n) => {
                    let e = geometric_overlap_mc(&x, &p, n, seed)?;
                    let mut j = overlap_json(&x, &e.best);
                    j["lower_bound"] = json!(true);
                    j["samples"] = json!(e.samples);
                    j["seed"] = json!(e.seed);
                    j["mean_fraction"] = json!(Value::float(e.mean_fraction));
                    j["mean_fraction_ci95"] = json!([Value::float(e.mean_ci95.0), Value::float(e.mean_ci95.1)]);
                    j
                }
            };
            print!("{}", to_json_string(&j));
            Ok(true)
        }
        Command::Verify { config, seed, csv } => {
            let mut cfg = match config {
                Some(p) => SuiteConfig::from_json(&io::read_text(p)?)?,
                None => SuiteConfig { caps: *caps, ..SuiteConfig::default() },
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let r = run_suite(&cfg)?;
            let text = r.to_json();
            if let Some(p) = &cfg.outputs.json {
                io::write_text(p, &text)?;
            }
            let csv_path = csv.or(cfg.outputs.csv.as_ref().map(PathBuf::from));
            if let Some(p) = csv_path {
                io::write_text(p, &r.to_csv()?)?;
            }
            print!("{text}");
            for c in r.checks.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {}", c.check_id);
            }
            eprintln!("{} checks, {} failed", r.total, r.failed);
            Ok(r.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Caps::from_env().and_then(|caps| run(cli.command, &caps));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
