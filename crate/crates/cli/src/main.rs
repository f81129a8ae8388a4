use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use geopos::certificate::Claim;
use geopos::families::{generate, FamilySpec};
use geopos::geodesic::check_edge_kgp;
use geopos::graph::{all_pairs_distances, read_edge_set, DistanceMatrix, Graph};
use geopos::report::{exit_code, reproduce, to_json, to_table, Scope};
use geopos::solvers::{enumerate_geodesics, gcover_exact, gpart_exact, kgp_exact, CatalogOptions};
use geopos::theta::{is_partial_cube, theta_classes};
use geopos::{Budget, Error};

const REFUTED: u8 = 2;
const BUDGET: u8 = 3;
const INPUT: u8 = 4;

/// Edge k-general position sets, edge geodesic covers and partitions.
#[derive(Parser)]
#[command(name = "geopos", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a family graph.
    Gen {
        /// e.g. `cycle:8`, `torus:8x8`, `hypercube:3`, `benes:3`, `prod:path:3,cycle:4`
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether an edge set is in edge k-general position.
    VerifyKgp {
        /// Edge-list file or family spec.
        graph: String,
        /// File with one `u v` edge per line.
        edges: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Solve a problem exactly and print a certificate.
    Solve {
        /// Edge-list file or family spec.
        graph: String,
        problem: Problem,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, env = "GEOPOS_BUDGET", default_value_t = Budget::DEFAULT.0)]
        budget: u64,
        /// Search over maximal geodesics only (cover problem).
        #[arg(long)]
        maximal_only: bool,
        /// Print the full certificate instead of a summary.
        #[arg(long)]
        json: bool,
    },
    /// Print the Θ-class sizes and whether the graph is a partial cube.
    ThetaClasses {
        /// Edge-list file or family spec.
        graph: String,
    },
    /// Recompute the table of exact values.
    Reproduce {
        /// `all` or a theorem id such as `lemma-3.1`.
        #[arg(default_value = "all")]
        scope: String,
        #[arg(long, env = "GEOPOS_BUDGET", default_value_t = Budget::DEFAULT.0)]
        budget: u64,
        #[arg(long)]
        json: bool,
        /// Include wall-clock times (output is then not byte-deterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Kgp,
    Gcover,
    Gpart,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = match e {
                Error::BudgetExceeded {
                    lower,
                    upper,
                    explored,
                    budget,
                } => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "error": "budget exceeded",
                            "budget": budget,
                            "explored": explored,
                            "lower": lower,
                            "upper": upper,
                        }))
                        .unwrap()
                    );
                    BUDGET
                }
                _ => INPUT,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}

fn load(graph: &str) -> Result<(Graph, DistanceMatrix), Error> {
    let g = if Path::new(graph).is_file() {
        Graph::read_edge_list(BufReader::new(File::open(graph)?))?
    } else {
        generate(&graph.parse::<FamilySpec>()?)?
    };
    let d = all_pairs_distances(&g)?;
    Ok((g, d))
}

fn emit(text: &str) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen { spec, out } => {
            let g = generate(&spec.parse::<FamilySpec>()?)?;
            match out {
                Some(path) => g.write_edge_list(File::create(path)?)?,
                None => g.write_edge_list(io::stdout().lock())?,
            }
            Ok(0)
        }
        Command::VerifyKgp { graph, edges, k } => {
            let (g, d) = load(&graph)?;
            let s = read_edge_set(BufReader::new(File::open(edges)?))?;
            let check = check_edge_kgp(&g, &d, &s, k)?;
            // shortest stretch of the witness that still carries every marked edge
            let violating = (!check.holds).then(|| {
                let v = check
                    .common
                    .witness
                    .as_ref()
                    .expect("nonempty set")
                    .vertices();
                let marked: Vec<usize> = (0..v.len() - 1)
                    .filter(|&i| s.contains(&geopos::graph::Edge::new(v[i], v[i + 1])))
                    .collect();
                v[marked[0]..=marked[marked.len() - 1] + 1].to_vec()
            });
            emit(
                &serde_json::to_string_pretty(&json!({
                    "k": k,
                    "edges": s.len(),
                    "holds": check.holds,
                    "max_marked": check.common.max_marked,
                    "violating_geodesic": violating,
                }))
                .unwrap(),
            )?;
            Ok(if check.holds { 0 } else { REFUTED })
        }
        Command::Solve {
            graph,
            problem,
            k,
            budget,
            maximal_only,
            json,
        } => {
            let (g, d) = load(&graph)?;
            let budget = Budget(budget);
            let (result, name, method) = match problem {
                Problem::Kgp => {
                    let k = k.ok_or_else(|| Error::InvalidParameter("kgp needs -k".into()))?;
                    (kgp_exact(&g, &d, k, budget)?, "kgp", "exact-bb")
                }
                Problem::Gcover | Problem::Gpart => {
                    if k.is_some() {
                        return Err(Error::InvalidParameter("-k applies only to kgp".into()));
                    }
                    let partition = matches!(problem, Problem::Gpart);
                    if partition && maximal_only {
                        return Err(Error::InvalidParameter(
                            "--maximal-only cannot be used for gpart".into(),
                        ));
                    }
                    let catalog = enumerate_geodesics(
                        &g,
                        &d,
                        CatalogOptions {
                            maximal_only,
                            budget,
                        },
                    )?;
                    if partition {
                        (gpart_exact(&g, &catalog, budget)?, "gpart", "exact-cover")
                    } else {
                        (gcover_exact(&g, &catalog, budget)?, "gcover", "exact-bb")
                    }
                }
            };
            let mut claim = Claim::new(name).param("graph", graph.as_str());
            if let Some(k) = k {
                claim = claim.param("k", k);
            }
            let cert = result.certify(&g, &d, claim, method, k)?;
            if json {
                emit(&cert.to_json())?;
            } else {
                emit(&format!(
                    "{name} = {}\nverified: {}\nnodes explored: {}\nbound: {}",
                    cert.value, cert.verified, result.nodes_explored, result.bound_used
                ))?;
            }
            Ok(if cert.verified { 0 } else { REFUTED })
        }
        Command::ThetaClasses { graph } => {
            let (g, d) = load(&graph)?;
            let tc = theta_classes(&g, &d);
            emit(
                &serde_json::to_string_pretty(&json!({
                    "partial_cube": is_partial_cube(&g, &d),
                    "class_count": tc.classes.len(),
                    "sizes": tc.sizes(),
                }))
                .unwrap(),
            )?;
            Ok(0)
        }
        Command::Reproduce {
            scope,
            budget,
            json,
            timings,
        } => {
            let scope: Scope = scope.parse()?;
            let rows = reproduce(scope, Budget(budget), timings);
            if json {
                emit(&to_json(&rows))?;
            } else {
                emit(&to_table(&rows))?;
            }
            Ok(exit_code(&rows) as u8)
        }
    }
}
