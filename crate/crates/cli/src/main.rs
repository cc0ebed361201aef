//! `cycgraph`: classify cyclic groups of prime power order by graphical
//! complexity, build witness graphs, and check everything against the oracle.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cycgraph::autsearch::{automorphism_group, automorphism_group_bruteforce_capped, DEFAULT_BRUTE_FORCE_CAP};
use cycgraph::classifier::{classify, construct_witness, ClassifyOptions, NonGr2, Verdict};
use cycgraph::closure::{gr_k_membership, is_two_star_closed, min_colors, two_star_closure, MinColors, OracleConfig};
use cycgraph::group::{cyclic_group, group_equals};
use cycgraph::spec::{CyclicSpec, SpecRecord};
use cycgraph::{ColoredGraph, Error, Parallelism};

#[derive(Parser)]
#[command(name = "cycgraph", version, about = "Graphical complexity of cyclic groups of prime power order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// Nontrivial orbit sizes, each a power of p (comma separated).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    orbits: Vec<u64>,
    /// Number of fixed points.
    #[arg(long, default_value_t = 0)]
    fixed: usize,
}

impl SpecArgs {
    fn spec(&self) -> Result<CyclicSpec, Failure> {
        CyclicSpec::from_orbit_sizes(self.p, &self.orbits, self.fixed).map_err(Failure::Usage)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide NotInGR / GR2 / GR3Star and attach verified evidence.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
        /// Write witness, certificate and verdict files into this directory.
        #[arg(long)]
        evidence: Option<PathBuf>,
    },
    /// Build the witness graph for a spec.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Recompute the automorphism group and fail unless it equals the target.
        #[arg(long)]
        verify: bool,
    },
    /// Automorphism group of a graph file.
    Aut {
        graph: PathBuf,
        /// Use exhaustive search over all permutations instead of refinement.
        #[arg(long)]
        brute: bool,
        /// Largest vertex count accepted by --brute.
        #[arg(long, env = "CYCGRAPH_BRUTE_CAP", default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        brute_cap: usize,
    },
    /// 2*-closure of the cyclic group.
    Closure {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Membership oracle: least number of colors by exhaustive or seeded search.
    Oracle {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 3)]
        max_colors: usize,
        /// Query a single k instead of searching for the least one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = OracleConfig::default().budget)]
        budget: u64,
        #[arg(long, default_value_t = OracleConfig::default().random_attempts)]
        attempts: u64,
        #[arg(long, default_value_t = OracleConfig::default().seed)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
    },
    /// Check every documented example and print one line per check.
    VerifyAll {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Usage(Error),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parallelism(sequential: bool) -> Parallelism {
    if sequential {
        Parallelism::Sequential
    } else {
        Parallelism::default()
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Classify { spec, json, evidence } => {
            let spec = spec.spec()?;
            let v = classify(&spec)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&v.to_json()).expect("json"));
            } else {
                print_verdict(&v);
            }
            if let Some(dir) = evidence {
                write_evidence(&dir, &v)?;
            }
            if !v.verified.containment {
                return Err(Failure::Failed("evidence did not verify".into()));
            }
            Ok(())
        }
        Command::Construct { spec, out, dot, verify } => {
            let spec = spec.spec()?;
            let (source, g, _) = construct_witness(&spec, &ClassifyOptions::default())?;
            fs::write(&out, g.to_json())?;
            if let Some(d) = dot {
                fs::write(d, g.to_dot(Some(&spec.layout())))?;
            }
            println!("{spec}: {source}, n={} k={} colors used={}", g.n(), g.k(), g.colors_used());
            if verify {
                let aut = automorphism_group(&g)?;
                if !group_equals(&aut, &cyclic_group(&spec)?)? {
                    return Err(Failure::Failed(format!(
                        "automorphism group has order {}, expected {}",
                        aut.order(),
                        spec.order()
                    )));
                }
                println!("verified: Aut(G) equals the target group (order {})", aut.order());
            }
            Ok(())
        }
        Command::Aut { graph, brute, brute_cap } => {
            let g = read_graph(&graph)?;
            let group = if brute {
                automorphism_group_bruteforce_capped(&g, brute_cap)?
            } else {
                automorphism_group(&g)?
            };
            println!("order {}", group.order());
            for gen in group.generators() {
                println!("{gen}");
            }
            Ok(())
        }
        Command::Closure { spec } => {
            let spec = spec.spec()?;
            let a = cyclic_group(&spec)?;
            if a.degree() < 2 {
                println!("{spec}: closure order 1, 2*-closed");
                return Ok(());
            }
            let cl = two_star_closure(&a)?;
            let (closed, extra) = is_two_star_closed(&a)?;
            println!(
                "{spec}: group order {}, closure order {}, {}",
                a.order(),
                cl.order(),
                if closed { "2*-closed" } else { "not 2*-closed" }
            );
            if let Some(x) = extra {
                println!("extra automorphism {x}");
            }
            Ok(())
        }
        Command::Oracle {
            spec,
            max_colors,
            k,
            budget,
            attempts,
            seed,
            sequential,
        } => {
            let spec = spec.spec()?;
            let a = cyclic_group(&spec)?;
            let cfg = OracleConfig {
                budget,
                random_attempts: attempts,
                seed,
                parallelism: parallelism(sequential),
            };
            let record = SpecRecord::from(&spec);
            let out = if let Some(k) = k {
                let mut r = gr_k_membership(&a, k, &cfg).map_err(Failure::Usage)?;
                r.spec = Some(record);
                serde_json::to_value(r).expect("json")
            } else {
                match min_colors(&a, max_colors, &cfg)? {
                    MinColors::NotInGr { extra } => json!({
                        "spec": record, "result": "not-in-gr", "min_colors": null,
                        "extra_automorphism": extra.to_string(), "report": null
                    }),
                    MinColors::Colors { k, mut report } => {
                        report.spec = Some(record.clone());
                        json!({"spec": record, "result": "colors", "min_colors": k, "report": report})
                    }
                    MinColors::AboveMax { k_max } => json!({
                        "spec": record, "result": "above-max", "min_colors": null, "k_max": k_max, "report": null
                    }),
                    MinColors::Inconclusive { k, mut report } => {
                        report.spec = Some(record.clone());
                        json!({"spec": record, "result": "inconclusive", "min_colors": null, "stopped_at": k, "report": report})
                    }
                }
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            Ok(())
        }
        Command::VerifyAll { seed, sequential } => {
            let results = verify::run_all(seed, parallelism(sequential));
            let mut failed = 0;
            for r in &results {
                println!("{} {:<58} {}", if r.ok { "ok  " } else { "FAIL" }, r.name, r.detail);
                failed += usize::from(!r.ok);
            }
            println!("{} checks, {} failed", results.len(), failed);
            if failed > 0 {
                return Err(Failure::Failed(format!("{failed} checks failed")));
            }
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<ColoredGraph, Failure> {
    let text = fs::read_to_string(path)?;
    ColoredGraph::from_json(&text).map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))
}

fn print_verdict(v: &Verdict) {
    println!("{}: {} ({})", v.spec, v.class, v.source);
    if let Some(g) = &v.witness {
        println!("witness: {} vertices, {} colors used", g.n(), g.colors_used());
    }
    if let Some(c) = &v.certificate {
        println!("certificate: {} ({})", c.sigma, c.description);
    }
    if let Some(j) = &v.non_gr2 {
        println!("not 2-colorable: {}", j.label());
    }
    println!(
        "verified: containment={} exact={}",
        v.verified.containment, v.verified.exact
    );
}

fn write_evidence(dir: &Path, v: &Verdict) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("verdict.json"), serde_json::to_string_pretty(&v.to_json()).expect("json"))?;
    if let Some(g) = &v.witness {
        fs::write(dir.join("witness.json"), g.to_json())?;
        fs::write(dir.join("witness.dot"), g.to_dot(Some(&v.spec.layout())))?;
    }
    if let Some(c) = &v.certificate {
        fs::write(dir.join("certificate.json"), serde_json::to_string_pretty(c).expect("json"))?;
    }
    if let Some(j) = &v.non_gr2 {
        let body = match j {
            NonGr2::Exhaustive { colorings_examined, extras } => json!({
                "kind": j.label(),
                "colorings_examined": colorings_examined,
                "extra_automorphisms": extras.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
            NonGr2::CertificateFamily { family, check } => json!({
                "kind": j.label(), "family": family, "check": check,
            }),
            NonGr2::TheoremCited => json!({ "kind": j.label() }),
        };
        fs::write(dir.join("non_gr2.json"), serde_json::to_string_pretty(&body).expect("json"))?;
    }
    Ok(())
}
