//! Command-line front end: build incidence graphs, evaluate bounds, emit
//! and check certificates, run the exact and heuristic searches, solve the
//! constraint relaxation, tally disk lattice points, and reproduce the
//! summary table.
//!
//! Exit codes: 0 success (and, for checking commands, "verified"); 1 a
//! check ran to completion and found a violation or mismatch; 2 usage or
//! computation error.

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pgiso_core::bounds::{
    chain_lb, counting_upper_smallest, envelope_lb, kmu_lb, matching_alpha, one_sided_bound,
};
use pgiso_core::cert::{Certificate, Verdict};
use pgiso_core::circle::circle_counts_guarded;
use pgiso_core::construct::{
    alpha_witness_search, builtin_alpha_witness, circle_pair, denniston_arc,
    pair_with_external_lines, seventeen_three_arcs, witness_certificate,
};
use pgiso_core::graph::IncidenceGraph;
use pgiso_core::par::{configure_threads, ExecMode};
use pgiso_core::relax;
use pgiso_core::search::{brute_force_iv, brute_force_iv_naive, exact_alpha, exact_alpha_certificate};
use pgiso_core::table::{render_text, table1};
use pgiso_core::verify::run_all;
use pgiso_core::Rat;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pgiso",
    version,
    about = "Incidence graphs of projective spaces: isoperimetry, incidence-free pairs, certificates"
)]
struct Cli {
    /// Worker threads for data-parallel kernels (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Force sequential execution even in a parallel build.
    #[arg(long, global = true)]
    sequential: bool,

    /// Output format: aligned human text, comma-separated values,
    /// one JSON record per line, or one pretty JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Records,
    Json,
}

impl Format {
    fn structured(self) -> bool {
        !matches!(self, Format::Table)
    }
}

/// Emit one structured document in the chosen format: pretty JSON, one
/// record per line (objects under `rows` become individual records), or
/// flattened CSV.
fn emit(format: Format, doc: &serde_json::Value) -> anyhow::Result<()> {
    match format {
        Format::Table => unreachable!("caller handles the human rendering"),
        Format::Json => println!("{}", serde_json::to_string_pretty(doc)?),
        Format::Records => match doc.get("rows").and_then(|r| r.as_array()) {
            Some(rows) => {
                for row in rows {
                    println!("{}", serde_json::to_string(row)?);
                }
                let mut rest = doc.clone();
                rest.as_object_mut().unwrap().remove("rows");
                if rest.as_object().map(|o| !o.is_empty()).unwrap_or(false) {
                    println!("{}", serde_json::to_string(&rest)?);
                }
            }
            None => println!("{}", serde_json::to_string(doc)?),
        },
        Format::Csv => match doc.get("rows").and_then(|r| r.as_array()) {
            Some(rows) => {
                let flat: Vec<Vec<(String, String)>> = rows.iter().map(flatten).collect();
                let headers: Vec<String> = flat
                    .first()
                    .map(|kv| kv.iter().map(|(k, _)| k.clone()).collect())
                    .unwrap_or_default();
                println!("{}", headers.join(","));
                for row in &flat {
                    let cells: Vec<&str> = row.iter().map(|(_, v)| v.as_str()).collect();
                    println!("{}", cells.join(","));
                }
            }
            None => {
                println!("key,value");
                for (k, v) in flatten(doc) {
                    println!("{k},{v}");
                }
            }
        },
    }
    Ok(())
}

/// Depth-first flattening of a JSON document into dotted-key/cell pairs,
/// preserving field order.
fn flatten(v: &serde_json::Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
        match v {
            serde_json::Value::Object(map) => {
                for (k, inner) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    go(&key, inner, out);
                }
            }
            other => out.push((prefix.to_string(), csv_cell(other))),
        }
    }
    let mut out = Vec::new();
    go("", v, &mut out);
    out
}

fn csv_cell(v: &serde_json::Value) -> String {
    let raw = match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the point–hyperplane graph and print its parameters.
    Build(BuildArgs),
    /// Analytic lower bounds and counting upper bounds for one graph.
    Bounds(BoundsArgs),
    /// Check a certificate file against the incidence relation.
    Certify(CertifyArgs),
    /// Corrupt a certificate until it fails verification (for testing).
    Tamper(TamperArgs),
    /// Emit certificates from the explicit constructions.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Exhaustive and heuristic searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Solve the constraint relaxation for a plane of order q.
    Relax(RelaxArgs),
    /// Exact lattice-point tallies for the disk x^2 + y^2 <= r.
    Circle(CircleArgs),
    /// Reproduce the ten-plane summary table from scratch and diff it.
    Table1(TableArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Projective dimension (points vs hyperplanes of PG(n, q)).
    #[arg(short, long)]
    n: u32,
    /// Field order (prime power).
    #[arg(short, long)]
    q: u64,
    /// Also run the structural invariant checks.
    #[arg(long)]
    check: bool,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(short, long, default_value_t = 2)]
    n: u32,
    #[arg(short, long)]
    q: u64,
    /// Set size for the one-sided neighborhood bound.
    #[arg(long)]
    size: Option<u64>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Certificate JSON file, or `-` for stdin.
    input: PathBuf,
}

#[derive(Args)]
struct TamperArgs {
    /// Certificate JSON file, or `-` for stdin.
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Disc-of-points vs strip-of-lines incidence-free pair for a prime p.
    Circle {
        #[arg(short, long)]
        p: u64,
    },
    /// Maximal arc of degree d in a plane of even order q, optionally
    /// paired with its external lines.
    Denniston {
        #[arg(short, long)]
        q: u64,
        #[arg(short, long)]
        d: u64,
        /// Emit the point set together with its external lines.
        #[arg(long)]
        externals: bool,
    },
    /// Catalogued best witness for q in {9, 11, 13}.
    Builtin {
        #[arg(short, long)]
        q: u64,
    },
    /// The four catalogued 17-point 3-arcs of the order-9 plane.
    ThreeArcs,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Seeded local search for an incidence-free witness of a given size.
    Local {
        #[arg(short, long)]
        q: u64,
        /// Witness size to aim for (defaults to the line-counting bound).
        #[arg(short, long)]
        target: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50_000)]
        restarts: u64,
    },
    /// Exhaustive incidence-free value (needs at most 63 points).
    Alpha {
        #[arg(short, long)]
        q: u64,
    },
    /// Exhaustive minimum of |N(X)|/|X| over nonempty X with |X| <= v.
    Iv {
        #[arg(short, long, default_value_t = 2)]
        n: u32,
        #[arg(short, long)]
        q: u64,
        /// Use the slow per-subset recount instead of the Gray-code sweep.
        #[arg(long)]
        naive: bool,
    },
}

#[derive(Args)]
struct RelaxArgs {
    #[arg(short, long)]
    q: u64,
    /// Incidence-free value the admissible sizes are filtered by.
    #[arg(short, long)]
    alpha: u64,
    /// Use the enumerate-everything reference solver.
    #[arg(long)]
    naive: bool,
}

#[derive(Args)]
struct CircleArgs {
    /// Squared radius of the disk.
    #[arg(short, long)]
    r: f64,
    /// Lift the iteration guard for very large disks.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn rat_json(r: Rat) -> serde_json::Value {
    json!({ "num": *r.numer(), "den": *r.denom(), "value": *r.numer() as f64 / *r.denom() as f64 })
}

fn read_certificate(path: &PathBuf) -> anyhow::Result<Certificate> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading certificate from stdin")?;
        buf
    } else {
        std::fs::read_to_string(path)
            .with_context(|| format!("reading certificate from {}", path.display()))?
    };
    let (cert, warnings) = Certificate::parse(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(cert)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    configure_threads(cli.threads).map_err(|e| anyhow!("thread pool: {e}"))?;
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::auto()
    };
    let structured = cli.format.structured();

    match cli.cmd {
        Cmd::Build(a) => {
            let g = IncidenceGraph::build_with(a.n, a.q, mode)?;
            let p = g.params();
            let checks = if a.check { run_all(&g, a.seed)? } else { vec![] };
            if structured {
                emit(
                    cli.format,
                    &json!({
                        "n": g.n(), "q": g.q(), "params": p,
                        "mu_sq": p.mu_sq(), "checks": checks,
                    }),
                )?;
            } else {
                println!(
                    "PG({}, {}): v = {} per side, k = {}, lambda = {}, mu^2 = {}",
                    g.n(),
                    g.q(),
                    p.v,
                    p.k,
                    p.lambda,
                    p.mu_sq()
                );
                for c in checks {
                    println!("check passed: {c}");
                }
            }
            Ok(0)
        }
        Cmd::Bounds(a) => {
            let params = pgiso_core::graph::DesignParams::of(a.n, a.q);
            let (chain, argmin) = chain_lb(&params)?;
            let spectral = kmu_lb(&params);
            let envelope = envelope_lb(a.n, a.q)?;
            let plane = a.n == 2;
            let counting = if plane {
                Some(counting_upper_smallest(a.q))
            } else {
                None
            };
            let matching = if plane { Some(matching_alpha(a.q)) } else { None };
            let one_sided = match a.size {
                Some(s) => {
                    let (strong, weak) = one_sided_bound(&params, s)?;
                    Some((s, strong, weak))
                }
                None => None,
            };
            if structured {
                emit(
                    cli.format,
                    &json!({
                        "params": params,
                        "chain": { "bound": rat_json(chain), "argmin": argmin },
                        "degree_minus_root": spectral,
                        "envelope": envelope,
                        "counting_upper_smallest": counting,
                        "matching_alpha_threshold": matching,
                        "one_sided": one_sided.map(|(s, strong, weak)| json!({
                            "size": s, "strong": rat_json(strong), "weak": rat_json(weak),
                        })),
                    }),
                )?;
            } else {
                println!(
                    "chain lower bound: {chain} (tightest at size {argmin}); degree-root {spectral:.6}; envelope {envelope:.6}"
                );
                if let (Some(cu), Some(ma)) = (counting, matching) {
                    println!("line-counting upper bound on the witness size: {cu}");
                    println!("two-sided witnesses of size >= {ma} make the bound 1 - alpha/v tight");
                }
                if let Some((s, strong, weak)) = one_sided {
                    println!("one-sided bound at size {s}: strong {strong}, weak {weak}");
                }
            }
            Ok(0)
        }
        Cmd::Certify(a) => {
            let cert = read_certificate(&a.input)?;
            match cert.verify()? {
                Verdict::Verified(report) => {
                    if structured {
                        emit(
                            cli.format,
                            &json!({ "verdict": "verified", "report": report }),
                        )?;
                    } else {
                        println!(
                            "verified: {} with {} points, {} uncovered lines, witnessed value {}",
                            report.kind, report.set_size, report.uncovered_lines, report.witnessed_alpha
                        );
                    }
                    Ok(0)
                }
                Verdict::Violated(w) => {
                    if structured {
                        emit(
                            cli.format,
                            &json!({ "verdict": "violated", "violation": w.to_string() }),
                        )?;
                    } else {
                        println!("violated: {w}");
                    }
                    Ok(1)
                }
            }
        }
        Cmd::Tamper(a) => {
            let cert = read_certificate(&a.input)?;
            let bad = cert.tamper(a.seed)?;
            print!("{}", bad.to_json());
            Ok(0)
        }
        Cmd::Construct(c) => {
            let cert = match c {
                ConstructCmd::Circle { p } => circle_pair(p)?,
                ConstructCmd::Denniston { q, d, externals } => {
                    let arc = denniston_arc(q, d)?;
                    if externals {
                        pair_with_external_lines(&arc)?
                    } else {
                        arc
                    }
                }
                ConstructCmd::Builtin { q } => builtin_alpha_witness(q)?,
                ConstructCmd::ThreeArcs => {
                    let docs: Vec<serde_json::Value> = seventeen_three_arcs()
                        .iter()
                        .map(|c| serde_json::from_str(&c.to_json()))
                        .collect::<Result<_, _>>()?;
                    println!("{}", serde_json::to_string_pretty(&docs)?);
                    return Ok(0);
                }
            };
            print!("{}", cert.to_json());
            Ok(0)
        }
        Cmd::Search(s) => match s {
            SearchCmd::Local {
                q,
                target,
                seed,
                restarts,
            } => {
                let g = IncidenceGraph::build_with(2, q, mode)?;
                let target = target.unwrap_or_else(|| counting_upper_smallest(q));
                let out = alpha_witness_search(&g, target as usize, seed, restarts, mode)?;
                let cert = witness_certificate(&g, &out.set, target);
                eprintln!(
                    "found after {} restart(s): {} points, {} uncovered lines",
                    out.restarts,
                    out.set.len(),
                    out.uncovered
                );
                print!("{}", cert.to_json());
                Ok(0)
            }
            SearchCmd::Alpha { q } => {
                let g = IncidenceGraph::build_with(2, q, mode)?;
                let exact = exact_alpha(&g)?;
                let cert = exact_alpha_certificate(&g, &exact);
                eprintln!(
                    "exact incidence-free value {} ({} search nodes)",
                    exact.value, exact.nodes
                );
                print!("{}", cert.to_json());
                Ok(0)
            }
            SearchCmd::Iv { n, q, naive } => {
                let g = IncidenceGraph::build_with(n, q, mode)?;
                let out = if naive {
                    brute_force_iv_naive(&g)?
                } else {
                    brute_force_iv(&g, mode)?
                };
                if structured {
                    emit(
                        cli.format,
                        &json!({
                            "ratio": rat_json(out.ratio),
                            "witness_points": out.witness.points.iter().collect::<Vec<_>>(),
                            "witness_hyperplanes": out.witness.hyps.iter().collect::<Vec<_>>(),
                            "states": out.states,
                        }),
                    )?;
                } else {
                    println!(
                        "minimum |N(X)|/|X| = {} at |X| = {} ({} points, {} hyperplanes; {} states)",
                        out.ratio,
                        out.witness.len(),
                        out.witness.points.count(),
                        out.witness.hyps.count(),
                        out.states
                    );
                }
                Ok(0)
            }
        },
        Cmd::Relax(a) => {
            let sol = if a.naive {
                relax::solve_naive(a.q, a.alpha)?
            } else {
                relax::solve(a.q, a.alpha)?
            };
            if structured {
                emit(
                    cli.format,
                    &json!({
                        "q": sol.q, "alpha": sol.alpha,
                        "minimum": rat_json(sol.minimum),
                        "upper_bound": rat_json(sol.upper_bound),
                        "meets_upper_bound": sol.minimum == sol.upper_bound,
                        "optimizer": { "a": sol.optimizer.0, "b": sol.optimizer.1,
                                        "c": sol.optimizer.2, "d": sol.optimizer.3 },
                        "admissible_sizes": sol.sizes,
                    }),
                )?;
            } else {
                println!(
                    "relaxation minimum {} (cap 1 - alpha/v = {}); optimizer (a, b, c, d) = {:?}; {}",
                    sol.minimum,
                    sol.upper_bound,
                    sol.optimizer,
                    if sol.minimum == sol.upper_bound {
                        "meets the cap exactly"
                    } else {
                        "strictly below the cap"
                    }
                );
            }
            Ok(0)
        }
        Cmd::Circle(a) => {
            let counts = circle_counts_guarded(a.r, mode, a.allow_large)?;
            let r32 = a.r.powf(1.5);
            if structured {
                emit(
                    cli.format,
                    &json!({
                        "counts": counts,
                        "all_over_r": counts.all as f64 / a.r,
                        "primitive_over_r": counts.primitive as f64 / a.r,
                        "norm_sum_over_r_3_2": counts.norm_sum / r32,
                    }),
                )?;
            } else {
                println!(
                    "disk x^2 + y^2 <= {}: {} lattice points ({:.6} per unit area), {} primitive ({:.6}), primitive norm sum {:.3} ({:.6} x r^1.5)",
                    a.r,
                    counts.all,
                    counts.all as f64 / a.r,
                    counts.primitive,
                    counts.primitive as f64 / a.r,
                    counts.norm_sum,
                    counts.norm_sum / r32
                );
            }
            Ok(0)
        }
        Cmd::Table1(a) => {
            let report = table1(mode, a.seed)?;
            if structured {
                let rows: Vec<serde_json::Value> = report
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "q": r.q, "v": r.v, "alpha": r.alpha,
                            "iv": rat_json(r.iv), "relax": rat_json(r.relax_value),
                            "c": r.c,
                            "witness_source": r.witness_source,
                            "upper_source": r.upper_source,
                        })
                    })
                    .collect();
                emit(
                    cli.format,
                    &json!({
                        "rows": rows, "diffs": report.diffs, "matches": report.matches(),
                    }),
                )?;
            } else {
                print!("{}", render_text(&report));
            }
            Ok(if report.matches() { 0 } else { 1 })
        }
    }
}

/// Die silently on a closed output pipe (`pgiso ... | head`) instead of
/// panicking: restore the default SIGPIPE disposition Rust masks at startup.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
