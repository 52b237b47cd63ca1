//! The `zcolor` command line.
//!
//! Exit codes: 0 success or property holds, 1 property fails, 2 input
//! error, 3 budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::coloring::Coloring;
use crate::families::{build_gn, build_tree_atom};
use crate::graph::{Graph, GraphKind};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::random::{random_connected_bipartite, random_graph, random_tree};
use crate::reductions::{
    build_hardness_instance, build_wellcolored_instance, lift_edge_coloring, project_z_coloring,
    verify_structure_facts, ReductionError,
};
use crate::roles::RoleMap;
use crate::solvers::{
    all_invariants, exact_b, exact_chromatic, exact_grundy, exact_z, three_edge_coloring,
    z_spectrum, Budget, EdgeColoring, SolveError, SolveResult,
};
use crate::validators;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const SWEEP_HEADER: &str = "param,vertices,max_degree,chi,gamma,b,z";

#[derive(Parser, Debug)]
#[command(name = "zcolor", version, about = "Exact z-coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct BudgetArgs {
    /// Search node limit per solver call.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit per solver call.
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_time: self.budget_seconds.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph as graph6; families with roles also get `<out>.roles`.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Size parameters; two are needed for `complete-bipartite`.
        #[arg(long = "param", num_args = 1)]
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for the random families.
        #[arg(long, default_value_t = 0.3)]
        prob: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute one invariant exactly.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        invariant: SolveTarget,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the z-certificate (JSON) here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring file against a graph.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Build a reduction instance from a source graph.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Construction::Hardness)]
        kind: Construction,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a 3-edge-coloring of a cubic graph into a z-coloring of its
    /// hardness instance. Without `--edge-coloring` one is searched for.
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        edge_coloring: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a 3-edge-coloring of a cubic graph off a z-coloring of its
    /// hardness instance.
    Project {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute all four invariants over a parameter range, as CSV.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive range `a..b`, or a single value.
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        prob: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// With `false`, rows are computed on parallel threads.
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        deterministic: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    MatchedMinus,
    Edgeless,
    Petersen,
    Gn,
    Atom,
    RandomTree,
    RandomGraph,
    RandomBipartite,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SolveTarget {
    Chi,
    Grundy,
    B,
    Z,
    Zspectrum,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Proper,
    Grundy,
    B,
    Z,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    Hardness,
    Wellcolored,
}

enum CliError {
    Input(String),
    Budget(String),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn bad_input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{context}: {e}"))
}

type Outcome = Result<i32, CliError>;

/// Parses `args` (program name first) and runs the verb; returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            EXIT_BUDGET
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Gen {
            family,
            params,
            seed,
            prob,
            out,
        } => {
            let (g, roles) = build_family(family, &params, seed, prob)?;
            write_graph(&g, roles.as_ref(), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            input,
            invariant,
            out,
            certificate,
            budget,
        } => solve(
            &read_graph(&input)?,
            invariant,
            out,
            certificate,
            &budget.budget(),
        ),
        Command::Validate {
            input,
            coloring,
            kind,
            certificate,
        } => validate(
            &read_graph(&input)?,
            &read_coloring(&coloring)?,
            kind,
            certificate,
        ),
        Command::Reduce { input, kind, out } => {
            let g = read_graph(&input)?;
            match kind {
                Construction::Hardness => {
                    let inst = build_hardness_instance(&g)?;
                    let report = verify_structure_facts(&inst);
                    for fact in &report.facts {
                        eprintln!(
                            "fact {}: {} [{}]",
                            fact.id,
                            fact.description,
                            verdict(fact.holds)
                        );
                    }
                    eprintln!("bipartite [{}]", verdict(report.bipartite));
                    write_graph(&inst.h, Some(&inst.roles), out.as_deref())?;
                    Ok(if report.all_hold() {
                        EXIT_OK
                    } else {
                        EXIT_FAILS
                    })
                }
                Construction::Wellcolored => {
                    let (h, roles) = build_wellcolored_instance(&g)?;
                    write_graph(&h, Some(&roles), out.as_deref())?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Lift {
            input,
            edge_coloring,
            out,
        } => {
            let g = read_graph(&input)?;
            let inst = build_hardness_instance(&g)?;
            let theta = match edge_coloring {
                Some(path) => EdgeColoring::parse(&g, &read_text(&path)?)
                    .map_err(bad_input("edge coloring"))?,
                None => match three_edge_coloring(&g).map_err(bad_input("source graph"))? {
                    Some(theta) => theta,
                    None => {
                        eprintln!("source graph has no 3-edge-coloring");
                        return Ok(EXIT_FAILS);
                    }
                },
            };
            let c = lift_edge_coloring(&inst, &theta)?;
            write_out(out.as_deref(), &c.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Project {
            input,
            coloring,
            out,
        } => {
            let g = read_graph(&input)?;
            let inst = build_hardness_instance(&g)?;
            let c = read_coloring(&coloring)?;
            match project_z_coloring(&inst, &c) {
                Ok(theta) => {
                    write_out(out.as_deref(), &theta.to_text(&g))?;
                    Ok(EXIT_OK)
                }
                Err(
                    e
                    @ (ReductionError::NotZColoring(_) | ReductionError::ContractViolation { .. }),
                ) => {
                    eprintln!("{e}");
                    Ok(EXIT_FAILS)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Sweep {
            family,
            range,
            seed,
            prob,
            out,
            deterministic,
            budget,
        } => {
            let params = parse_range(&range)?;
            let csv = sweep(family, &params, seed, prob, deterministic, &budget.budget())?;
            write_out(out.as_deref(), &csv)?;
            Ok(EXIT_OK)
        }
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "ok"
    } else {
        "FAILS"
    }
}

fn param(params: &[usize], idx: usize, family: Family) -> Result<usize, CliError> {
    params.get(idx).copied().ok_or_else(|| {
        CliError::Input(format!(
            "family {family:?} needs {} --param value(s)",
            idx + 1
        ))
    })
}

fn build_family(
    family: Family,
    params: &[usize],
    seed: u64,
    prob: f64,
) -> Result<(Graph, Option<RoleMap>), CliError> {
    let p = |i| param(params, i, family);
    let kind = match family {
        Family::Complete => GraphKind::Complete(p(0)?),
        Family::CompleteBipartite => GraphKind::CompleteBipartite(p(0)?, p(1)?),
        Family::Path => GraphKind::Path(p(0)?),
        Family::Cycle => GraphKind::Cycle(p(0)?),
        Family::Star => GraphKind::Star(p(0)?),
        Family::MatchedMinus => GraphKind::MatchedMinus(p(0)?),
        Family::Edgeless => GraphKind::Edgeless(p(0)?),
        Family::Petersen => GraphKind::Petersen,
        Family::Gn | Family::Atom => {
            let inst = if family == Family::Gn {
                build_gn(p(0)?)
            } else {
                build_tree_atom(p(0)?)
            }
            .map_err(bad_input("family"))?;
            return Ok((inst.graph, Some(inst.roles)));
        }
        Family::RandomTree | Family::RandomGraph | Family::RandomBipartite => {
            let n = p(0)?;
            if n == 0 {
                return Err(CliError::Input("random families need n >= 1".into()));
            }
            if !(0.0..=1.0).contains(&prob) {
                return Err(CliError::Input(format!(
                    "probability {prob} outside [0, 1]"
                )));
            }
            let mut rng = StdRng::seed_from_u64(seed);
            let g = match family {
                Family::RandomTree => random_tree(n, &mut rng),
                Family::RandomGraph => random_graph(n, prob, &mut rng),
                _ => random_connected_bipartite(n, prob, &mut rng),
            };
            return Ok((g, None));
        }
    };
    Ok((kind.build().map_err(bad_input("family"))?, None))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    parse_graph6(line).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path) -> Result<Coloring, CliError> {
    Coloring::parse(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".roles");
    PathBuf::from(s)
}

fn write_graph(g: &Graph, roles: Option<&RoleMap>, out: Option<&Path>) -> Result<(), CliError> {
    let g6 = emit_graph6(g).map_err(bad_input("graph6"))?;
    write_out(out, &format!("{g6}\n"))?;
    if let (Some(roles), Some(path)) = (roles, out) {
        write_out(Some(&sidecar(path)), &roles.to_text())?;
    }
    Ok(())
}

fn report_solve(r: &SolveResult) {
    eprintln!(
        "{} = {} ({} nodes, {:.3}s)",
        r.invariant,
        r.value,
        r.nodes_explored,
        r.elapsed.as_secs_f64()
    );
}

fn solve(
    g: &Graph,
    target: SolveTarget,
    out: Option<PathBuf>,
    certificate: Option<PathBuf>,
    budget: &Budget,
) -> Outcome {
    let r = match target {
        SolveTarget::Chi => exact_chromatic(g, budget)?,
        SolveTarget::Grundy => exact_grundy(g, budget)?,
        SolveTarget::B => exact_b(g, budget)?,
        SolveTarget::Z => exact_z(g, budget)?,
        SolveTarget::Zspectrum => {
            let s = z_spectrum(g, budget)?;
            let ks: Vec<String> = s.achievable.iter().map(|k| k.to_string()).collect();
            println!("chi={} z={} upper={}", s.chromatic, s.z(), s.upper_bound);
            println!("achievable={}", ks.join(","));
            println!("continuous={}", s.is_continuous());
            println!("chromatic_achievable={}", s.chromatic_achievable);
            return Ok(EXIT_OK);
        }
    };
    report_solve(&r);
    println!("{}", r.value);
    if let Some(path) = out {
        write_out(Some(&path), &r.witness.to_text())?;
    }
    if let Some(path) = certificate {
        let cert = validators::is_z_coloring(g, &r.witness)
            .ok()
            .and_then(|v| v.certificate);
        match cert {
            Some(cert) => write_out(Some(&path), &format!("{}\n", cert.to_json()))?,
            None => eprintln!("witness is not a z-coloring; no certificate written"),
        }
    }
    Ok(EXIT_OK)
}

fn validate(g: &Graph, c: &Coloring, kind: CheckKind, certificate: Option<PathBuf>) -> Outcome {
    if c.len() != g.vertex_count() {
        return Err(CliError::Input(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.vertex_count()
        )));
    }
    let improper = |e: validators::ValidationError| match e {
        validators::ValidationError::Improper(u, v) => {
            Ok(Some(validators::Violation::MonochromaticEdge { u, v }))
        }
        other => Err(CliError::Input(other.to_string())),
    };
    let violation = match kind {
        CheckKind::Proper => validators::is_proper(g, c)
            .map(|v| v.violation)
            .or_else(improper)?,
        CheckKind::Grundy => validators::is_grundy(g, c)
            .map(|v| v.violation)
            .or_else(improper)?,
        CheckKind::B => validators::is_b_coloring(g, c)
            .map(|v| v.violation)
            .or_else(improper)?,
        CheckKind::Z => match validators::is_z_coloring(g, c) {
            Ok(v) => {
                if let Some(cert) = &v.certificate {
                    let json = cert.to_json();
                    println!("{json}");
                    if let Some(path) = certificate {
                        write_out(Some(&path), &format!("{json}\n"))?;
                    }
                }
                v.violation
            }
            Err(e) => improper(e)?,
        },
    };
    match violation {
        None => {
            println!("valid");
            Ok(EXIT_OK)
        }
        Some(v) => {
            println!("invalid: {v}");
            println!(
                "{}",
                serde_json::to_string(&v).expect("violation serializes")
            );
            Ok(EXIT_FAILS)
        }
    }
}

fn parse_range(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Input(format!("bad range `{text}`, expected `a..b`"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn sweep_row(
    family: Family,
    p: usize,
    seed: u64,
    prob: f64,
    budget: &Budget,
) -> Result<String, CliError> {
    let (g, _) = build_family(family, &[p], seed.wrapping_add(p as u64), prob)?;
    let (chi, gamma, b, z) = all_invariants(&g, budget)?.values();
    Ok(format!(
        "{p},{},{},{chi},{gamma},{b},{z}",
        g.vertex_count(),
        g.max_degree()
    ))
}

fn sweep(
    family: Family,
    params: &[usize],
    seed: u64,
    prob: f64,
    deterministic: bool,
    budget: &Budget,
) -> Result<String, CliError> {
    let rows: Vec<Result<String, CliError>> = if deterministic {
        params
            .iter()
            .map(|&p| sweep_row(family, p, seed, prob, budget))
            .collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = params
                .iter()
                .map(|&p| s.spawn(move || sweep_row(family, p, seed, prob, budget)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    let mut csv = format!("{SWEEP_HEADER}\n");
    for row in rows {
        writeln!(csv, "{}", row?).expect("writing to a String");
    }
    Ok(csv)
}
