//! Exact solvers for `χ`, `Γ`, `b` and `z`, the z-spectrum, tree
//! continuity/monotonicity checks, 3-edge-colorings and a brute-force oracle.
//!
//! All vertex-coloring searches are exponential and limited to graphs with
//! at most [`MAX_SOLVER_VERTICES`] vertices. Every call accepts a [`Budget`];
//! running out is reported as [`SolveError::BudgetExhausted`], never as an
//! infeasible answer.

mod edge;
mod oracle;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::validators;

pub use edge::{three_edge_coloring, three_edge_colorings, EdgeColoring, EdgeColoringError};
pub use oracle::{brute_force_oracle, first_fit, OracleValues, ORACLE_MAX_VERTICES};

use search::{Meter, Search, SmallGraph};

pub const MAX_SOLVER_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    Chromatic,
    Grundy,
    B,
    Z,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Chromatic => "chi",
            Invariant::Grundy => "grundy",
            Invariant::B => "b",
            Invariant::Z => "z",
        })
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chi" => Ok(Invariant::Chromatic),
            "grundy" => Ok(Invariant::Grundy),
            "b" => Ok(Invariant::B),
            "z" => Ok(Invariant::Z),
            other => Err(format!("unknown invariant `{other}`")),
        }
    }
}

/// Limits for one solver call. The default is unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn time(max_time: Duration) -> Self {
        Budget {
            max_nodes: None,
            max_time: Some(max_time),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{n} vertices exceed the solver limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(
        "budget exhausted computing {invariant} after {nodes} nodes (known: {lower}..={upper})"
    )]
    BudgetExhausted {
        invariant: Invariant,
        nodes: u64,
        lower: usize,
        upper: usize,
    },
    #[error("input graph has a cycle")]
    Cyclic,
    #[error("no z-coloring found for any number of colors")]
    NoZColoring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunOutcome {
    Feasible,
    Infeasible,
    Unknown,
}

/// One decision run "is there a coloring of this kind with `k` colors?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KRun {
    pub k: usize,
    pub outcome: RunOutcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    /// Re-validates under the matching validator with exactly `value` colors.
    pub witness: Coloring,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Decision runs in the order they were made; the run at `value` is
    /// feasible and the run at `value + 1` (when below the upper bound) is not.
    pub runs: Vec<KRun>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumResult {
    /// Every `k` admitting a z-coloring with exactly `k` colors.
    pub achievable: BTreeSet<usize>,
    pub chromatic: usize,
    /// Whether some z-coloring uses exactly `χ` colors (tested, not assumed).
    pub chromatic_achievable: bool,
    /// `min(Γ, b)`; no z-coloring can use more colors.
    pub upper_bound: usize,
}

impl SpectrumResult {
    pub fn z(&self) -> usize {
        self.achievable.last().copied().unwrap_or(0)
    }

    /// True when every `k` in `χ..=z` is achievable.
    pub fn is_continuous(&self) -> bool {
        (self.chromatic..=self.z()).all(|k| self.achievable.contains(&k))
    }
}

fn small_graph(g: &Graph) -> Result<SmallGraph, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > MAX_SOLVER_VERTICES {
        return Err(SolveError::TooLarge {
            n,
            limit: MAX_SOLVER_VERTICES,
        });
    }
    Ok(SmallGraph {
        n,
        nbrs: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
    })
}

/// Extends a partial coloring (0 = uncolored) by First-Fit in id order.
fn first_fit_extend(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let mut taken = vec![usize::MAX; g.vertex_count() + 2];
    for v in 0..g.vertex_count() {
        if colors[v] != 0 {
            continue;
        }
        for &u in g.neighbors(v) {
            if colors[u] != 0 && colors[u] < taken.len() {
                taken[colors[u]] = v;
            }
        }
        colors[v] = (1..).find(|&c| taken[c] != v).expect("a free color exists");
    }
    colors
}

struct Runner {
    invariant: Invariant,
    meter: Meter,
    runs: Vec<KRun>,
    started: Instant,
}

impl Runner {
    fn new(invariant: Invariant, budget: &Budget) -> Self {
        Runner {
            invariant,
            meter: Meter::new(budget),
            runs: Vec::new(),
            started: Instant::now(),
        }
    }

    fn run(&mut self, k: usize, decide: impl FnOnce(&mut Meter) -> Search) -> Search {
        let before = self.meter.nodes;
        let result = decide(&mut self.meter);
        let outcome = match result {
            Search::Found(_) => RunOutcome::Feasible,
            Search::Exhausted => RunOutcome::Infeasible,
            Search::Unknown => RunOutcome::Unknown,
        };
        self.runs.push(KRun {
            k,
            outcome,
            nodes: self.meter.nodes - before,
        });
        result
    }

    fn exhausted(&self, lower: usize, upper: usize) -> SolveError {
        SolveError::BudgetExhausted {
            invariant: self.invariant,
            nodes: self.meter.nodes,
            lower,
            upper,
        }
    }

    fn finish(self, value: usize, witness: Coloring) -> SolveResult {
        SolveResult {
            invariant: self.invariant,
            value,
            witness,
            nodes_explored: self.meter.nodes,
            elapsed: self.started.elapsed(),
            runs: self.runs,
        }
    }
}

pub fn exact_chromatic(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let sg = small_graph(g)?;
    let mut runner = Runner::new(Invariant::Chromatic, budget);
    let upper = g.max_degree() + 1;
    for k in 1..=upper {
        match runner.run(k, |m| search::decide_proper(&sg, k, m)) {
            Search::Found(colors) => {
                let witness =
                    Coloring::with_k(colors, k).expect("first feasible k uses all colors");
                debug_assert!(validators::is_proper(g, &witness).unwrap().holds);
                return Ok(runner.finish(k, witness));
            }
            Search::Exhausted => {}
            Search::Unknown => return Err(runner.exhausted(k, upper)),
        }
    }
    unreachable!("Δ+1 colors always suffice")
}

/// `Γ(G)`: the largest `k` for which a partial Grundy coloring uses color
/// `k`. Such colorings extend to full Grundy colorings by First-Fit, and
/// dropping the top class of one gives one for `k - 1`, so `k` is searched
/// upward until the first infeasible value.
pub fn exact_grundy(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let sg = small_graph(g)?;
    let mut runner = Runner::new(Invariant::Grundy, budget);
    let upper = g.max_degree() + 1;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for k in 1..=upper {
        match runner.run(k, |m| search::decide_grundy(&sg, k, m)) {
            Search::Found(partial) => best = Some((k, partial)),
            Search::Exhausted => break,
            Search::Unknown => {
                let lower = best.as_ref().map_or(1, |b| b.0);
                return Err(runner.exhausted(lower, upper));
            }
        }
    }
    let (value, partial) = best.expect("one color always works");
    let witness = Coloring::new(first_fit_extend(g, partial)).expect("extension is total");
    assert_eq!(
        witness.k(),
        value,
        "First-Fit extension exceeded the Grundy number"
    );
    debug_assert!(validators::is_grundy(g, &witness).unwrap().holds);
    Ok(runner.finish(value, witness))
}

/// Largest `k` such that at least `k` vertices have degree `>= k - 1`.
pub fn m_degree(g: &Graph) -> usize {
    let mut degs = g.degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    (1..=degs.len())
        .rev()
        .find(|&k| degs[k - 1] + 1 >= k)
        .unwrap_or(0)
}

pub fn exact_b(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let sg = small_graph(g)?;
    let mut runner = Runner::new(Invariant::B, budget);
    let upper = m_degree(g);
    for k in (1..=upper).rev() {
        match runner.run(k, |m| search::decide_b(&sg, k, m)) {
            Search::Found(colors) => {
                let witness = Coloring::with_k(colors, k).expect("dominators fix all colors");
                debug_assert!(validators::is_b_coloring(g, &witness).unwrap().holds);
                return Ok(runner.finish(k, witness));
            }
            Search::Exhausted => {}
            Search::Unknown => return Err(runner.exhausted(1, k)),
        }
    }
    unreachable!("a proper coloring with χ colors is a b-coloring")
}

/// Decides whether a z-coloring with exactly `k` colors exists.
pub fn z_coloring_with(
    g: &Graph,
    k: usize,
    budget: &Budget,
) -> Result<Option<Coloring>, SolveError> {
    let sg = small_graph(g)?;
    let mut runner = Runner::new(Invariant::Z, budget);
    if k == 0 {
        return Ok(None);
    }
    match runner.run(k, |m| search::decide_z(&sg, k, m)) {
        Search::Found(colors) => Ok(Some(
            Coloring::with_k(colors, k).expect("witness tuple fixes all colors"),
        )),
        Search::Exhausted => Ok(None),
        Search::Unknown => Err(runner.exhausted(0, k)),
    }
}

/// `z(G)`, searching `k` downward from `min(Γ, b)`.
pub fn exact_z(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let grundy = exact_grundy(g, budget)?;
    let b = exact_b(g, budget)?;
    let mut result = z_below(g, grundy.value.min(b.value), budget)?;
    result.nodes_explored += grundy.nodes_explored + b.nodes_explored;
    Ok(result)
}

fn z_below(g: &Graph, upper: usize, budget: &Budget) -> Result<SolveResult, SolveError> {
    let sg = small_graph(g)?;
    let mut runner = Runner::new(Invariant::Z, budget);
    for k in (1..=upper).rev() {
        match runner.run(k, |m| search::decide_z(&sg, k, m)) {
            Search::Found(colors) => {
                let witness = Coloring::with_k(colors, k).expect("witness tuple fixes all colors");
                debug_assert!(validators::is_z_coloring(g, &witness).unwrap().holds);
                return Ok(runner.finish(k, witness));
            }
            Search::Exhausted => {}
            Search::Unknown => return Err(runner.exhausted(1, k)),
        }
    }
    Err(SolveError::NoZColoring)
}

/// All four invariants, reusing `Γ` and `b` as the bound for `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub chromatic: SolveResult,
    pub grundy: SolveResult,
    pub b: SolveResult,
    pub z: SolveResult,
}

impl Invariants {
    pub fn values(&self) -> (usize, usize, usize, usize) {
        (
            self.chromatic.value,
            self.grundy.value,
            self.b.value,
            self.z.value,
        )
    }

    pub fn get(&self, inv: Invariant) -> &SolveResult {
        match inv {
            Invariant::Chromatic => &self.chromatic,
            Invariant::Grundy => &self.grundy,
            Invariant::B => &self.b,
            Invariant::Z => &self.z,
        }
    }
}

pub fn all_invariants(g: &Graph, budget: &Budget) -> Result<Invariants, SolveError> {
    let chromatic = exact_chromatic(g, budget)?;
    let grundy = exact_grundy(g, budget)?;
    let b = exact_b(g, budget)?;
    let z = z_below(g, grundy.value.min(b.value), budget)?;
    Ok(Invariants {
        chromatic,
        grundy,
        b,
        z,
    })
}

pub fn z_spectrum(g: &Graph, budget: &Budget) -> Result<SpectrumResult, SolveError> {
    let chromatic = exact_chromatic(g, budget)?.value;
    let upper = exact_grundy(g, budget)?
        .value
        .min(exact_b(g, budget)?.value);
    let mut achievable = BTreeSet::new();
    for k in 1..=upper {
        if z_coloring_with(g, k, budget)?.is_some() {
            achievable.insert(k);
        }
    }
    Ok(SpectrumResult {
        chromatic_achievable: achievable.contains(&chromatic),
        achievable,
        chromatic,
        upper_bound: upper,
    })
}

/// Every `k` with `χ(T) <= k <= z(T)` is achieved by a z-coloring.
pub fn verify_tree_continuity(t: &Graph, budget: &Budget) -> Result<bool, SolveError> {
    if !t.is_acyclic() {
        return Err(SolveError::Cyclic);
    }
    Ok(z_spectrum(t, budget)?.is_continuous())
}

/// `z(T - v) <= z(T)` for every vertex `v`.
pub fn verify_monotonicity(t: &Graph, budget: &Budget) -> Result<bool, SolveError> {
    if !t.is_acyclic() {
        return Err(SolveError::Cyclic);
    }
    let z = exact_z(t, budget)?.value;
    for v in 0..t.vertex_count() {
        let rest = t.remove_vertex(v);
        if rest.vertex_count() == 0 {
            continue;
        }
        if exact_z(&rest, budget)?.value > z {
            return Ok(false);
        }
    }
    Ok(true)
}
