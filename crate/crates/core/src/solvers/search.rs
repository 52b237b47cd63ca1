//! Constraint search over color domains.
//!
//! Each vertex carries a bitmask domain: bit `c` allows color `c`, bit 0
//! (partial mode only) allows leaving the vertex uncolored. Propagation
//! enforces properness, the Grundy filter (a vertex may only take color `j`
//! if its neighborhood can still supply `1..j`) and demands of fixed
//! vertices: a colored vertex must see every lower color (Grundy mode) and
//! a designated dominator must see every other color.

use std::time::Instant;

use super::Budget;

pub(crate) type Dom = u128;

#[inline]
pub(crate) fn bit(c: usize) -> Dom {
    1 << c
}

/// Bits `lo..=hi`; empty when `lo > hi`.
#[inline]
pub(crate) fn span(lo: usize, hi: usize) -> Dom {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 127 {
        Dom::MAX
    } else {
        (1 << (hi + 1)) - 1
    };
    upper & !((1 << lo) - 1)
}

#[inline]
fn is_single(d: Dom) -> bool {
    d.is_power_of_two()
}

fn colors_of(d: Dom) -> impl Iterator<Item = usize> {
    let mut rest = d;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let c = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(c)
    })
}

/// Node and wall-clock accounting for one solver call.
pub(crate) struct Meter {
    pub nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    pub fn new(budget: &Budget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|d| Instant::now() + d),
        }
    }

    /// Counts a node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return false;
        }
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                return Instant::now() < d;
            }
        }
        true
    }
}

pub(crate) enum Search {
    Found(Vec<usize>),
    Exhausted,
    Unknown,
}

/// Adjacency lists for graphs with at most 64 vertices.
pub(crate) struct SmallGraph {
    pub n: usize,
    pub nbrs: Vec<Vec<usize>>,
}

impl SmallGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }
}

#[derive(Clone)]
pub(crate) struct State {
    pub dom: Vec<Dom>,
    pub dominators: u64,
}

pub(crate) struct Engine<'a> {
    pub g: &'a SmallGraph,
    pub k: usize,
    pub grundy: bool,
    pub partial: bool,
    pub meter: &'a mut Meter,
}

impl<'a> Engine<'a> {
    /// Initial state: every color `1..=k` (and "uncolored" in partial mode),
    /// restricted by degree when the Grundy filter is on.
    pub fn initial(&self) -> State {
        let base = span(if self.partial { 0 } else { 1 }, self.k);
        let dom = (0..self.g.n)
            .map(|v| {
                if self.grundy {
                    base & span(0, self.g.degree(v) + 1)
                } else {
                    base
                }
            })
            .collect();
        State { dom, dominators: 0 }
    }

    fn required(&self, st: &State, v: usize, j: usize) -> Dom {
        let mut req = 0;
        if self.grundy {
            req |= span(1, j - 1);
        }
        if st.dominators >> v & 1 == 1 {
            req |= span(1, self.k) & !bit(j);
        }
        req
    }

    /// Colors `v` (fixed to color `j`) still has to see in its neighborhood.
    fn missing(&self, st: &State, v: usize, j: usize) -> Dom {
        let req = self.required(st, v, j);
        if req == 0 {
            return 0;
        }
        let provided = self.g.nbrs[v]
            .iter()
            .map(|&x| st.dom[x])
            .filter(|&d| is_single(d))
            .fold(0, |acc, d| acc | d);
        req & !provided
    }

    /// Runs all filters to a fixpoint; false on a wipe-out.
    pub fn propagate(&self, st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.g.n {
                if st.dom[v] == 0 {
                    return false;
                }
                if self.grundy {
                    let union = self.g.nbrs[v].iter().fold(0, |acc, &x| acc | st.dom[x]);
                    // colors 1..=t are available around v, so v's color is at most t+1
                    let t = (!(union >> 1)).trailing_zeros() as usize;
                    let nd = st.dom[v] & span(0, t + 1);
                    if nd != st.dom[v] {
                        if nd == 0 {
                            return false;
                        }
                        st.dom[v] = nd;
                        changed = true;
                    }
                }
                let d = st.dom[v];
                if !is_single(d) || d == 1 {
                    continue;
                }
                for &x in &self.g.nbrs[v] {
                    if st.dom[x] & d != 0 {
                        st.dom[x] &= !d;
                        if st.dom[x] == 0 {
                            return false;
                        }
                        changed = true;
                    }
                }
                let j = d.trailing_zeros() as usize;
                let missing = self.missing(st, v, j);
                if missing == 0 {
                    continue;
                }
                let open = self.g.nbrs[v]
                    .iter()
                    .filter(|&&x| !is_single(st.dom[x]) && st.dom[x] & missing != 0)
                    .count();
                if open < missing.count_ones() as usize {
                    return false;
                }
                for i in colors_of(missing) {
                    let mut suppliers = self.g.nbrs[v].iter().filter(|&&x| st.dom[x] & bit(i) != 0);
                    match (suppliers.next(), suppliers.next()) {
                        (None, _) => return false,
                        (Some(&x), None) if st.dom[x] != bit(i) => {
                            st.dom[x] = bit(i);
                            changed = true;
                        }
                        _ => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn assignment(&self, st: &State) -> Vec<usize> {
        st.dom
            .iter()
            .map(|&d| {
                if is_single(d) {
                    d.trailing_zeros() as usize
                } else {
                    0
                }
            })
            .collect()
    }

    pub fn search(&mut self, mut st: State) -> Search {
        if !self.meter.tick() {
            return Search::Unknown;
        }
        if !self.propagate(&mut st) {
            return Search::Exhausted;
        }

        // Unmet demand with the fewest possible suppliers.
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n {
            let d = st.dom[v];
            if !is_single(d) || d == 1 {
                continue;
            }
            let missing = self.missing(&st, v, d.trailing_zeros() as usize);
            for i in colors_of(missing) {
                let count = self.g.nbrs[v]
                    .iter()
                    .filter(|&&x| st.dom[x] & bit(i) != 0)
                    .count();
                if best.is_none_or(|(c, _, _)| count < c) {
                    best = Some((count, v, i));
                }
            }
        }
        if let Some((_, v, i)) = best {
            let suppliers: Vec<usize> = self.g.nbrs[v]
                .iter()
                .copied()
                .filter(|&x| st.dom[x] & bit(i) != 0)
                .collect();
            let mut unknown = false;
            for x in suppliers {
                let mut child = st.clone();
                child.dom[x] = bit(i);
                match self.search(child) {
                    Search::Found(a) => return Search::Found(a),
                    Search::Unknown => unknown = true,
                    Search::Exhausted => {}
                }
                st.dom[x] &= !bit(i);
            }
            return if unknown {
                Search::Unknown
            } else {
                Search::Exhausted
            };
        }

        if self.partial {
            return Search::Found(self.assignment(&st));
        }

        let pick = (0..self.g.n)
            .filter(|&v| !is_single(st.dom[v]))
            .min_by_key(|&v| (st.dom[v].count_ones(), v));
        let Some(v) = pick else {
            return Search::Found(self.assignment(&st));
        };
        let mut unknown = false;
        for c in colors_of(st.dom[v]) {
            let mut child = st.clone();
            child.dom[v] = bit(c);
            match self.search(child) {
                Search::Found(a) => return Search::Found(a),
                Search::Unknown => unknown = true,
                Search::Exhausted => {}
            }
        }
        if unknown {
            Search::Unknown
        } else {
            Search::Exhausted
        }
    }
}

/// Grundy: is there a partial Grundy coloring using color `k`?
pub(crate) fn decide_grundy(g: &SmallGraph, k: usize, meter: &mut Meter) -> Search {
    let mut engine = Engine {
        g,
        k,
        grundy: true,
        partial: true,
        meter,
    };
    let mut base = engine.initial();
    let mut unknown = false;
    for root in 0..g.n {
        if base.dom[root] & bit(k) == 0 {
            continue;
        }
        let mut st = base.clone();
        st.dom[root] = bit(k);
        match engine.search(st) {
            Search::Found(a) => return Search::Found(a),
            Search::Unknown => unknown = true,
            Search::Exhausted => {}
        }
        // every solution coloring `root` with k has been explored
        base.dom[root] &= !bit(k);
    }
    if unknown {
        Search::Unknown
    } else {
        Search::Exhausted
    }
}

/// b-coloring with exactly `k` colors. Dominators `d_1 < d_2 < ... < d_k`
/// (one per class) take colors `1..k` in id order, which fixes the color
/// permutation.
pub(crate) fn decide_b(g: &SmallGraph, k: usize, meter: &mut Meter) -> Search {
    let mut engine = Engine {
        g,
        k,
        grundy: false,
        partial: false,
        meter,
    };
    let candidates: Vec<usize> = (0..g.n).filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return Search::Exhausted;
    }
    let st = engine.initial();
    choose_dominators(&mut engine, st, &candidates, 1, 0)
}

fn choose_dominators(
    engine: &mut Engine<'_>,
    st: State,
    candidates: &[usize],
    color: usize,
    start: usize,
) -> Search {
    let k = engine.k;
    if color > k {
        return engine.search(st);
    }
    let mut unknown = false;
    let last = candidates.len() - (k - color);
    for idx in start..last {
        let d = candidates[idx];
        if st.dom[d] & bit(color) == 0 {
            continue;
        }
        if !engine.meter.tick() {
            return Search::Unknown;
        }
        let mut child = st.clone();
        child.dom[d] = bit(color);
        child.dominators |= 1 << d;
        if !engine.propagate(&mut child) {
            continue;
        }
        match choose_dominators(engine, child, candidates, color + 1, idx + 1) {
            Search::Found(a) => return Search::Found(a),
            Search::Unknown => unknown = true,
            Search::Exhausted => {}
        }
    }
    if unknown {
        Search::Unknown
    } else {
        Search::Exhausted
    }
}

/// z-coloring with exactly `k` colors: a nice vertex `w` of color `k`,
/// dominating neighbors `u_{k-1}, ..., u_1`, and a Grundy completion.
pub(crate) fn decide_z(g: &SmallGraph, k: usize, meter: &mut Meter) -> Search {
    let mut engine = Engine {
        g,
        k,
        grundy: true,
        partial: false,
        meter,
    };
    let base = engine.initial();
    let mut unknown = false;
    for w in 0..g.n {
        if g.degree(w) + 1 < k || base.dom[w] & bit(k) == 0 {
            continue;
        }
        if !engine.meter.tick() {
            return Search::Unknown;
        }
        let mut st = base.clone();
        st.dom[w] = bit(k);
        st.dominators |= 1 << w;
        if !engine.propagate(&mut st) {
            continue;
        }
        match choose_witnesses(&mut engine, st, w, k - 1) {
            Search::Found(a) => return Search::Found(a),
            Search::Unknown => unknown = true,
            Search::Exhausted => {}
        }
    }
    if unknown {
        Search::Unknown
    } else {
        Search::Exhausted
    }
}

fn choose_witnesses(engine: &mut Engine<'_>, st: State, w: usize, color: usize) -> Search {
    if color == 0 {
        return engine.search(st);
    }
    let k = engine.k;
    let g = engine.g;
    let mut unknown = false;
    for &u in &g.nbrs[w] {
        if g.degree(u) + 1 < k || st.dominators >> u & 1 == 1 || st.dom[u] & bit(color) == 0 {
            continue;
        }
        if !engine.meter.tick() {
            return Search::Unknown;
        }
        let mut child = st.clone();
        child.dom[u] = bit(color);
        child.dominators |= 1 << u;
        if !engine.propagate(&mut child) {
            continue;
        }
        match choose_witnesses(engine, child, w, color - 1) {
            Search::Found(a) => return Search::Found(a),
            Search::Unknown => unknown = true,
            Search::Exhausted => {}
        }
    }
    if unknown {
        Search::Unknown
    } else {
        Search::Exhausted
    }
}

/// Proper coloring with at most `k` colors. Vertices are colored in id
/// order and a vertex may open only the next unused color, so the first
/// vertex of each class comes after the first vertex of the previous one.
pub(crate) fn decide_proper(g: &SmallGraph, k: usize, meter: &mut Meter) -> Search {
    let mut dom = vec![span(1, k); g.n];
    let mut colors = vec![0; g.n];
    match proper_rec(g, k, 0, 0, &mut dom, &mut colors, meter) {
        Some(true) => Search::Found(colors),
        Some(false) => Search::Exhausted,
        None => Search::Unknown,
    }
}

fn proper_rec(
    g: &SmallGraph,
    k: usize,
    v: usize,
    used: usize,
    dom: &mut Vec<Dom>,
    colors: &mut Vec<usize>,
    meter: &mut Meter,
) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    if v == g.n {
        return Some(true);
    }
    let allowed = dom[v] & span(1, (used + 1).min(k));
    for c in colors_of(allowed) {
        let saved = dom.clone();
        let mut ok = true;
        for &x in &g.nbrs[v] {
            if x > v {
                dom[x] &= !bit(c);
                if dom[x] == 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            colors[v] = c;
            match proper_rec(g, k, v + 1, used.max(c), dom, colors, meter) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
        }
        *dom = saved;
    }
    Some(false)
}
