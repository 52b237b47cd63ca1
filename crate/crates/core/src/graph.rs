//! Immutable simple undirected graphs.
//!
//! Vertices are dense ids `0..n`. Every derived graph (join, union, incidence
//! graph, induced subgraph) is a new value; composition operations document how
//! vertex ids of their inputs are shifted so role maps stay valid.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::roles::{Role, RoleMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("invalid graph parameter: {0}")]
    InvalidParameter(String),
}

/// A simple undirected graph with contiguous vertex ids.
///
/// Adjacency is kept twice: sorted neighbor lists for linear scans and
/// bit-packed rows for constant-time membership and word-parallel
/// neighborhood intersection.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Loops, duplicates (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let (wa, ba) = (a * words + b / 64, b % 64);
            if rows[wa] >> ba & 1 == 1 {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            rows[wa] |= 1 << ba;
            rows[b * words + a / 64] |= 1 << (a % 64);
            canon.push((a, b));
        }
        canon.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
            words,
            rows,
        })
    }

    /// Graph on `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically. Edge indices
    /// used elsewhere (incidence graphs, edge colorings) refer to this order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bit-packed adjacency row of `v` (`ceil(n/64)` words).
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]))
            .collect();
        Graph::new(keep.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<_> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Copy of the graph without edge `{u, v}`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let idx = self.edge_index(u, v).ok_or(GraphError::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Graph::new(self.n, &edges)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Proper 2-coloring (sides 0/1) found by BFS, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True for forests (including the empty graph).
    pub fn is_acyclic(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.common_neighbors(u, v) > 0)
    }

    /// Graphviz rendering; role labels are used as node labels when given.
    pub fn to_dot(&self, roles: Option<&RoleMap>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            match roles.and_then(|r| r.get(v)) {
                Some(role) => writeln!(out, "  {v} [label=\"{v}\\n{role}\"];").unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// `G1 ⊕ G2`: disjoint union plus every edge between the two sides.
/// `g1` keeps its ids, `g2` ids are shifted by `g1.vertex_count()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.vertex_count();
    let mut edges = shifted_union_edges(g1, g2);
    for u in 0..n1 {
        for v in 0..g2.vertex_count() {
            edges.push((u, n1 + v));
        }
    }
    Graph::new(n1 + g2.vertex_count(), &edges).expect("join of simple graphs is simple")
}

/// `G1 ∪ G2` on disjoint vertex sets; `g2` ids are shifted by `g1.vertex_count()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let edges = shifted_union_edges(g1, g2);
    Graph::new(g1.vertex_count() + g2.vertex_count(), &edges)
        .expect("union of simple graphs is simple")
}

fn shifted_union_edges(g1: &Graph, g2: &Graph) -> Vec<(usize, usize)> {
    let n1 = g1.vertex_count();
    g1.edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)))
        .collect()
}

/// Vertex–edge incidence graph. Original vertex `v` keeps id `v`; edge
/// number `j` of [`Graph::edges`] becomes vertex `n + j`.
pub fn incidence_graph(g: &Graph) -> (Graph, RoleMap) {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + j));
        edges.push((v, n + j));
    }
    let roles = (0..n)
        .map(Role::SourceVertex)
        .chain((0..g.edge_count()).map(Role::SourceEdge))
        .collect();
    let graph = Graph::new(n + g.edge_count(), &edges).expect("incidence graph is simple");
    (graph, RoleMap::new(roles))
}

/// Named graph families with their size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// `K_n`.
    Complete(usize),
    /// `K_{a,b}`: side A is `0..a`, side B is `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `P_n` on `n` vertices, path order `0-1-..-(n-1)`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_{1,k}` with center 0.
    Star(usize),
    /// `M_{n,n} = K_{n,n}` minus the matching `i <-> n+i`.
    MatchedMinus(usize),
    Edgeless(usize),
    Petersen,
}

impl GraphKind {
    pub fn build(self) -> Result<Graph, GraphError> {
        standard_graph(self)
    }
}

pub fn standard_graph(kind: GraphKind) -> Result<Graph, GraphError> {
    let positive = |n: usize, what: &str| {
        if n == 0 {
            Err(GraphError::InvalidParameter(format!(
                "{what} needs a positive size"
            )))
        } else {
            Ok(())
        }
    };
    let graph = match kind {
        GraphKind::Complete(n) => {
            positive(n, "complete graph")?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::new(n, &edges)?
        }
        GraphKind::CompleteBipartite(a, b) => {
            positive(a, "complete bipartite side A")?;
            positive(b, "complete bipartite side B")?;
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (0..b).map(move |v| (u, a + v)))
                .collect();
            Graph::new(a + b, &edges)?
        }
        GraphKind::Path(n) => {
            positive(n, "path")?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::new(n, &edges)?
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidParameter(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::new(n, &edges)?
        }
        GraphKind::Star(k) => {
            positive(k, "star")?;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::new(k + 1, &edges)?
        }
        GraphKind::MatchedMinus(n) => {
            positive(n, "M_{n,n}")?;
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)))
                .collect();
            Graph::new(2 * n, &edges)?
        }
        GraphKind::Edgeless(n) => {
            positive(n, "edgeless graph")?;
            Graph::edgeless(n)
        }
        GraphKind::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(10, &edges)?
        }
    };
    Ok(graph)
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    /// Degrees sorted ascending.
    pub degree_sequence: Vec<usize>,
    pub max_degree: usize,
    pub bipartite: bool,
    pub tree: bool,
    /// `Some(k)` when every vertex has degree `k`.
    pub regular: Option<usize>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable();
    let regular = match (degree_sequence.first(), degree_sequence.last()) {
        (Some(lo), Some(hi)) if lo == hi => Some(*lo),
        _ => None,
    };
    GraphStats {
        max_degree: g.max_degree(),
        bipartite: g.is_bipartite(),
        tree: g.is_tree(),
        regular,
        degree_sequence,
    }
}
