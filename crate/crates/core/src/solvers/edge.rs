//! Proper 3-edge-colorings of cubic graphs.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeColoringError {
    #[error("graph is not 3-regular")]
    NotCubic,
    #[error("edge coloring has {found} entries for {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {0} has color {1}, outside 1..=3")]
    ColorOutOfRange(usize, u8),
    #[error("edges {0} and {1} share an endpoint and a color")]
    Conflict(usize, usize),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

/// Colors in `1..=3` indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        EdgeColoring { colors }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u8 {
        self.colors[edge]
    }

    /// Checks length, color range and that incident edges differ.
    pub fn check(&self, g: &Graph) -> Result<(), EdgeColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(EdgeColoringError::LengthMismatch {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        if let Some(j) = self.colors.iter().position(|c| !(1..=3).contains(c)) {
            return Err(EdgeColoringError::ColorOutOfRange(j, self.colors[j]));
        }
        let mut seen: Vec<[Option<usize>; 4]> = vec![[None; 4]; g.vertex_count()];
        for (j, &(u, v)) in g.edges().iter().enumerate() {
            let c = self.colors[j] as usize;
            for x in [u, v] {
                if let Some(other) = seen[x][c].replace(j) {
                    return Err(EdgeColoringError::Conflict(other, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    /// `k=3` header, then `<u> <v> <color>` per edge in edge order.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::from("k=3\n");
        for (&(u, v), c) in g.edges().iter().zip(&self.colors) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    pub fn parse(g: &Graph, text: &str) -> Result<Self, EdgeColoringError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let malformed = |line: usize, msg: &str| EdgeColoringError::Malformed {
            line,
            msg: msg.into(),
        };
        match lines.next() {
            Some((_, "k=3")) => {}
            Some((line, _)) => return Err(malformed(line, "expected header `k=3`")),
            None => return Err(malformed(1, "empty edge coloring")),
        }
        let mut colors = vec![0u8; g.edge_count()];
        for (line, body) in lines {
            let nums: Vec<usize> = body
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| malformed(line, "expected integers")))
                .collect::<Result<_, _>>()?;
            let [u, v, c] = nums[..] else {
                return Err(malformed(line, "expected `<u> <v> <color>`"));
            };
            let j = g
                .edge_index(u, v)
                .ok_or_else(|| malformed(line, "no such edge"))?;
            if colors[j] != 0 {
                return Err(malformed(line, "edge colored twice"));
            }
            colors[j] = u8::try_from(c).map_err(|_| malformed(line, "color too large"))?;
        }
        if let Some(j) = colors.iter().position(|&c| c == 0) {
            return Err(EdgeColoringError::ColorOutOfRange(j, 0));
        }
        let out = EdgeColoring { colors };
        out.check(g)?;
        Ok(out)
    }
}

fn require_cubic(g: &Graph) -> Result<(), EdgeColoringError> {
    if g.vertex_count() == 0 || g.degrees().iter().any(|&d| d != 3) {
        return Err(EdgeColoringError::NotCubic);
    }
    Ok(())
}

/// First proper 3-edge-coloring in lexicographic order of edge colors.
pub fn three_edge_coloring(g: &Graph) -> Result<Option<EdgeColoring>, EdgeColoringError> {
    Ok(three_edge_colorings(g, 1)?.pop())
}

/// Up to `limit` distinct proper 3-edge-colorings, in lexicographic order.
pub fn three_edge_colorings(
    g: &Graph,
    limit: usize,
) -> Result<Vec<EdgeColoring>, EdgeColoringError> {
    require_cubic(g)?;
    let mut used = vec![0u8; g.vertex_count()];
    let mut colors = vec![0u8; g.edge_count()];
    let mut out = Vec::new();
    if limit > 0 {
        extend(g, 0, &mut used, &mut colors, &mut out, limit);
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    j: usize,
    used: &mut [u8],
    colors: &mut [u8],
    out: &mut Vec<EdgeColoring>,
    limit: usize,
) {
    if j == g.edge_count() {
        out.push(EdgeColoring::new(colors.to_vec()));
        return;
    }
    let (u, v) = g.edges()[j];
    for c in 1..=3u8 {
        let m = 1 << c;
        if (used[u] | used[v]) & m != 0 {
            continue;
        }
        used[u] |= m;
        used[v] |= m;
        colors[j] = c;
        extend(g, j + 1, used, colors, out, limit);
        used[u] &= !m;
        used[v] &= !m;
        if out.len() >= limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, GraphKind};

    #[test]
    fn k4_and_k33_colorable() {
        let k4 = standard_graph(GraphKind::Complete(4)).unwrap();
        let c = three_edge_coloring(&k4).unwrap().unwrap();
        assert!(c.is_proper(&k4));
        let k33 = standard_graph(GraphKind::CompleteBipartite(3, 3)).unwrap();
        assert!(three_edge_coloring(&k33).unwrap().unwrap().is_proper(&k33));
    }

    #[test]
    fn petersen_is_not() {
        let p = standard_graph(GraphKind::Petersen).unwrap();
        assert_eq!(three_edge_coloring(&p).unwrap(), None);
    }

    #[test]
    fn counts() {
        // one 1-factorization of K_4, colored in 3! ways
        let k4 = standard_graph(GraphKind::Complete(4)).unwrap();
        assert_eq!(three_edge_colorings(&k4, 100).unwrap().len(), 6);
        // Latin squares of order 3
        let k33 = standard_graph(GraphKind::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(three_edge_colorings(&k33, 100).unwrap().len(), 12);
        assert_eq!(three_edge_colorings(&k33, 5).unwrap().len(), 5);
    }

    #[test]
    fn non_cubic_rejected() {
        let c5 = standard_graph(GraphKind::Cycle(5)).unwrap();
        assert_eq!(three_edge_coloring(&c5), Err(EdgeColoringError::NotCubic));
    }

    #[test]
    fn text_round_trip_and_conflicts() {
        let k4 = standard_graph(GraphKind::Complete(4)).unwrap();
        let c = three_edge_coloring(&k4).unwrap().unwrap();
        assert_eq!(EdgeColoring::parse(&k4, &c.to_text(&k4)).unwrap(), c);
        let bad = EdgeColoring::new(vec![1; 6]);
        assert!(matches!(
            bad.check(&k4),
            Err(EdgeColoringError::Conflict(..))
        ));
        assert!(EdgeColoring::parse(&k4, "k=3\n0 1 1\n").is_err());
    }
}
