//! Vertex colorings with nonempty classes `C_1..C_k`, and their text format.
//!
//! ```text
//! k=3
//! 0 1
//! 1 2
//! 2 3
//! ```

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has no vertices")]
    Empty,
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        k: usize,
    },
    #[error("color class {0} is empty")]
    EmptyClass(usize),
    #[error("vertex {0} has no color")]
    MissingVertex(usize),
    #[error("vertex {0} colored twice")]
    DuplicateVertex(usize),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

/// A total, surjective assignment `vertex -> 1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Uses `k = max color`. Gaps are rejected, never renumbered.
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().ok_or(ColoringError::Empty)?;
        Coloring::with_k(colors, k)
    }

    pub fn with_k(colors: Vec<usize>, k: usize) -> Result<Self, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        let mut used = vec![false; k + 1];
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color > k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
            used[color] = true;
        }
        if let Some(j) = (1..=k).find(|&j| !used[j]) {
            return Err(ColoringError::EmptyClass(j));
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Members of class `C_j`, ascending.
    pub fn class(&self, j: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == j)
            .collect()
    }

    /// Classes `C_1..C_k` (index 0 holds `C_1`).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    /// Coloring of `k` disjoint copies, matching repeated
    /// [`crate::graph::disjoint_union`] of the colored graph.
    pub fn repeated(&self, copies: usize) -> Coloring {
        Coloring {
            colors: self.colors.repeat(copies),
            k: self.k,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("k={}\n", self.k);
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ColoringError::Empty)?;
        let k: usize = header
            .strip_prefix("k=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| ColoringError::Malformed {
                line: hline,
                msg: "expected header `k=<int>`".into(),
            })?;
        let mut slots: Vec<Option<usize>> = Vec::new();
        for (line, body) in lines {
            let malformed = |msg: &str| ColoringError::Malformed {
                line,
                msg: msg.into(),
            };
            let mut parts = body.split_whitespace();
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| malformed("expected `<vertex> <color>`"))?;
            let c: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| malformed("expected `<vertex> <color>`"))?;
            if parts.next().is_some() {
                return Err(malformed("trailing tokens"));
            }
            if slots.len() <= v {
                slots.resize(v + 1, None);
            }
            if slots[v].replace(c).is_some() {
                return Err(ColoringError::DuplicateVertex(v));
            }
        }
        let colors = slots
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::MissingVertex(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Coloring::with_k(colors, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_gaps_and_zero() {
        assert_eq!(Coloring::new(vec![1, 3]), Err(ColoringError::EmptyClass(2)));
        assert_eq!(
            Coloring::new(vec![0, 1]),
            Err(ColoringError::ColorOutOfRange {
                vertex: 0,
                color: 0,
                k: 1
            })
        );
        assert_eq!(Coloring::new(vec![]), Err(ColoringError::Empty));
        assert!(Coloring::with_k(vec![1, 2], 3).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Coloring::parse("0 1\n"),
            Err(ColoringError::Malformed { line: 1, .. })
        ));
        assert_eq!(
            Coloring::parse("k=2\n0 1\n2 2\n"),
            Err(ColoringError::MissingVertex(1))
        );
        assert_eq!(
            Coloring::parse("k=1\n0 1\n0 1\n"),
            Err(ColoringError::DuplicateVertex(0))
        );
        assert_eq!(
            Coloring::parse("k=3\n0 1\n1 2\n"),
            Err(ColoringError::EmptyClass(3))
        );
    }

    #[test]
    fn classes_are_indexed_from_one() {
        let c = Coloring::new(vec![2, 1, 2]).unwrap();
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2]]);
        assert_eq!(c.class(2), vec![0, 2]);
    }

    proptest! {
        #[test]
        fn text_round_trip(raw in proptest::collection::vec(1usize..6, 1..30)) {
            // compress to a surjective coloring
            let mut seen: Vec<usize> = raw.clone();
            seen.sort_unstable();
            seen.dedup();
            let colors: Vec<usize> = raw.iter().map(|c| seen.binary_search(c).unwrap() + 1).collect();
            let c = Coloring::new(colors).unwrap();
            prop_assert_eq!(Coloring::parse(&c.to_text()).unwrap(), c);
        }
    }
}
