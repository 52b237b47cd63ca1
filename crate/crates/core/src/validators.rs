//! Certified checks for proper, Grundy, b- and z-colorings.
//!
//! Every check runs in `O(|V| + |E|)` using a per-color stamp array; no
//! check allocates more than `O(|V| + k)` memory.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    VertexCountMismatch { graph: usize, coloring: usize },
    #[error("coloring is not proper: edge {{{0}, {1}}} is monochromatic")]
    Improper(usize, usize),
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MonochromaticEdge {
        u: usize,
        v: usize,
    },
    /// `vertex` has color above `color` but no neighbor colored `color`.
    MissingLowerColor {
        vertex: usize,
        color: usize,
    },
    NoDominatingVertex {
        color: usize,
    },
    /// No vertex of the top color sees dominating vertices of all other colors.
    NoNiceVertex,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MonochromaticEdge { u, v } => {
                write!(f, "edge {{{u}, {v}}} is monochromatic")
            }
            Violation::MissingLowerColor { vertex, color } => {
                write!(f, "vertex {vertex} has no neighbor of color {color}")
            }
            Violation::NoDominatingVertex { color } => {
                write!(f, "class {color} has no color-dominating vertex")
            }
            Violation::NoNiceVertex => write!(f, "no nice vertex in the top class"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn from_violation(violation: Option<Violation>) -> Self {
        Verdict {
            holds: violation.is_none(),
            violation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BVerdict {
    pub holds: bool,
    /// Lowest-id color-dominating vertex of each class (index 0 is `C_1`).
    pub dominators: Vec<Option<usize>>,
    pub violation: Option<Violation>,
}

/// Witness tuple `u_1..u_k` of a z-coloring; `u_k` is the nice vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZCertificate {
    pub k: usize,
    pub witness: Vec<usize>,
    pub nice_vertex: usize,
}

impl ZCertificate {
    /// Re-checks conditions (ii) and (iii) directly from the definition,
    /// without the stamp machinery used to find the certificate.
    pub fn check(&self, g: &Graph, c: &Coloring) -> bool {
        let k = c.k();
        if self.k != k
            || self.witness.len() != k
            || self.witness.last() != Some(&self.nice_vertex)
            || c.len() != g.vertex_count()
        {
            return false;
        }
        for (idx, &u) in self.witness.iter().enumerate() {
            if u >= g.vertex_count() || c.color(u) != idx + 1 {
                return false;
            }
            if u != self.nice_vertex && !g.has_edge(u, self.nice_vertex) {
                return false;
            }
            let seen: BTreeSet<usize> = g.neighbors(u).iter().map(|&x| c.color(x)).collect();
            if (1..=k).any(|i| i != idx + 1 && !seen.contains(&i)) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZVerdict {
    pub holds: bool,
    pub certificate: Option<ZCertificate>,
    pub violation: Option<Violation>,
}

/// All four flags at once. A false flag always carries a violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub proper: bool,
    pub grundy: bool,
    pub b: bool,
    pub z: bool,
    pub certificate: Option<ZCertificate>,
    pub violation: Option<Violation>,
}

fn check_len(g: &Graph, c: &Coloring) -> Result<(), ValidationError> {
    if g.vertex_count() != c.len() {
        return Err(ValidationError::VertexCountMismatch {
            graph: g.vertex_count(),
            coloring: c.len(),
        });
    }
    Ok(())
}

fn monochromatic_edge(g: &Graph, c: &Coloring) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| c.color(u) == c.color(v))
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<(), ValidationError> {
    check_len(g, c)?;
    match monochromatic_edge(g, c) {
        Some((u, v)) => Err(ValidationError::Improper(u, v)),
        None => Ok(()),
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Verdict, ValidationError> {
    check_len(g, c)?;
    Ok(Verdict::from_violation(
        monochromatic_edge(g, c).map(|(u, v)| Violation::MonochromaticEdge { u, v }),
    ))
}

/// Per-color stamp array: `seen[color] == stamp` marks a color as present
/// in the neighborhood currently being scanned.
struct Stamps {
    seen: Vec<usize>,
}

impl Stamps {
    fn new(k: usize) -> Self {
        Stamps {
            seen: vec![usize::MAX; k + 1],
        }
    }

    /// Marks the neighbor colors of `v`; returns the number of distinct ones.
    fn scan(&mut self, g: &Graph, c: &Coloring, v: usize) -> usize {
        let mut distinct = 0;
        for &u in g.neighbors(v) {
            let col = c.color(u);
            if self.seen[col] != v {
                self.seen[col] = v;
                distinct += 1;
            }
        }
        distinct
    }

    fn has(&self, v: usize, color: usize) -> bool {
        self.seen[color] == v
    }
}

fn grundy_violation(g: &Graph, c: &Coloring) -> Option<Violation> {
    let mut stamps = Stamps::new(c.k());
    for v in 0..g.vertex_count() {
        let j = c.color(v);
        if j == 1 {
            continue;
        }
        stamps.scan(g, c, v);
        if let Some(color) = (1..j).find(|&i| !stamps.has(v, i)) {
            return Some(Violation::MissingLowerColor { vertex: v, color });
        }
    }
    None
}

fn dominating_flags(g: &Graph, c: &Coloring) -> Vec<bool> {
    let mut stamps = Stamps::new(c.k());
    (0..g.vertex_count())
        .map(|v| stamps.scan(g, c, v) == c.k() - 1)
        .collect()
}

/// Condition (i): every vertex of color `j` sees every color `i < j`.
pub fn is_grundy(g: &Graph, c: &Coloring) -> Result<Verdict, ValidationError> {
    require_proper(g, c)?;
    Ok(Verdict::from_violation(grundy_violation(g, c)))
}

/// Vertices of `C_j` adjacent to every other class.
pub fn dominating_vertices(
    g: &Graph,
    c: &Coloring,
    j: usize,
) -> Result<Vec<usize>, ValidationError> {
    require_proper(g, c)?;
    if j == 0 || j > c.k() {
        return Err(ValidationError::ColorOutOfRange { color: j, k: c.k() });
    }
    let flags = dominating_flags(g, c);
    Ok((0..g.vertex_count())
        .filter(|&v| c.color(v) == j && flags[v])
        .collect())
}

pub fn is_b_coloring(g: &Graph, c: &Coloring) -> Result<BVerdict, ValidationError> {
    require_proper(g, c)?;
    let flags = dominating_flags(g, c);
    let mut dominators = vec![None; c.k()];
    for v in (0..g.vertex_count()).rev() {
        if flags[v] {
            dominators[c.color(v) - 1] = Some(v);
        }
    }
    let violation = dominators
        .iter()
        .position(Option::is_none)
        .map(|idx| Violation::NoDominatingVertex { color: idx + 1 });
    Ok(BVerdict {
        holds: violation.is_none(),
        dominators,
        violation,
    })
}

/// Conditions (i)–(iii). Nice-vertex candidates are scanned by ascending id
/// and the lowest-id dominating neighbor of each color is taken as `u_j`.
pub fn is_z_coloring(g: &Graph, c: &Coloring) -> Result<ZVerdict, ValidationError> {
    require_proper(g, c)?;
    if let Some(v) = grundy_violation(g, c) {
        return Ok(ZVerdict {
            holds: false,
            certificate: None,
            violation: Some(v),
        });
    }
    let k = c.k();
    let flags = dominating_flags(g, c);
    let mut slot = vec![usize::MAX; k + 1];
    let mut stamp = vec![usize::MAX; k + 1];
    for w in 0..g.vertex_count() {
        if c.color(w) != k || !flags[w] {
            continue;
        }
        let mut found = 0;
        for &u in g.neighbors(w) {
            let col = c.color(u);
            if flags[u] && stamp[col] != w {
                stamp[col] = w;
                slot[col] = u;
                found += 1;
            }
        }
        if found == k - 1 {
            let mut witness: Vec<usize> = slot[1..k].to_vec();
            witness.push(w);
            return Ok(ZVerdict {
                holds: true,
                certificate: Some(ZCertificate {
                    k,
                    witness,
                    nice_vertex: w,
                }),
                violation: None,
            });
        }
    }
    Ok(ZVerdict {
        holds: false,
        certificate: None,
        violation: Some(Violation::NoNiceVertex),
    })
}

pub fn validate(g: &Graph, c: &Coloring) -> Result<ValidationReport, ValidationError> {
    check_len(g, c)?;
    if let Some((u, v)) = monochromatic_edge(g, c) {
        return Ok(ValidationReport {
            proper: false,
            grundy: false,
            b: false,
            z: false,
            certificate: None,
            violation: Some(Violation::MonochromaticEdge { u, v }),
        });
    }
    let grundy = is_grundy(g, c)?;
    let b = is_b_coloring(g, c)?;
    let z = is_z_coloring(g, c)?;
    let violation = z.violation.or(grundy.violation).or(b.violation);
    Ok(ValidationReport {
        proper: true,
        grundy: grundy.holds,
        b: b.holds,
        z: z.holds,
        certificate: z.certificate,
        violation,
    })
}
