//! The two hardness constructions: cubic graph → bipartite instance `H`
//! with colorings translated in both directions, and the well-coloredness
//! gadget `G + P_4 + K_Δ`.

mod hardness;
mod wellcolored;

use thiserror::Error;

use crate::graph::Graph;
use crate::roles::{Role, RoleMap};
use crate::solvers::EdgeColoringError;
use crate::validators::ValidationError;

pub use hardness::{
    build_hardness_instance, build_t_gadget, expected_vertex_count, lift_edge_coloring,
    project_z_coloring, synth_f_gadget, verify_structure_facts, FactCheck, HardnessInstance,
    StructureReport,
};
pub use wellcolored::build_wellcolored_instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("source graph is not 3-regular")]
    NotCubic,
    #[error("base graph is not bipartite")]
    NotBipartite,
    #[error("base graph is not connected")]
    Disconnected,
    #[error("base graph has no edges")]
    NoEdges,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    EdgeColoring(#[from] EdgeColoringError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("coloring has {found} colors, expected {expected}")]
    WrongColorCount { expected: usize, found: usize },
    #[error("coloring is not a z-coloring: {0}")]
    NotZColoring(String),
    /// A valid `(n+4)`-color z-coloring whose edge vertices do not project to
    /// a proper 3-edge-coloring. Indicates a bug in the construction.
    #[error("edge vertex {edge} has color {color}, outside 1..=3")]
    ContractViolation { edge: usize, color: usize },
}

/// Accumulates vertices with roles and edges, then freezes into a graph.
#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn add(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Copies `g` in with ids shifted to the end; returns the offset.
    fn absorb(&mut self, g: &Graph, roles: &RoleMap) -> usize {
        let base = self.roles.len();
        self.roles.extend_from_slice(roles.roles());
        self.edges
            .extend(g.edges().iter().map(|&(u, v)| (u + base, v + base)));
        base
    }

    fn finish(self) -> (Graph, RoleMap) {
        let g = Graph::new(self.roles.len(), &self.edges).expect("constructions are simple");
        (g, RoleMap::new(self.roles))
    }
}
