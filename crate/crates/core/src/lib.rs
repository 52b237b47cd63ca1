//! Exact z-coloring, Grundy and b-chromatic computations on small graphs,
//! the graph families they are studied on, and the reductions used to show
//! hardness.

pub mod cli;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod reductions;
pub mod roles;
pub mod solvers;
pub mod validators;

pub use coloring::Coloring;
pub use graph::Graph;
pub use roles::{Role, RoleMap};
pub use solvers::{Budget, Invariant};
