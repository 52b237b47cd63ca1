//! Deterministic generators for the gadget families with closed-form
//! invariant values: the separating graphs `G_n` and the tree atoms `T_k`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;
use crate::roles::{Role, RoleMap};
use crate::solvers::Invariant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got {got}")]
    InvalidParameter {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
}

/// A generated graph, its role labels and the invariant values the
/// construction is known to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub roles: RoleMap,
    pub expected: BTreeMap<Invariant, usize>,
}

/// `G_n`: core clique `v_1..v_n`, a clique `K(v_i)` hanging off every core
/// vertex, and `n - 1` leaves on `v_1^i`.
///
/// Ids: core `0..n`; then for each block `i` the clique members
/// `v_1^i..v_{n-1}^i`; then for each block `i` its `n - 1` leaves.
pub fn build_gn(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter {
            family: "G_n",
            requirement: "n >= 3",
            got: n,
        });
    }
    let clique = |i: usize, j: usize| n + i * (n - 1) + j;
    let leaf = |i: usize, j: usize| n + n * (n - 1) + i * (n - 1) + j;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    for i in 0..n {
        let members: Vec<usize> = (0..n - 1).map(|j| clique(i, j)).chain([i]).collect();
        for (p, &a) in members.iter().enumerate() {
            for &b in &members[p + 1..] {
                edges.push((a, b));
            }
        }
        for j in 0..n - 1 {
            edges.push((clique(i, 0), leaf(i, j)));
        }
    }
    let mut roles: Vec<Role> = (0..n).map(Role::Core).collect();
    for block in 0..n {
        roles.extend((0..n - 1).map(|index| Role::CliqueMember { block, index }));
    }
    for block in 0..n {
        roles.extend((0..n - 1).map(|index| Role::Leaf { block, index }));
    }
    let graph = Graph::new(n * (2 * n - 1), &edges).expect("G_n edges are simple");
    let expected = BTreeMap::from([
        (Invariant::Chromatic, n),
        (Invariant::Z, n),
        (Invariant::Grundy, 2 * n - 1),
        (Invariant::B, 2 * n - 1),
    ]);
    Ok(FamilyInstance {
        graph,
        roles: RoleMap::new(roles),
        expected,
    })
}

/// Tree atom `T_k`: `T_1 = K_1`, and `T_{k+1}` adds one leaf to every vertex
/// of `T_k`. The leaf of vertex `v` gets id `|V(T_k)| + v`.
pub fn build_tree_atom(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k < 1 {
        return Err(FamilyError::InvalidParameter {
            family: "T_k",
            requirement: "k >= 1",
            got: k,
        });
    }
    let mut size = 1usize;
    let mut edges = Vec::new();
    let mut roles = vec![Role::AtomLevel(1)];
    for level in 2..=k {
        for v in 0..size {
            edges.push((v, size + v));
            roles.push(Role::AtomLevel(level));
        }
        size *= 2;
    }
    let graph = Graph::new(size, &edges).expect("atom edges are simple");
    let expected = BTreeMap::from([
        (Invariant::Grundy, k),
        (Invariant::Z, tree_atom_z_value(k)?),
    ]);
    Ok(FamilyInstance {
        graph,
        roles: RoleMap::new(roles),
        expected,
    })
}

/// `⌈(k + 1) / 2⌉`.
pub fn tree_atom_z_value(k: usize) -> Result<usize, FamilyError> {
    if k < 1 {
        return Err(FamilyError::InvalidParameter {
            family: "T_k",
            requirement: "k >= 1",
            got: k,
        });
    }
    Ok((k + 2) / 2)
}
