//! Builds `G_n` and the tree atoms and compares their known invariant
//! values with what the exact solvers compute.

use zcolor::families::{build_gn, build_tree_atom};
use zcolor::graph::graph_stats;
use zcolor::solvers::{all_invariants, Budget};

fn main() {
    for n in 3..=5 {
        let inst = build_gn(n).expect("n >= 3");
        let stats = graph_stats(&inst.graph);
        let (chi, gamma, b, z) = all_invariants(&inst.graph, &Budget::unlimited())
            .expect("small enough")
            .values();
        println!(
            "G_{n}: |V| = {}, Δ = {}, (χ, Γ, b, z) = ({chi}, {gamma}, {b}, {z}), expected {:?}",
            inst.graph.vertex_count(),
            stats.max_degree,
            inst.expected.values().collect::<Vec<_>>()
        );
    }
    for k in 1..=6 {
        let atom = build_tree_atom(k).expect("k >= 1");
        let (_, gamma, _, z) = all_invariants(&atom.graph, &Budget::unlimited())
            .expect("small enough")
            .values();
        println!(
            "T_{k}: |V| = {}, Γ = {gamma}, z = {z}",
            atom.graph.vertex_count()
        );
    }
}
