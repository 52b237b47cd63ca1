//! Exact χ, Γ, b and z with witnesses, plus what a tight node budget does.

use zcolor::families::build_gn;
use zcolor::graph::{standard_graph, GraphKind};
use zcolor::solvers::{all_invariants, exact_z, Budget};

fn main() {
    let g = standard_graph(GraphKind::Petersen).expect("fixed graph");
    let inv = all_invariants(&g, &Budget::unlimited()).expect("10 vertices");
    for r in [&inv.chromatic, &inv.grundy, &inv.b, &inv.z] {
        println!(
            "Petersen {} = {} after {} nodes, witness {:?}",
            r.invariant,
            r.value,
            r.nodes_explored,
            r.witness.colors()
        );
    }
    for run in &inv.z.runs {
        println!("  z run k = {}: {:?}", run.k, run.outcome);
    }

    let g5 = build_gn(5).expect("n >= 3").graph;
    match exact_z(&g5, &Budget::nodes(50)) {
        Ok(r) => println!("G_5 z = {}", r.value),
        Err(e) => println!("G_5 with 50 nodes: {e}"),
    }
}
