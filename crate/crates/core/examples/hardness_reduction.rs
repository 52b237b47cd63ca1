//! Cubic graph → bipartite instance H, its degree facts, and colorings
//! carried across in both directions.

use zcolor::graph::{standard_graph, GraphKind};
use zcolor::reductions::{
    build_hardness_instance, lift_edge_coloring, project_z_coloring, verify_structure_facts,
};
use zcolor::solvers::three_edge_coloring;
use zcolor::validators::is_z_coloring;

fn main() {
    for kind in [
        GraphKind::Complete(4),
        GraphKind::CompleteBipartite(3, 3),
        GraphKind::Petersen,
    ] {
        let g = standard_graph(kind).expect("valid parameters");
        let inst = build_hardness_instance(&g).expect("cubic");
        println!(
            "{kind:?}: |V(H)| = {}, Δ(H) = {}",
            inst.h.vertex_count(),
            inst.h.max_degree()
        );
        let report = verify_structure_facts(&inst);
        for fact in &report.facts {
            println!("  fact ({}) {}: {}", fact.id, fact.description, fact.holds);
        }
        println!("  bipartite: {}", report.bipartite);
        let Some(theta) = three_edge_coloring(&g).expect("cubic") else {
            println!("  no 3-edge-coloring, so z(H) <= Δ(H)");
            continue;
        };
        let c = lift_edge_coloring(&inst, &theta).expect("proper edge coloring");
        let cert = is_z_coloring(&inst.h, &c)
            .unwrap()
            .certificate
            .expect("lift is a z-coloring");
        println!(
            "  lifted to {} colors, nice vertex {}",
            c.k(),
            cert.nice_vertex
        );
        let back = project_z_coloring(&inst, &c).expect("valid z-coloring");
        println!("  projected back unchanged: {}", back == theta);
    }
}
