//! `G + P_4 + K_Δ`: z(H) = χ(H) exactly when z(G) <= Δ(G).

use zcolor::graph::{standard_graph, GraphKind};
use zcolor::reductions::build_wellcolored_instance;
use zcolor::solvers::{exact_chromatic, exact_z, Budget};

fn main() {
    let b = Budget::unlimited();
    for kind in [
        GraphKind::Path(4),
        GraphKind::Cycle(6),
        GraphKind::CompleteBipartite(2, 3),
        GraphKind::Star(4),
    ] {
        let g = standard_graph(kind).expect("valid parameters");
        let (h, _) = build_wellcolored_instance(&g).expect("connected bipartite");
        let zg = exact_z(&g, &b).unwrap().value;
        let zh = exact_z(&h, &b).unwrap().value;
        let chi = exact_chromatic(&h, &b).unwrap().value;
        println!(
            "{kind:?}: z(G) = {zg}, Δ = {}, z(H) = {zh}, χ(H) = {chi}",
            g.max_degree()
        );
    }
}
