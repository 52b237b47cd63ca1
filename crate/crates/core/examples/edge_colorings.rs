//! Counting proper 3-edge-colorings of small cubic graphs.

use zcolor::graph::{standard_graph, GraphKind};
use zcolor::solvers::three_edge_colorings;

fn main() {
    for kind in [
        GraphKind::Complete(4),
        GraphKind::CompleteBipartite(3, 3),
        GraphKind::Petersen,
    ] {
        let g = standard_graph(kind).expect("valid parameters");
        let all = three_edge_colorings(&g, usize::MAX).expect("cubic");
        println!("{kind:?}: {} colorings", all.len());
        if let Some(first) = all.first() {
            print!("{}", first.to_text(&g));
        }
    }
}
