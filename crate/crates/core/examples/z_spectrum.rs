//! The set of k admitting a z-coloring with k colors, on a random tree and
//! on a few small graphs.

use rand::rngs::StdRng;
use rand::SeedableRng;

use zcolor::graph::{standard_graph, GraphKind};
use zcolor::random::random_tree;
use zcolor::solvers::{verify_monotonicity, verify_tree_continuity, z_spectrum, Budget};

fn main() {
    let budget = Budget::unlimited();
    let mut rng = StdRng::seed_from_u64(42);
    let tree = random_tree(12, &mut rng);
    let s = z_spectrum(&tree, &budget).expect("12 vertices");
    println!(
        "random tree: χ = {}, z = {}, spectrum {:?}, continuous = {}, monotone = {}",
        s.chromatic,
        s.z(),
        s.achievable,
        verify_tree_continuity(&tree, &budget).unwrap(),
        verify_monotonicity(&tree, &budget).unwrap()
    );
    for kind in [
        GraphKind::Cycle(6),
        GraphKind::MatchedMinus(4),
        GraphKind::Petersen,
    ] {
        let g = standard_graph(kind).expect("valid parameters");
        let s = z_spectrum(&g, &budget).expect("small graph");
        println!(
            "{kind:?}: spectrum {:?}, bound min(Γ, b) = {}, χ achievable = {}",
            s.achievable, s.upper_bound, s.chromatic_achievable
        );
    }
}
