//! Compares the exact solvers with the brute-force oracle on random graphs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use zcolor::random::random_graph;
use zcolor::solvers::{all_invariants, brute_force_oracle, Budget};

fn main() {
    let mut rng = StdRng::seed_from_u64(1);
    let mut agree = 0;
    for _ in 0..200 {
        let g = random_graph(rng.gen_range(1..=8), 0.45, &mut rng);
        let exact = all_invariants(&g, &Budget::unlimited()).unwrap().values();
        let o = brute_force_oracle(&g).unwrap();
        if exact == (o.chromatic, o.grundy, o.b, o.z) {
            agree += 1;
        } else {
            println!("disagreement on {g:?}: {exact:?} vs {o:?}");
        }
    }
    println!("{agree}/200 graphs agree");
}
