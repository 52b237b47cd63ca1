//! Runs every validator on a few hand-made colorings and prints the
//! z-certificate when there is one.

use zcolor::graph::{standard_graph, GraphKind};
use zcolor::validators::validate;
use zcolor::Coloring;

fn main() {
    let cases = [
        (GraphKind::Cycle(4), vec![1, 2, 1, 2]),
        (GraphKind::Path(4), vec![1, 2, 3, 1]),
        (GraphKind::Path(5), vec![1, 2, 1, 3, 1]),
        (GraphKind::Complete(3), vec![1, 2, 3]),
    ];
    for (kind, colors) in cases {
        let g = standard_graph(kind).expect("valid parameters");
        let c = Coloring::new(colors.clone()).expect("colors are 1..k");
        match validate(&g, &c) {
            Ok(r) => {
                println!(
                    "{kind:?} {colors:?}: proper={} grundy={} b={} z={}",
                    r.proper, r.grundy, r.b, r.z
                );
                if let Some(v) = r.violation {
                    println!("  first violation: {v}");
                }
                if let Some(cert) = r.certificate {
                    println!("  certificate: {}", serde_json::to_string(&cert).unwrap());
                }
            }
            Err(e) => println!("{kind:?} {colors:?}: {e}"),
        }
    }
}
