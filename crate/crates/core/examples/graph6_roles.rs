//! graph6 encoding and role sidecars for a generated family member.

use zcolor::families::build_gn;
use zcolor::graph6::{emit_graph6, parse_graph6};
use zcolor::RoleMap;

fn main() {
    let inst = build_gn(3).expect("n >= 3");
    let g6 = emit_graph6(&inst.graph).expect("15 vertices");
    println!("G_3 as graph6: {g6}");
    assert_eq!(parse_graph6(&g6).unwrap(), inst.graph);
    let text = inst.roles.to_text();
    print!(
        "{}",
        text.lines()
            .take(5)
            .map(|l| format!("{l}\n"))
            .collect::<String>()
    );
    assert_eq!(RoleMap::parse(&text).unwrap(), inst.roles);
    println!("... {} role lines round trip", inst.roles.len());
    println!("{}", inst.graph.to_dot(Some(&inst.roles)));
}
