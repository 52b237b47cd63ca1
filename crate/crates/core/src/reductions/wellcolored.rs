use crate::graph::Graph;
use crate::roles::{Role, RoleMap};

use super::{Builder, ReductionError};

/// `H = G + P_4 + K_Δ`: `v_1` of the path is joined to every vertex of `g`,
/// `v_4` to every vertex of a clique on `Δ(g)` vertices. Then
/// `z(H) = max{z(g), Δ(g)} + 1` and `χ(H) = max{χ(g), Δ(g)} + 1`.
///
/// Ids: `g` keeps its ids, the path follows as `v_1..v_4`, then the clique.
pub fn build_wellcolored_instance(g: &Graph) -> Result<(Graph, RoleMap), ReductionError> {
    if !g.is_bipartite() {
        return Err(ReductionError::NotBipartite);
    }
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Err(ReductionError::NoEdges);
    }
    let mut b = Builder::default();
    b.absorb(
        g,
        &RoleMap::new((0..g.vertex_count()).map(Role::Base).collect()),
    );
    let path: Vec<usize> = (1..=4).map(|p| b.add(Role::PathVertex(p))).collect();
    for w in path.windows(2) {
        b.edge(w[0], w[1]);
    }
    for v in 0..g.vertex_count() {
        b.edge(path[0], v);
    }
    let clique: Vec<usize> = (0..delta).map(|j| b.add(Role::TailClique(j))).collect();
    for (i, &u) in clique.iter().enumerate() {
        b.edge(path[3], u);
        for &v in &clique[i + 1..] {
            b.edge(u, v);
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, GraphKind};
    use crate::solvers::{exact_chromatic, exact_z, Budget};

    #[test]
    fn p4_instance() {
        let p4 = standard_graph(GraphKind::Path(4)).unwrap();
        let (h, roles) = build_wellcolored_instance(&p4).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(roles.len(), 10);
        let v4 = roles.find(Role::PathVertex(4)).unwrap();
        assert_eq!(h.degree(v4), 3);
        assert_eq!(exact_z(&h, &Budget::unlimited()).unwrap().value, 3);
        assert_eq!(exact_chromatic(&h, &Budget::unlimited()).unwrap().value, 3);
    }

    #[test]
    fn c6_instance() {
        let b = Budget::unlimited();
        let c6 = standard_graph(GraphKind::Cycle(6)).unwrap();
        let (h, _) = build_wellcolored_instance(&c6).unwrap();
        let zg = exact_z(&c6, &b).unwrap().value;
        assert_eq!(exact_z(&h, &b).unwrap().value, zg.max(2) + 1);
    }

    #[test]
    fn rejects_bad_bases() {
        let k3 = standard_graph(GraphKind::Complete(3)).unwrap();
        assert_eq!(
            build_wellcolored_instance(&k3),
            Err(ReductionError::NotBipartite)
        );
        assert_eq!(
            build_wellcolored_instance(&Graph::edgeless(2)),
            Err(ReductionError::Disconnected)
        );
        assert_eq!(
            build_wellcolored_instance(&Graph::edgeless(1)),
            Err(ReductionError::NoEdges)
        );
    }
}
