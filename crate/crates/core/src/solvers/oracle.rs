//! Exhaustive cross-check for small graphs. Shares no search code with the
//! exact solvers: colorings are enumerated as set partitions times label
//! permutations and judged by the validators; the Grundy number comes from
//! running First-Fit over every vertex ordering.

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::validators;

use super::SolveError;

pub const ORACLE_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleValues {
    pub chromatic: usize,
    pub grundy: usize,
    pub b: usize,
    pub z: usize,
}

pub fn brute_force_oracle(g: &Graph) -> Result<OracleValues, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > ORACLE_MAX_VERTICES {
        return Err(SolveError::TooLarge {
            n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let max_k = g.max_degree() + 1;
    let mut out = OracleValues {
        chromatic: usize::MAX,
        grundy: 0,
        b: 0,
        z: 0,
    };
    let mut block = vec![0usize; n];
    partitions(g, 0, 0, max_k, &mut block, &mut |labels, k| {
        out.chromatic = out.chromatic.min(k);
        let c = Coloring::with_k(labels.iter().map(|&b| b + 1).collect(), k)
            .expect("partition labels are surjective");
        if !validators::is_b_coloring(g, &c).expect("proper").holds {
            return;
        }
        out.b = out.b.max(k);
        if k <= out.z {
            return;
        }
        let mut perm: Vec<usize> = (1..=k).collect();
        permutations(&mut perm, 0, &mut |p| {
            if k <= out.z {
                return;
            }
            let colors = labels.iter().map(|&b| p[b]).collect();
            let c = Coloring::with_k(colors, k).expect("relabeling keeps classes");
            if validators::is_z_coloring(g, &c).expect("proper").holds {
                out.z = k;
            }
        });
    });
    let mut order: Vec<usize> = (0..n).collect();
    permutations(&mut order, 0, &mut |ord| {
        out.grundy = out.grundy.max(first_fit(g, ord));
    });
    Ok(out)
}

/// Number of colors First-Fit uses when visiting vertices in `order`.
pub fn first_fit(g: &Graph, order: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut color = vec![0usize; n];
    let mut taken = vec![usize::MAX; n + 2];
    let mut top = 0;
    for &v in order {
        for &u in g.neighbors(v) {
            if color[u] > 0 {
                taken[color[u]] = v;
            }
        }
        let c = (1..).find(|&c| taken[c] != v).expect("some color is free");
        color[v] = c;
        top = top.max(c);
    }
    top
}

/// Proper set partitions with at most `max_k` blocks, as restricted growth
/// strings.
fn partitions(
    g: &Graph,
    v: usize,
    blocks: usize,
    max_k: usize,
    label: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], usize),
) {
    if v == g.vertex_count() {
        visit(label, blocks);
        return;
    }
    for b in 0..=blocks.min(max_k - 1) {
        if g.neighbors(v).iter().any(|&u| u < v && label[u] == b) {
            continue;
        }
        label[v] = b;
        partitions(g, v + 1, blocks.max(b + 1), max_k, label, visit);
    }
}

fn permutations(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, visit);
        items.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, GraphKind};

    fn oracle(kind: GraphKind) -> (usize, usize, usize, usize) {
        let v = brute_force_oracle(&standard_graph(kind).unwrap()).unwrap();
        (v.chromatic, v.grundy, v.b, v.z)
    }

    #[test]
    fn small_values() {
        assert_eq!(oracle(GraphKind::Path(4)), (2, 3, 2, 2));
        assert_eq!(oracle(GraphKind::Complete(3)), (3, 3, 3, 3));
        assert_eq!(oracle(GraphKind::Cycle(4)), (2, 2, 2, 2));
    }

    #[test]
    fn size_limit() {
        let g = Graph::edgeless(11);
        assert!(matches!(
            brute_force_oracle(&g),
            Err(SolveError::TooLarge { .. })
        ));
        assert!(matches!(
            brute_force_oracle(&Graph::edgeless(0)),
            Err(SolveError::EmptyGraph)
        ));
    }

    #[test]
    fn first_fit_orders() {
        let p4 = standard_graph(GraphKind::Path(4)).unwrap();
        assert_eq!(first_fit(&p4, &[0, 3, 1, 2]), 3);
        assert_eq!(first_fit(&p4, &[0, 1, 2, 3]), 2);
    }
}
