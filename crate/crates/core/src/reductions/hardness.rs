use crate::coloring::Coloring;
use crate::graph::{incidence_graph, Graph};
use crate::roles::{Letter, Role, RoleMap, Side};
use crate::solvers::EdgeColoring;
use crate::validators;

use super::{Builder, ReductionError};

/// Colors of `F` positions 0..=7 (position 0 is `f`, colored per gadget).
const F_COLORS: [usize; 8] = [0, 1, 2, 3, 1, 1, 2, 1];

/// The 8-vertex tree `F`: `f=0` with children 1, 2, 3; `2-4`; `3-5`, `3-6`;
/// `6-7`. Returns the graph and the id of `f`.
pub fn synth_f_gadget() -> (Graph, usize) {
    let edges = [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5), (3, 6), (6, 7)];
    (Graph::new(8, &edges).expect("F is a tree"), 0)
}

/// `T_i` for source vertex `i` (0-based) of an `n`-vertex cubic graph:
/// `M_{n+2,n+2}` plus `F`, with `f` joined to every `u_j^i`.
///
/// Ids: side A is `v_j^i` (`j != i`, ascending) then `x, y, q`; side B is
/// `u_j^i` then `a, b, c` in the same positions, so position `p` on A is
/// matched with position `p` on B. `F` follows, `f` first.
pub fn build_t_gadget(n: usize, i: usize) -> Result<(Graph, RoleMap), ReductionError> {
    if n < 3 || i >= n {
        return Err(ReductionError::InvalidParameter(format!(
            "vertex gadget needs n >= 3 and i < n, got n={n}, i={i}"
        )));
    }
    let mut b = Builder::default();
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let side = |b: &mut Builder, gadget: fn(usize, usize) -> Role, letters: [Letter; 3]| {
        let mut ids: Vec<usize> = others.iter().map(|&j| b.add(gadget(i, j))).collect();
        ids.extend(letters.map(|letter| b.add(Role::GadgetLetter { block: i, letter })));
        ids
    };
    let a_side = side(
        &mut b,
        |block, source| Role::GadgetV { block, source },
        [Letter::X, Letter::Y, Letter::Q],
    );
    let b_side = side(
        &mut b,
        |block, source| Role::GadgetU { block, source },
        [Letter::A, Letter::B, Letter::C],
    );
    for (p, &u) in a_side.iter().enumerate() {
        for (q, &v) in b_side.iter().enumerate() {
            if p != q {
                b.edge(u, v);
            }
        }
    }
    let (f_graph, _) = synth_f_gadget();
    let f_roles = RoleMap::new(
        std::iter::once(Role::GadgetF(i))
            .chain((1..8).map(|pos| Role::FInternal { block: i, pos }))
            .collect(),
    );
    let f = b.absorb(&f_graph, &f_roles);
    for &u in &b_side[..n - 1] {
        b.edge(f, u);
    }
    Ok(b.finish())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardnessInstance {
    pub h: Graph,
    pub roles: RoleMap,
    pub n: usize,
    pub m: usize,
    /// The cubic graph the instance was built from.
    pub source: Graph,
}

pub fn expected_vertex_count(n: usize, m: usize) -> usize {
    (n + m) + 5 * m + 1 + 6 * (n + 3) + n * (2 * (n + 2) + 8)
}

/// `M_{s,s}` on fresh vertices; `a0` (if given) is used as A-side position 0.
fn add_matched_minus(
    b: &mut Builder,
    s: usize,
    a0: Option<usize>,
    role: impl Fn(Side, usize) -> Role,
) -> (Vec<usize>, Vec<usize>) {
    let a: Vec<usize> = (0..s)
        .map(|p| match (p, a0) {
            (0, Some(v)) => v,
            _ => b.add(role(Side::A, p)),
        })
        .collect();
    let bs: Vec<usize> = (0..s).map(|p| b.add(role(Side::B, p))).collect();
    for (p, &u) in a.iter().enumerate() {
        for (q, &v) in bs.iter().enumerate() {
            if p != q {
                b.edge(u, v);
            }
        }
    }
    (a, bs)
}

/// Builds `H` from a cubic graph `g`. `z(H) = Δ(H) + 1 = n + 4` exactly when
/// `g` is 3-edge-colorable.
///
/// Ids: `v_i` are `0..n`, `e_j` are `n..n+m` (edge order of `g`), then the
/// five other `M_{3,3}(e_j)` members per edge, `w`, the three
/// `M_{n+3,n+3}` copies (each starting with its vertex joined to `w`), and
/// the vertex gadgets `T_0..T_{n-1}`.
pub fn build_hardness_instance(g: &Graph) -> Result<HardnessInstance, ReductionError> {
    let n = g.vertex_count();
    if n == 0 || g.degrees().iter().any(|&d| d != 3) {
        return Err(ReductionError::NotCubic);
    }
    let m = g.edge_count();
    let (inc, inc_roles) = incidence_graph(g);
    let mut b = Builder::default();
    b.absorb(&inc, &inc_roles);
    for j in 0..m {
        add_matched_minus(&mut b, 3, Some(n + j), |side, pos| Role::M33Member {
            edge: j,
            side,
            pos,
        });
    }
    let w = b.add(Role::Hub);
    for v in 0..n {
        b.edge(w, v);
    }
    for copy in 0..3 {
        let dominator = b.add(Role::ExtraDominator(copy));
        b.edge(w, dominator);
        add_matched_minus(&mut b, n + 3, Some(dominator), |side, pos| {
            Role::BigMember { copy, side, pos }
        });
    }
    for i in 0..n {
        let (t, t_roles) = build_t_gadget(n, i)?;
        let base = b.absorb(&t, &t_roles);
        // side A starts with v_j^i for j != i
        for p in 0..n - 1 {
            b.edge(i, base + p);
        }
    }
    let (h, roles) = b.finish();
    debug_assert_eq!(h.vertex_count(), expected_vertex_count(n, m));
    Ok(HardnessInstance {
        h,
        roles,
        n,
        m,
        source: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCheck {
    pub id: &'static str,
    pub description: String,
    pub holds: bool,
    /// Vertices whose degree or role breaks the fact.
    pub offenders: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub facts: Vec<FactCheck>,
    pub bipartite: bool,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.bipartite && self.facts.iter().all(|f| f.holds)
    }
}

/// Checks the degree facts (i)–(vi) of `H` against roles, plus bipartiteness.
pub fn verify_structure_facts(inst: &HardnessInstance) -> StructureReport {
    let h = &inst.h;
    let n = inst.n;
    let role = |v: usize| inst.roles.get(v).copied();
    let check = |id, description: String, pred: &dyn Fn(&Role) -> bool, want: usize| {
        let members = inst.roles.select(pred);
        let offenders: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| v >= h.vertex_count() || h.degree(v) != want)
            .collect();
        FactCheck {
            id,
            description,
            holds: !members.is_empty() && offenders.is_empty(),
            offenders,
        }
    };
    let mut facts = vec![
        check(
            "i",
            format!("d(w) = d(v_i) = {}", n + 3),
            &|r| matches!(r, Role::Hub | Role::SourceVertex(_)),
            n + 3,
        ),
        check(
            "ii",
            format!("d(v_j^i) = {}", n + 2),
            &|r| matches!(r, Role::GadgetV { .. }),
            n + 2,
        ),
        check(
            "iii",
            format!("d(u_j^i) = {}", n + 2),
            &|r| matches!(r, Role::GadgetU { .. }),
            n + 2,
        ),
        check(
            "iv",
            "d(e_j) = 4".into(),
            &|r| matches!(r, Role::SourceEdge(_)),
            4,
        ),
    ];
    let letters = check(
        "v",
        String::new(),
        &|r| matches!(r, Role::GadgetLetter { .. }),
        n + 1,
    );
    let fs = check(
        "v",
        String::new(),
        &|r| matches!(r, Role::GadgetF(_)),
        n + 2,
    );
    let extra = check(
        "v",
        String::new(),
        &|r| matches!(r, Role::ExtraDominator(_)),
        n + 3,
    );
    let mut offenders: Vec<usize> = [letters.offenders, fs.offenders, extra.offenders].concat();
    offenders.sort_unstable();
    facts.push(FactCheck {
        id: "v",
        description: format!(
            "d(x,y,q,a,b,c) = {}, d(f^i) = {}, d(v_(n+1..n+3)) = {}",
            n + 1,
            n + 2,
            n + 3
        ),
        holds: letters.holds && fs.holds && extra.holds,
        offenders,
    });
    let top = |r: Option<Role>| {
        matches!(
            r,
            Some(Role::Hub | Role::SourceVertex(_) | Role::ExtraDominator(_))
        )
    };
    let offenders: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| {
            let d = h.degree(v);
            d > n + 3 || (d == n + 3) != top(role(v))
        })
        .collect();
    facts.push(FactCheck {
        id: "vi",
        description: format!("Δ(H) = {} reached only at w and v_1..v_(n+3)", n + 3),
        holds: h.max_degree() == n + 3 && offenders.is_empty(),
        offenders,
    });
    StructureReport {
        facts,
        bipartite: h.is_bipartite(),
    }
}

/// Translates a proper 3-edge-coloring of the source graph into a
/// z-coloring of `H` with `n + 4` colors, `w` being the nice vertex.
pub fn lift_edge_coloring(
    inst: &HardnessInstance,
    theta: &EdgeColoring,
) -> Result<Coloring, ReductionError> {
    theta.check(&inst.source)?;
    let n = inst.n;
    // matched pairs share a color; the pair at position 0 gets `first`
    let pair = |first: usize, pos: usize, s: usize| (first - 1 + pos) % s + 1;
    let colors = inst
        .roles
        .roles()
        .iter()
        .map(|&r| match r {
            Role::SourceVertex(i) | Role::GadgetF(i) => i + 4,
            Role::SourceEdge(j) => theta.color(j) as usize,
            Role::M33Member { edge, pos, .. } => pair(theta.color(edge) as usize, pos, 3),
            Role::Hub => n + 4,
            Role::ExtraDominator(t) => t + 1,
            Role::BigMember { copy, pos, .. } => pair(copy + 1, pos, n + 3),
            Role::GadgetV { source, .. } | Role::GadgetU { source, .. } => source + 4,
            Role::GadgetLetter { letter, .. } => match letter {
                Letter::X | Letter::A => 1,
                Letter::Y | Letter::B => 2,
                Letter::Q | Letter::C => 3,
            },
            Role::FInternal { pos, .. } => F_COLORS[pos],
            other => unreachable!("role {other} does not occur in a hardness instance"),
        })
        .collect();
    Ok(Coloring::with_k(colors, n + 4).expect("every color in 1..=n+4 is used"))
}

/// Reads a 3-edge-coloring of the source graph off an `(n+4)`-color
/// z-coloring of `H` via the colors of the edge vertices. The projected
/// colors are checked, not assumed, to lie in `1..=3` and form a proper
/// edge coloring.
pub fn project_z_coloring(
    inst: &HardnessInstance,
    c: &Coloring,
) -> Result<EdgeColoring, ReductionError> {
    let k = inst.n + 4;
    if c.k() != k {
        return Err(ReductionError::WrongColorCount {
            expected: k,
            found: c.k(),
        });
    }
    let verdict = validators::is_z_coloring(&inst.h, c)?;
    if !verdict.holds {
        let why = verdict
            .violation
            .map_or_else(|| "no certificate".to_string(), |v| v.to_string());
        return Err(ReductionError::NotZColoring(why));
    }
    let mut theta = vec![0u8; inst.m];
    for (v, r) in inst.roles.roles().iter().enumerate() {
        if let Role::SourceEdge(j) = *r {
            let color = c.color(v);
            if !(1..=3).contains(&color) {
                return Err(ReductionError::ContractViolation { edge: j, color });
            }
            theta[j] = color as u8;
        }
    }
    let theta = EdgeColoring::new(theta);
    theta.check(&inst.source)?;
    Ok(theta)
}
