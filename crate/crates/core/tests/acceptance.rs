//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zcolor::families::{build_gn, build_tree_atom};
use zcolor::graph::{disjoint_union, join, standard_graph, Graph, GraphKind};
use zcolor::random::{random_graph, random_tree};
use zcolor::reductions::{
    build_hardness_instance, build_wellcolored_instance, lift_edge_coloring, project_z_coloring,
    verify_structure_facts,
};
use zcolor::solvers::{
    all_invariants, brute_force_oracle, exact_chromatic, exact_grundy, exact_z,
    three_edge_coloring, three_edge_colorings, verify_monotonicity, verify_tree_continuity, Budget,
    SolveError,
};
use zcolor::validators::is_z_coloring;

const GN3_LIMIT: Duration = Duration::from_secs(60);
const GN4_BUDGET: Duration = Duration::from_secs(600);
const ATOM_LIMIT: Duration = Duration::from_secs(120);
const HARDNESS_LIMIT: Duration = Duration::from_secs(30);
const WELLCOLORED_LIMIT: Duration = Duration::from_secs(300);
const MAX_LINEAR_EXPONENT: f64 = 1.2;

/// `(Γ, z)` of `T_1..T_5`: `Γ(T_k) = k`, `z(T_k) = ⌈(k+1)/2⌉`.
const ATOM_VALUES: [(usize, usize); 5] = [(1, 1), (2, 2), (3, 2), (4, 3), (5, 3)];

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(
        took < limit,
        format!("{what} took {took:.1?}, limit {limit:?}"),
    )
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

fn z(g: &Graph) -> usize {
    exact_z(g, &unlimited()).unwrap().value
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let g = build_gn(3).unwrap().graph;
    let (chi, gamma, b, zv) = all_invariants(&g, &unlimited()).unwrap().values();
    ensure(
        (chi, zv, gamma, b) == (3, 3, 5, 5),
        format!("G_3 gave (χ, z, Γ, b) = ({chi}, {zv}, {gamma}, {b})"),
    )?;
    within(GN3_LIMIT, start, "G_3")?;
    let g4 = build_gn(4).unwrap().graph;
    let stretch = match all_invariants(&g4, &Budget::time(GN4_BUDGET)) {
        Ok(inv) => {
            let (chi, gamma, b, zv) = inv.values();
            ensure(
                (chi, zv, gamma, b) == (4, 4, 7, 7),
                format!("G_4 gave (χ, z, Γ, b) = ({chi}, {zv}, {gamma}, {b})"),
            )?;
            "G_4 = (4, 4, 7, 7)".to_string()
        }
        Err(e @ SolveError::BudgetExhausted { .. }) => format!("G_4 stretch not reached: {e}"),
        Err(e) => return Err(e.to_string()),
    };
    Ok(format!("G_3 = (3, 3, 5, 5); {stretch}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for (k, &(gamma, zv)) in (1..=5).zip(&ATOM_VALUES) {
        let t = build_tree_atom(k).unwrap().graph;
        let got = (exact_grundy(&t, &unlimited()).unwrap().value, z(&t));
        ensure(
            got == (gamma, zv),
            format!("T_{k}: (Γ, z) = {got:?}, expected {:?}", (gamma, zv)),
        )?;
    }
    within(ATOM_LIMIT, start, "atoms")?;
    Ok("Γ(T_k) = k and z(T_k) = ⌈(k+1)/2⌉ for k = 1..5".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let t = random_tree(rng.gen_range(1..=12), &mut rng);
        let gamma = exact_grundy(&t, &unlimited()).unwrap().value;
        let zv = z(&t);
        ensure(gamma < 2 * zv, format!("tree #{i}: Γ = {gamma}, z = {zv}"))?;
    }
    let mut unequal = Vec::new();
    for k in 1..=5 {
        let t = build_tree_atom(k).unwrap().graph;
        let gamma = exact_grundy(&t, &unlimited()).unwrap().value;
        let zv = z(&t);
        if gamma != 2 * zv - 1 {
            unequal.push(format!("T_{k}: Γ = {gamma}, 2z-1 = {}", 2 * zv - 1));
        }
    }
    ensure(
        unequal.is_empty(),
        format!(
            "inequality holds on 100 trees; equality fails on {}",
            unequal.join("; ")
        ),
    )?;
    Ok("Γ ≤ 2z-1 on 100 random trees, equality on T_1..T_5".into())
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..50 {
        let g1 = random_graph(rng.gen_range(1..=6), 0.5, &mut rng);
        let g2 = random_graph(rng.gen_range(1..=6), 0.5, &mut rng);
        let (z1, z2) = (z(&g1), z(&g2));
        let zj = z(&join(&g1, &g2));
        let zu = z(&disjoint_union(&g1, &g2));
        ensure(
            zj == z1 + z2,
            format!("pair #{i}: z(join) = {zj}, z1 + z2 = {}", z1 + z2),
        )?;
        ensure(
            zu == z1.max(z2),
            format!("pair #{i}: z(union) = {zu}, max = {}", z1.max(z2)),
        )?;
    }
    Ok("z(G1 ⊕ G2) = z1 + z2 and z(G1 ∪ G2) = max on 50 pairs".into())
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let t = random_tree(rng.gen_range(1..=12), &mut rng);
        ensure(
            verify_tree_continuity(&t, &unlimited()).unwrap(),
            format!("tree #{i} not continuous"),
        )?;
        ensure(
            verify_monotonicity(&t, &unlimited()).unwrap(),
            format!("tree #{i} not monotone"),
        )?;
    }
    Ok("100 random trees are z-continuous and z-monotonic".into())
}

fn criterion_6() -> Check {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    let mut named =
        |name: String, kind: GraphKind| graphs.push((name, standard_graph(kind).unwrap()));
    for n in 2..=6 {
        named(format!("P_{n}"), GraphKind::Path(n));
    }
    for n in 3..=6 {
        named(format!("C_{n}"), GraphKind::Cycle(n));
    }
    for n in 2..=5 {
        named(format!("K_{n}"), GraphKind::Complete(n));
    }
    named("K_1,3".into(), GraphKind::Star(3));
    named("K_2,3".into(), GraphKind::CompleteBipartite(2, 3));
    named("K_3,3".into(), GraphKind::CompleteBipartite(3, 3));
    for n in 2..=4 {
        named(format!("M_{n},{n}"), GraphKind::MatchedMinus(n));
    }
    for k in 1..=4 {
        graphs.push((format!("T_{k}"), build_tree_atom(k).unwrap().graph));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..100 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.9);
        graphs.push((format!("random #{i}"), random_graph(n, p, &mut rng)));
    }
    for (name, g) in &graphs {
        let exact = all_invariants(g, &unlimited()).unwrap().values();
        let o = brute_force_oracle(g).unwrap();
        let oracle = (o.chromatic, o.grundy, o.b, o.z);
        ensure(
            exact == oracle,
            format!("{name}: exact {exact:?}, oracle {oracle:?}"),
        )?;
    }
    Ok(format!(
        "exact solvers match the oracle on {} graphs",
        graphs.len()
    ))
}

fn criterion_7() -> Check {
    let mut parts = Vec::new();
    for (name, kind) in [
        ("K_4", GraphKind::Complete(4)),
        ("K_3,3", GraphKind::CompleteBipartite(3, 3)),
    ] {
        let start = Instant::now();
        let g = standard_graph(kind).unwrap();
        let inst = build_hardness_instance(&g).unwrap();
        let report = verify_structure_facts(&inst);
        ensure(
            report.all_hold(),
            format!("{name}: structure facts fail: {report:?}"),
        )?;
        let theta = three_edge_coloring(&g)
            .unwrap()
            .ok_or(format!("{name}: no 3-edge-coloring found"))?;
        let c = lift_edge_coloring(&inst, &theta).unwrap();
        let verdict = is_z_coloring(&inst.h, &c).unwrap();
        ensure(
            verdict.holds,
            format!("{name}: lift rejected: {:?}", verdict.violation),
        )?;
        ensure(
            c.k() == inst.n + 4,
            format!("{name}: lift uses {} colors", c.k()),
        )?;
        within(HARDNESS_LIMIT, start, name)?;
        parts.push(format!(
            "{name}: |V(H)| = {}, k = {}",
            inst.h.vertex_count(),
            c.k()
        ));
    }
    let petersen = standard_graph(GraphKind::Petersen).unwrap();
    ensure(
        three_edge_coloring(&petersen).unwrap().is_none(),
        "Petersen graph reported 3-edge-colorable",
    )?;
    Ok(format!(
        "{}; Petersen has no 3-edge-coloring",
        parts.join("; ")
    ))
}

fn criterion_8() -> Check {
    // K_4 has only 6 distinct 3-edge-colorings
    let mut total = 0;
    for (name, kind, count) in [
        ("K_4", GraphKind::Complete(4), 6),
        ("K_3,3", GraphKind::CompleteBipartite(3, 3), 10),
    ] {
        let g = standard_graph(kind).unwrap();
        let inst = build_hardness_instance(&g).unwrap();
        let colorings = three_edge_colorings(&g, 10).unwrap();
        ensure(
            colorings.len() == count,
            format!("{name}: {} colorings", colorings.len()),
        )?;
        for theta in &colorings {
            let back = project_z_coloring(&inst, &lift_edge_coloring(&inst, theta).unwrap())
                .map_err(|e| format!("{name}: {e}"))?;
            ensure(
                &back == theta,
                format!("{name}: round trip changed {theta:?}"),
            )?;
        }
        total += colorings.len();
    }
    Ok(format!("project(lift(θ)) = θ for {total} edge colorings"))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (name, kind) in [
        ("P_4", GraphKind::Path(4)),
        ("C_6", GraphKind::Cycle(6)),
        ("K_2,3", GraphKind::CompleteBipartite(2, 3)),
        ("K_1,4", GraphKind::Star(4)),
    ] {
        let g = standard_graph(kind).unwrap();
        let delta = g.max_degree();
        let (h, _) = build_wellcolored_instance(&g).unwrap();
        let (zg, zh) = (z(&g), z(&h));
        let chi_h = exact_chromatic(&h, &unlimited()).unwrap().value;
        ensure(
            zh == zg.max(delta) + 1,
            format!(
                "{name}: z(H) = {zh}, max(z(g), Δ) + 1 = {}",
                zg.max(delta) + 1
            ),
        )?;
        ensure(
            (zh == chi_h) == (zg <= delta),
            format!("{name}: z(H) = {zh}, χ(H) = {chi_h}, z(g) = {zg}, Δ = {delta}"),
        )?;
        parts.push(format!("{name}: z(H) = {zh}"));
    }
    within(WELLCOLORED_LIMIT, start, "well-colored instances")?;
    Ok(parts.join(", "))
}

/// Least-squares slope of `ln t` against `ln n`.
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn criterion_10() -> Check {
    let g = standard_graph(GraphKind::Complete(4)).unwrap();
    let inst = build_hardness_instance(&g).unwrap();
    let theta = three_edge_coloring(&g).unwrap().unwrap();
    let c = lift_edge_coloring(&inst, &theta).unwrap();
    let mut points = Vec::new();
    let mut h = inst.h.clone();
    for copies in 1..=10 {
        if copies > 1 {
            h = disjoint_union(&h, &inst.h);
        }
        let cc = c.repeated(copies);
        ensure(
            is_z_coloring(&h, &cc).unwrap().holds,
            format!("{copies} copies rejected"),
        )?;
        let reps = 200 / copies;
        let best = (0..7)
            .map(|_| {
                let start = Instant::now();
                for _ in 0..reps {
                    std::hint::black_box(is_z_coloring(&h, &cc).unwrap());
                }
                start.elapsed().as_secs_f64() / reps as f64
            })
            .fold(f64::INFINITY, f64::min);
        points.push(((h.vertex_count() + h.edge_count()) as f64, best));
    }
    let exponent = fit_exponent(&points);
    ensure(
        exponent < MAX_LINEAR_EXPONENT,
        format!("fit exponent {exponent:.3} >= {MAX_LINEAR_EXPONENT}"),
    )?;
    Ok(format!(
        "fit exponent {exponent:.3} over 1..10 copies of H(K_4)"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "G_n invariants", criterion_1),
        (2, "tree atoms", criterion_2),
        (3, "Γ ≤ 2z-1 on trees", criterion_3),
        (4, "join and union", criterion_4),
        (5, "tree continuity and monotonicity", criterion_5),
        (6, "oracle equivalence", criterion_6),
        (7, "hardness forward direction", criterion_7),
        (8, "lift/project round trip", criterion_8),
        (9, "well-colored gadget", criterion_9),
        (10, "validator linearity", criterion_10),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2} ({name}): {detail} [{took:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id:>2} ({name}): {detail} [{took:.2?}]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
