use zcolor::graph::{standard_graph, GraphKind};
use zcolor::graph6::{emit_graph6, parse_graph6};

const CORPUS: &str = include_str!("data/reference.g6");

fn kind(family: &str, params: &[usize]) -> GraphKind {
    match (family, params) {
        ("complete", [n]) => GraphKind::Complete(*n),
        ("path", [n]) => GraphKind::Path(*n),
        ("cycle", [n]) => GraphKind::Cycle(*n),
        ("star", [k]) => GraphKind::Star(*k),
        ("edgeless", [n]) => GraphKind::Edgeless(*n),
        ("complete_bipartite", [a, b]) => GraphKind::CompleteBipartite(*a, *b),
        ("petersen", []) => GraphKind::Petersen,
        other => panic!("unknown corpus entry {other:?}"),
    }
}

#[test]
fn corpus_matches_generators() {
    let mut checked = 0;
    for line in CORPUS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (family, rest) = tokens.split_first().unwrap();
        let (g6, params) = rest.split_last().unwrap();
        let params: Vec<usize> = params.iter().map(|p| p.parse().unwrap()).collect();
        let expected = standard_graph(kind(family, &params)).unwrap();
        let parsed = parse_graph6(g6).unwrap();
        assert_eq!(parsed, expected, "{line}");
        assert_eq!(emit_graph6(&expected).unwrap(), *g6, "{family} {params:?}");
        checked += 1;
    }
    assert_eq!(checked, 12);
}
