//! graph6 encoding.
//!
//! Header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by three
//! (`n <= 258047`) or `126 126` followed by six 6-bit groups. The body packs
//! the upper triangle column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! six bits per byte, each byte offset by 63 and the last one zero-padded.

use thiserror::Error;

use crate::graph::Graph;

const MAX_VERTICES: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte {0:#04x} outside the graph6 range 63..=126")]
    InvalidByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("trailing data after graph6 body")]
    TrailingData,
    #[error("nonzero padding bits")]
    NonZeroPadding,
    #[error("{0} vertices exceed the graph6 range")]
    TooLarge(usize),
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn push_groups(out: &mut Vec<u8>, n: usize, groups: usize) {
    for g in (0..groups).rev() {
        out.push(63 + ((n >> (6 * g)) & 0x3f) as u8);
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` prefix and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte(b));
    }
    let (n, body) = parse_header(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData);
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("upper-triangle bits describe a simple graph"))
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let groups = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = groups(&bytes[2..8]);
        if n <= 258_047 {
            return Err(Graph6Error::MalformedHeader);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::MalformedHeader);
    }
    let n = groups(&bytes[1..4]);
    if n <= 62 {
        return Err(Graph6Error::MalformedHeader);
    }
    Ok((n, &bytes[4..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, GraphKind};
    use proptest::prelude::*;

    #[test]
    fn k2_is_a_underscore() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g, standard_graph(GraphKind::Complete(2)).unwrap());
        assert_eq!(emit_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("\n"), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::LengthMismatch {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingData));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(parse_graph6("A_ "), Err(Graph6Error::InvalidByte(b' ')));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader));
        // 62 vertices must use the short header
        assert_eq!(parse_graph6("~??}"), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn accepts_optional_header_and_newline() {
        let g = parse_graph6(">>graph6<<Ch\n").unwrap();
        assert_eq!(g, standard_graph(GraphKind::Path(4)).unwrap());
    }

    #[test]
    fn long_header_round_trip() {
        let g = standard_graph(GraphKind::Cycle(300)).unwrap();
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn parse_emit_is_identity(n in 0usize..40, seed in proptest::collection::vec(any::<bool>(), 780)) {
            let edges: Vec<_> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .enumerate()
                .filter(|&(k, _)| seed[k])
                .map(|(_, e)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let s = emit_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
        }
    }
}
