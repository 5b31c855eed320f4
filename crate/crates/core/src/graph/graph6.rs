//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed big-endian into printable 6-bit
//! groups offset by 63.

use super::{edge_pairs, Graph, GraphError};

/// Largest order expressible with the one- and four-byte headers.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

const OPTIONAL_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end();
    let (base, body) = match text.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let err = |offset: usize, reason: &str| GraphError::Graph6 { offset: base + offset, reason: reason.to_string() };

    match body.first() {
        None => return Err(err(0, "empty record")),
        Some(b':') => return Err(err(0, "sparse6 records are not supported")),
        Some(b'&') => return Err(err(0, "digraph6 records are not supported")),
        Some(_) => {}
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, &format!("byte 0x{:02x} is outside the graph6 range", body[pos])));
    }

    let (n, header_len) = if body[0] != 126 {
        (usize::from(body[0] - 63), 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(err(1, "eight-byte order header (n > 258047) is not supported"));
        }
        if body.len() < 4 {
            return Err(err(body.len(), "truncated order header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 4)
    };
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }

    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    let field = &body[header_len..];
    if field.len() < needed {
        return Err(err(body.len(), &format!("truncated bit field: expected {needed} bytes, found {}", field.len())));
    }
    if field.len() > needed {
        return Err(err(header_len + needed, "unexpected data after bit field"));
    }

    let mut edges = Vec::new();
    for (k, pair) in edge_pairs(n).enumerate() {
        let group = field[k / 6] - 63;
        if group >> (5 - k % 6) & 1 == 1 {
            edges.push(pair);
        }
    }
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "graph too large for the supported graph6 headers");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for (u, v) in edge_pairs(n) {
        group = (group << 1) | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_named, Family};

    #[test]
    fn decodes_reference_records() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, gen_named(Family::Complete, 4).unwrap());

        let p4 = parse_graph6("Ch\n").unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);

        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
    }

    #[test]
    fn encodes_reference_records() {
        assert_eq!(gen_named(Family::Complete, 4).unwrap().to_graph6(), "C~");
        assert_eq!(gen_named(Family::Path, 4).unwrap().to_graph6(), "Ch");
        // petgraph / nauty reference: C5 is "Dhc"
        assert_eq!(gen_named(Family::Cycle, 5).unwrap().to_graph6(), "Dhc");
    }

    #[test]
    fn four_byte_header_round_trip() {
        let g = gen_named(Family::Cycle, 70).unwrap();
        let text = g.to_graph6();
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn optional_header_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap().size(), 6);
    }

    #[test]
    fn errors_name_the_offset() {
        let offset = |text: &str| match parse_graph6(text) {
            Err(GraphError::Graph6 { offset, .. }) => offset,
            other => panic!("expected graph6 error, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset(":Fa@x^"), 0);
        assert_eq!(offset("&C~"), 0);
        assert_eq!(offset("C~ x"), 2);
        assert_eq!(offset("C\u{1}"), 1);
        assert_eq!(offset("D"), 1);
        assert_eq!(offset("C~~"), 2);
        assert_eq!(offset("~~???????"), 1);
        assert_eq!(offset("~?"), 2);
        assert_eq!(offset("?"), 0);
    }
}
