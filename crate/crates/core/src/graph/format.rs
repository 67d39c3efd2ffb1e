//! graph6 text format (bit-exact per the de-facto specification) and a plain
//! edge-list text format for interchange with external generators.

use super::{Graph, GraphError, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6 orders above {MAX_ORDER} are not supported")]
    UnsupportedOrder,
    #[error("graph6 string has {got} data bytes, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("graph6 padding bits are not zero")]
    BadPadding,
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

/// Encodes a graph (order 1..=62) as a graph6 string: `n+63` followed by the
/// upper triangle packed column-major into big-endian 6-bit groups, offset 63.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decodes a graph6 string (optional `>>graph6<<` header) into a graph.
pub fn graph6_decode(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(FormatError::Empty)?;
    if first == 126 {
        // multi-byte order prefix means n >= 63
        return Err(FormatError::UnsupportedOrder);
    }
    if !(63..=126).contains(&first) {
        return Err(FormatError::BadByte(first));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(FormatError::UnsupportedOrder);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::BadLength {
            got: data.len(),
            expected,
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte(b));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(FormatError::BadPadding);
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g = g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Parses the plain edge-list format `"n m\nu v\n…"`.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let parse_pair = |line_no: usize, line: &str| -> Result<(usize, usize), FormatError> {
        let mut it = line.split_whitespace();
        let err = |msg: &str| FormatError::EdgeList {
            line: line_no + 1,
            msg: msg.into(),
        };
        let a = it
            .next()
            .ok_or_else(|| err("expected two integers"))?
            .parse()
            .map_err(|_| err("not an integer"))?;
        let b = it
            .next()
            .ok_or_else(|| err("expected two integers"))?
            .parse()
            .map_err(|_| err("not an integer"))?;
        if it.next().is_some() {
            return Err(err("trailing tokens"));
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(line_no, header)?;
    let mut g = Graph::empty(n).map_err(FormatError::Graph)?;
    let mut count = 0usize;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        g = g.add_edge(u, v).map_err(|e| FormatError::EdgeList {
            line: line_no + 1,
            msg: e.to_string(),
        })?;
        count += 1;
    }
    if count != m {
        return Err(FormatError::EdgeList {
            line: 1,
            msg: format!("header declares {m} edges but {count} follow"),
        });
    }
    Ok(g)
}

/// Renders the plain edge-list format.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_empty_graph_on_five() {
        // "D??": 'D' - 63 = 5 vertices, C(5,2) = 10 bits packed into two
        // zero data bytes. Verified by hand against the published 6-bit
        // packing.
        let g = graph6_decode("D??").unwrap();
        assert_eq!((g.order(), g.size()), (5, 0));
        assert_eq!(graph6_encode(&g), "D??");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&Graph::complete(3).unwrap()), "Bw");
        let g = graph6_decode("Bw").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        // header form accepted
        assert_eq!(graph6_decode(">>graph6<<Bw").unwrap(), g);
    }

    #[test]
    fn roundtrip_k3() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&k3)).unwrap(), k3);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(graph6_decode(""), Err(FormatError::Empty));
        assert_eq!(graph6_decode("~??"), Err(FormatError::UnsupportedOrder));
        assert!(matches!(
            graph6_decode("D?"),
            Err(FormatError::BadLength { .. })
        ));
        assert!(matches!(
            graph6_decode("D???"),
            Err(FormatError::BadLength { .. })
        ));
        assert_eq!(graph6_decode("B\x1f"), Err(FormatError::BadByte(0x1f)));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 3)]).unwrap();
        let text = render_edge_list(&g);
        assert_eq!(text, "4 2\n0 1\n1 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(matches!(
            parse_edge_list("4 3\n0 1\n"),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_edge_list("4 1\n0 9\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
    }
}
