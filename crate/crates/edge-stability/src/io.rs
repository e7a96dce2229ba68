//! Bit-exact graph6 encoding plus a plain edge-list text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by
//! column (bit x(i,j) for j in 1..n, i in 0..j) into 6-bit groups,
//! each offset by 63 into printable ASCII, after a size header N(n).

use crate::graph::Graph;
use crate::{Error, Result};

const OFFSET: u8 = 63;

fn size_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        let mut out = vec![126];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    } else {
        let mut out = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    }
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let err = |msg: &str| Error::Graph6(msg.to_string());
    match bytes.first() {
        None => Err(err("empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                if bytes.len() < 8 {
                    return Err(err("truncated size header"));
                }
                let mut n = 0usize;
                for &b in &bytes[2..8] {
                    if !(OFFSET..=126).contains(&b) {
                        return Err(err("invalid size byte"));
                    }
                    n = (n << 6) | (b - OFFSET) as usize;
                }
                Ok((n, 8))
            } else {
                if bytes.len() < 4 {
                    return Err(err("truncated size header"));
                }
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    if !(OFFSET..=126).contains(&b) {
                        return Err(err("invalid size byte"));
                    }
                    n = (n << 6) | (b - OFFSET) as usize;
                }
                Ok((n, 4))
            }
        }
        Some(&b) => {
            if !(OFFSET..126).contains(&b) {
                return Err(err("invalid size byte"));
            }
            Ok(((b - OFFSET) as usize, 1))
        }
    }
}

/// Encodes a graph as a single canonical graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = size_header(n);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc: u8 = 0;
    let mut filled = 0;
    let mut emitted = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + OFFSET);
                emitted += 6;
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + OFFSET);
        emitted += 6;
    }
    debug_assert!(emitted >= nbits);
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line; the optional `>>graph6<<` prefix is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let err = |msg: &str| Error::Graph6(msg.to_string());
    let line = text.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, header_len) = parse_size(bytes)?;
    let body = &bytes[header_len..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expect_bytes = nbits.div_ceil(6);
    if body.len() != expect_bytes {
        return Err(err(&format!(
            "expected {expect_bytes} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expect_bytes * 6);
    for &b in body {
        if !(OFFSET..=126).contains(&b) {
            return Err(err("invalid data byte"));
        }
        let x = b - OFFSET;
        for shift in (0..6).rev() {
            bits.push((x >> shift) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(err("nonzero padding bits"));
    }
    let mut g = Graph::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Writes the plain edge-list format: `n m` then one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Parses the edge-list format; `#` starts a comment, blank lines are
/// skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let err = |msg: String| Error::EdgeList(msg);
    let mut lines = text.lines().filter_map(|raw| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some(content)
    });
    let header = lines.next().ok_or_else(|| err("missing header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(format!("bad header `{header}`")))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(format!("bad header `{header}`")))?;
    if parts.next().is_some() {
        return Err(err(format!("trailing tokens in header `{header}`")));
    }
    let mut g = Graph::new(n);
    let mut count = 0;
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(format!("bad edge line `{line}`")))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(format!("bad edge line `{line}`")))?;
        if parts.next().is_some() {
            return Err(err(format!("trailing tokens in edge line `{line}`")));
        }
        g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(err(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

/// Parses either format: digits and whitespace mean edge list, anything
/// else is treated as graph6 (whose alphabet starts above ASCII `?`).
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.bytes().all(|b| b.is_ascii_digit() || b == b' ' || b == b'\t') => {
            from_edge_list(text)
        }
        Some(_) => from_graph6(text),
        None => Err(Error::EdgeList("empty input".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn known_graph6_strings() {
        // 5-vertex graph with edges 02 04 13 34, canonical string "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);

        // C5 and the Petersen graph against the standard encodings.
        assert_eq!(to_graph6(&generators::cycle(5).unwrap()), "Dhc");
        assert_eq!(from_graph6("Dhc").unwrap(), generators::cycle(5).unwrap());
        assert_eq!(to_graph6(&generators::petersen()), "IheA@GUAo");
        // McKay's canonically labelled Petersen string.
        let pet = from_graph6("IsP@OkWHG").unwrap();
        assert_eq!(pet.n(), 10);
        assert!(pet.is_regular());
        assert_eq!(pet.max_degree(), 3);
        assert_eq!(pet.odd_girth(), Some(5));

        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap().m(), 5);
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("DhCX").is_err());
        // Nonzero padding bits after the 10 triangle bits of n=5.
        assert!(from_graph6("Dh~").is_err());
        assert!(from_graph6("D\x1b!").is_err());
    }

    #[test]
    fn big_size_header_roundtrip() {
        let g = generators::cycle(100).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let g = generators::gen_gk(1).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(from_edge_list(&text).unwrap(), g);

        let annotated = "# toy triangle\n3 3\n0 1\n1 2 # last two\n0 2\n";
        let t = from_edge_list(annotated).unwrap();
        assert_eq!(t.m(), 3);

        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("3\n").is_err());
        assert!(from_edge_list("3 1\n0 3\n").is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_auto("Dhc").unwrap(), generators::cycle(5).unwrap());
        assert_eq!(
            parse_auto("3 2\n0 1\n1 2\n").unwrap(),
            generators::path(3).unwrap()
        );
        assert!(parse_auto("").is_err());
    }
}
