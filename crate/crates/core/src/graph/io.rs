//! graph6, plain edge-list and DOT serialization.
//!
//! graph6 follows the public format by Brendan McKay: a size header `N(n)`
//! followed by the upper triangle of the adjacency matrix read column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into
//! 6-bit groups, each group offset by 63.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (group << (6 - filled))) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 36-bit size header".into()));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 18-bit size header".into()));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &pairs)
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// `n m` on the first line, then one `u v` line per edge in id order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let nums = parse_pair(header)?;
    let (n, m) = nums;
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        pairs.push(parse_pair(line)?);
    }
    if pairs.len() != m {
        return Err(Error::EdgeList(format!("header says {m} edges, found {}", pairs.len())));
    }
    Graph::from_edge_list(n, &pairs)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!("bad line {line:?}"))),
    }
}

/// DOT export; edges listed in `highlight` are drawn bold red.
pub fn to_dot(g: &Graph, highlight: Option<&crate::gf2::EdgeVector>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let hot = highlight.is_some_and(|h| h.get(id));
        if hot {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        // K4: six 1-bits -> 63 + 63
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::petersen()).len(), 1 + 8);
    }

    #[test]
    fn graph6_extended_header() {
        let g = Graph::path(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(&s.as_bytes()[1..4], &[63, 63 + 1, 63 + 6]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bww").is_err());
        // 'x' = 63 + 57 = 111001: padding bit set
        assert!(parse_graph6("Bx").is_err());
        assert!(parse_graph6("B\x10").is_err());
        assert!(parse_graph6("~?").is_err());
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::petersen();
        let text = write_edge_list(&g);
        assert!(text.starts_with("10 15\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn dot_mentions_every_edge() {
        let dot = to_dot(&Graph::complete(3), None);
        assert_eq!(dot.matches("--").count(), 3);
    }
}
