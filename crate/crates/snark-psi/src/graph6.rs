//! Encoder and decoder for the standard graph6 text format: an `N(n)` size
//! header followed by the upper triangle of the adjacency matrix in
//! column-major order, packed six bits per printable byte (offset 63).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const OFFSET: u8 = 63;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

/// Encodes a graph as a single graph6 line (without trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count() as usize;
    let mut bytes = Vec::new();
    encode_size(n, &mut bytes);
    let mut current = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            current <<= 1;
            if g.has_edge(row as VertexId, col as VertexId) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(current + OFFSET);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((current << (6 - filled)) + OFFSET);
    }
    String::from_utf8(bytes).expect("printable ascii")
}

fn take_sextet(bytes: &[u8], pos: &mut usize) -> Result<usize> {
    let b = *bytes
        .get(*pos)
        .ok_or_else(|| Error::MalformedGraph6("truncated input".into()))?;
    if !(OFFSET..=126).contains(&b) {
        return Err(Error::MalformedGraph6(format!(
            "byte {b} at position {} outside the printable range 63..=126",
            *pos
        )));
    }
    *pos += 1;
    Ok((b - OFFSET) as usize)
}

fn decode_size(bytes: &[u8], pos: &mut usize) -> Result<usize> {
    let first = take_sextet(bytes, pos)?;
    if first != 63 {
        return Ok(first);
    }
    // 126 introduces an extended size; a second 126 a long one.
    if bytes.get(*pos) == Some(&126) {
        *pos += 1;
        let mut n = 0usize;
        for _ in 0..6 {
            n = (n << 6) | take_sextet(bytes, pos)?;
        }
        Ok(n)
    } else {
        let mut n = 0usize;
        for _ in 0..3 {
            n = (n << 6) | take_sextet(bytes, pos)?;
        }
        Ok(n)
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker is accepted.
/// Edges come out numbered in column-major upper-triangle order.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    let bytes = line.as_bytes();
    let mut pos = 0usize;
    let n = decode_size(bytes, &mut pos)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} bytes for {n} vertices, found {}",
            bytes.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut current = 0usize;
    let mut remaining = 0u8;
    for col in 1..n {
        for row in 0..col {
            if remaining == 0 {
                current = take_sextet(bytes, &mut pos)?;
                remaining = 6;
            }
            remaining -= 1;
            if current >> remaining & 1 == 1 {
                pairs.push((row as VertexId, col as VertexId));
            }
        }
    }
    Graph::build(n as u32, &pairs)
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
    }

    #[test]
    fn trivial_graphs() {
        let empty = Graph::build(0, &[]).unwrap();
        assert_eq!(encode(&empty), "?");
        assert_eq!(decode("?").unwrap().vertex_count(), 0);
        let five_isolated = decode("D??").unwrap();
        assert_eq!(five_isolated.vertex_count(), 5);
        assert_eq!(five_isolated.edge_count(), 0);
    }

    #[test]
    fn petersen_round_trip() {
        let p = Graph::petersen();
        let text = encode(&p);
        let q = decode(&text).unwrap();
        assert_eq!(q.vertex_count(), 10);
        assert_eq!(q.edge_count(), 15);
        for e in p.edges() {
            assert!(q.has_edge(e.endpoints.0, e.endpoints.1));
        }
        assert_eq!(encode(&q), text);
    }

    #[test]
    fn header_marker_accepted() {
        let text = format!(">>graph6<<{}", encode(&Graph::petersen()));
        assert_eq!(decode(&text).unwrap().edge_count(), 15);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("C"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("C~~~"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("C\t"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn large_header_round_trip() {
        // 63 vertices forces the three-byte size form.
        let pairs: Vec<(u32, u32)> = (0..62).map(|i| (i, i + 1)).collect();
        let g = Graph::build(63, &pairs).unwrap();
        let text = encode(&g);
        assert!(text.starts_with('~'));
        let h = decode(&text).unwrap();
        assert_eq!(h.vertex_count(), 63);
        assert_eq!(h.edge_count(), 62);
    }
}
