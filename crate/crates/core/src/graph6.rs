//! graph6 text encoding.
//!
//! A graph6 string is the vertex count `N(n)` followed by the upper triangle
//! of the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte with each byte offset by 63. Counts up to 62
//! take one byte; larger counts are `~` followed by three bytes of 18 bits.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, MAX_VERTICES};
use crate::{Error, Graph6Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

pub fn emit(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 string. A leading `>>graph6<<` header and surrounding
/// ASCII whitespace are ignored. Error offsets index the trimmed input after
/// the header.
pub fn parse(text: &str) -> Result<Graph> {
    let text = text.trim_matches(|c: char| c.is_ascii_whitespace());
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte }.into());
        }
    }
    let (n, mut pos) = parse_size(bytes)?;
    if n == 0 {
        return Err(Error::InvalidArgument("graph6 encodes a graph with no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::SizeOverflow { offset: 0, n }.into());
    }
    let pairs = n * (n - 1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos < needed {
        return Err(Graph6Error::Truncated { offset: bytes.len() }.into());
    }
    if bytes.len() - pos > needed {
        return Err(Graph6Error::TrailingData { offset: pos + needed }.into());
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let read = |from: usize, count: usize| -> Result<usize> {
        let end = from + count;
        if bytes.len() < end {
            return Err(Graph6Error::Truncated { offset: bytes.len() }.into());
        }
        Ok(bytes[from..end]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize))
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        Ok((read(2, 6)?, 8))
    } else {
        Ok((read(1, 3)?, 4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn triangle() {
        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(emit(&k3), "Bw");
        assert_eq!(parse("Bw").unwrap(), k3);
    }

    #[test]
    fn known_strings() {
        // Five vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit(&g), "DQc");
        assert_eq!(emit(&Graph::empty(1).unwrap()), "@");
        let p = Family::Petersen.generate().unwrap();
        assert_eq!(parse(&emit(&p)).unwrap(), p);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse(">>graph6<<Bw\n").unwrap().edge_count(), 3);
    }

    #[test]
    fn extended_size() {
        let g = Family::Path(100).generate().unwrap();
        let s = emit(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse(&s).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse(""), Err(Error::Graph6(Graph6Error::Empty)));
        assert_eq!(
            parse("B w"),
            Err(Error::Graph6(Graph6Error::BadByte { offset: 1, byte: b' ' }))
        );
        assert_eq!(
            parse("D"),
            Err(Error::Graph6(Graph6Error::Truncated { offset: 1 }))
        );
        assert_eq!(
            parse("Bww"),
            Err(Error::Graph6(Graph6Error::TrailingData { offset: 2 }))
        );
        assert_eq!(
            parse("~??"),
            Err(Error::Graph6(Graph6Error::Truncated { offset: 3 }))
        );
        // 4097 vertices
        let mut big = String::from("~");
        for shift in [12, 6, 0] {
            big.push(((4097usize >> shift & 0x3f) as u8 + 63) as char);
        }
        assert_eq!(
            parse(&big),
            Err(Error::Graph6(Graph6Error::SizeOverflow { offset: 0, n: 4097 }))
        );
    }
}
