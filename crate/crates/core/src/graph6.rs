//! graph6 codec.
//!
//! A graph6 line is `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six
//! bits per byte, most significant bit first, each byte offset by 63.

use std::io::BufRead;

use crate::error::{Error, Graph6Error};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let digits = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedLength);
            }
            Ok((digits(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedLength);
            }
            Ok((digits(&rest[..3]), 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Parse one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some((i, c)) = text
        .char_indices()
        .find(|&(_, c)| !('?'..='~').contains(&c))
    {
        return Err(Graph6Error::CharOutOfRange(c, i).into());
    }
    let (n, offset) = decode_order(bytes)?;
    let data = &bytes[offset..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            order: n,
            expected,
            found: data.len(),
        }
        .into());
    }
    if bit_count % 6 != 0 {
        let pad = 6 - bit_count % 6;
        let last = data[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits.into());
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Read a stream of graph6 lines, skipping blank lines.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, Error>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(&l)),
        Err(e) => Some(Err(Error::InvalidArgument(format!("read error: {e}")))),
    })
}
