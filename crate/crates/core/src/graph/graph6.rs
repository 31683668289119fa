//! graph6 reader and writer (McKay's format, undirected simple graphs).
//!
//! Layout: optional `>>graph6<<` header, then `N(n)`, then `R(x)`.
//!
//! * `N(n)`: for `n <= 62` one byte `n + 63`; for `n <= 258047` the byte
//!   `126` followed by three bytes carrying `n` as 18 bits, six bits per byte,
//!   most significant first, each plus 63; larger orders use `126 126` and six
//!   such bytes (36 bits).
//! * `R(x)`: the upper triangle of the adjacency matrix read column by column,
//!   `x = a(0,1) a(0,2) a(1,2) a(0,3) a(1,3) a(2,3) ...`, padded with zero
//!   bits to a multiple of six and written six bits per byte, plus 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sixbits(b: u8) -> Result<u32> {
    if !(63..=126).contains(&b) {
        return Err(err(format!("byte {b} outside 63..=126")));
    }
    Ok((b - 63) as u32)
}

/// Parses one graph6 string. Surrounding ASCII whitespace is ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, rest) = match body {
        [] => return Err(err("empty input")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(err("truncated 36-bit length prefix"));
            }
            let mut n: u64 = 0;
            for &b in &tail[..6] {
                n = (n << 6) | sixbits(b)? as u64;
            }
            (n as usize, &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(err("truncated 18-bit length prefix"));
            }
            let mut n = 0usize;
            for &b in &tail[..3] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            (n, &tail[3..])
        }
        [b, tail @ ..] => (sixbits(*b)? as usize, tail),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(err(format!("{n} vertices need {need} data bytes, found {}", rest.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for y in 1..n {
        for x in 0..y {
            let v = sixbits(rest[k / 6])?;
            if (v >> (5 - k % 6)) & 1 == 1 {
                edges.push((x, y));
            }
            k += 1;
        }
    }
    if let Some(&last) = rest.last() {
        let used = bits - (need - 1) * 6;
        let pad_mask = (1u32 << (6 - used)) - 1;
        if sixbits(last)? & pad_mask != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Writes `g` in canonical graph6 form (shortest length prefix, no header, no newline).
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for y in 1..n {
        for x in 0..y {
            acc = (acc << 1) | g.has_edge(x, y) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    out
}
