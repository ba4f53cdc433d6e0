//! graph6 short form (at most 62 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte, most significant first, each byte offset by 63 and
//! zero-padded at the end.

use super::Graph;
use crate::error::{Error, Result};

const SHORT_FORM_MAX: usize = 62;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if first == 126 {
        return Err(err(0, "long form (more than 62 vertices) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first:#04x} outside the graph6 range 63..=126")));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(offset, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1 == 1;
            if k >= bits {
                if bit {
                    return Err(err(offset, "non-zero padding bit"));
                }
                continue;
            }
            if bit {
                let (i, j) = pair_at(k);
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-order enumeration: bit `k` is `x(i, j)`, `i < j`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_MAX {
        return Err(Error::Graph6Size { n });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
