//! graph6 encoding and decoding.
//!
//! The format packs the upper adjacency triangle in column order, six bits
//! per printable byte offset by 63. Orders below 63 use a single header
//! byte `n + 63`; orders 63 and 64 use the long header `~` followed by
//! three bytes carrying an 18-bit order. Output here is byte-for-byte the
//! standard encoding, so strings interoperate with other tools.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Column-order bits of the upper triangle: pair (u,v), u < v, emitted
/// for v = 1..n with u ascending inside each column.
fn triangle_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    bits
}

/// Body bytes only (no order header): six bits per byte, zero-padded,
/// each offset by 63. The isomorphism canonicalizer compares these.
pub fn encode_body(g: &Graph) -> Vec<u8> {
    let bits = triangle_bits(g);
    let mut out = Vec::with_capacity(bits.len().div_ceil(6));
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push(value + 63);
    }
    out
}

fn encode_header(n: usize) -> Vec<u8> {
    if n < 63 {
        vec![n as u8 + 63]
    } else {
        // 126 is '~'; the order follows as three 6-bit groups, high first.
        let n = n as u32;
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    }
}

pub fn encode(g: &Graph) -> String {
    let mut bytes = encode_header(g.n());
    bytes.extend(encode_body(g));
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form order header".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6(
                "orders above 2^18 are not supported here".into(),
            ));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {} out of range", b)));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, &bytes[4..])
    } else {
        if !(63..=125).contains(&bytes[0]) {
            return Err(Error::Graph6(format!(
                "header byte {} out of range",
                bytes[0]
            )));
        }
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    let mut g = Graph::new(n)?;
    let pair_count = n * (n - 1) / 2;
    let expect = pair_count.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "body has {} bytes, expected {} for order {}",
            body.len(),
            expect,
            n
        )));
    }
    let mut idx = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("byte {} out of range", byte)));
            }
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == pair_count {
                break 'cols;
            }
        }
    }
    // Padding bits past the triangle must be zero in a standard encoding.
    if pair_count % 6 != 0 {
        let last = body[expect - 1] - 63;
        let pad = 6 - pair_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
