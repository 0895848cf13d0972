//! Short-form graph6 (orders 1..=62).
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency matrix
//! read column by column (`(0,1), (0,2), (1,2), (0,3), …`), packed six bits per
//! byte, most significant bit first, each byte offset by 63, zero padded.

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| err("empty string"))?;
    if !(63..=126).contains(&head) {
        return Err(err(format!("malformed header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(err(format!(
            "long-form header (order > {MAX_VERTICES}) is not supported"
        )));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Empty);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(err(format!(
            "order {n} needs {expected} adjacency bytes, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b:#04x} outside the printable range")));
        }
        let x = b - 63;
        bits.extend((0..6).rev().map(|k| x >> k & 1 == 1));
    }
    let total = n * (n - 1) / 2;
    if bits[total..].iter().any(|&b| b) {
        return Err(err("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}
