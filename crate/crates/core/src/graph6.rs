//! graph6 text encoding.
//!
//! Size prefix: one byte `n + 63` for `n <= 62`; `126` plus three bytes for
//! `n <= 258047`; `126 126` plus six bytes beyond that. The upper triangle
//! follows column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
//! byte, most significant bit first, each byte offset by 63 and zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = 68_719_476_735;

/// Decodes one graph6 line. A single trailing `\n` (or `\r\n`) is accepted.
pub fn parse(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::parse(
                i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, header) = decode_size(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < body_len {
        return Err(Error::parse(
            bytes.len(),
            format!(
                "expected {body_len} adjacency bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(Error::parse(
            header + body_len,
            "trailing bytes after adjacency data",
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body_len - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(header + body_len - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let take = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(Error::parse(bytes.len(), "truncated size prefix"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
    };
    match bytes.first() {
        None => Err(Error::parse(0, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                let n = take(2, 6)?;
                if n <= MAX_MEDIUM {
                    return Err(Error::parse(
                        2,
                        format!("non-minimal 8-byte size prefix for n = {n}"),
                    ));
                }
                Ok((n, 8))
            } else {
                let n = take(1, 3)?;
                if n <= MAX_SHORT {
                    return Err(Error::parse(
                        1,
                        format!("non-minimal 4-byte size prefix for n = {n}"),
                    ));
                }
                Ok((n, 4))
            }
        }
        Some(&b) => Ok((usize::from(b - BIAS), 1)),
    }
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn emit(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_groups = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else if n <= MAX_LONG {
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    } else {
        return Err(Error::capacity(format!(
            "{n} vertices exceed the graph6 size range"
        )));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
