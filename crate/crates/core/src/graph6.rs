//! graph6 interchange format (header-free, standard 6-bit encoding).
//!
//! Supports every order this crate can represent (0..=64); orders above 62
//! use the three-byte extended size form.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Encodes `g` as header-free graph6 text.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // extended form: '~' then n in 18 bits, big-endian 6-bit groups
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut used = 0;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(group + 63);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        group <<= 6 - used;
        out.push(group + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Decodes one header-free graph6 value.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Parse {
                offset: bytes.len(),
                message: "truncated extended size".into(),
            });
        }
        if bytes[1] == b'~' {
            return Err(Error::Parse {
                offset: 1,
                message: "8-byte size form exceeds the 64-vertex capacity".into(),
            });
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            let v = sixbit(b, 1 + i)?;
            n = (n << 6) | v as usize;
        }
        (n, 4)
    } else {
        (sixbit(bytes[0], 0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "graph6 order",
            requested: n,
            limit: MAX_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::Parse {
            offset: bytes.len().min(pos + need),
            message: format!(
                "expected {need} payload bytes for order {n}, got {}",
                bytes.len() - pos
            ),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let mut col = 1usize;
    let mut row = 0usize;
    while bit_index < nbits {
        let b = sixbit(bytes[pos], pos)?;
        for k in (0..6).rev() {
            if bit_index == nbits {
                if (b >> k) & 1 != 0 {
                    return Err(Error::Parse {
                        offset: pos,
                        message: "nonzero padding bits".into(),
                    });
                }
                continue;
            }
            if (b >> k) & 1 != 0 {
                g.add_edge(row, col);
            }
            bit_index += 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

fn sixbit(b: u8, offset: usize) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(Error::Parse {
            offset,
            message: format!("byte 0x{b:02x} outside graph6 alphabet"),
        });
    }
    Ok(b - 63)
}
