//! graph6 text encoding.
//!
//! Layout: a size header (`n + 63` as one byte for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups), then the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), …` packed six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const BIAS: u8 = 63;

/// Encodes `g`; vertex orders up to 128 use the four-byte size header.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
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
    // every byte is within 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty string".into())),
        [126, 126, ..] => {
            return Err(Error::Graph6(format!(
                "eight-byte size header is beyond the {MAX_VERTICES}-vertex limit"
            )))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - BIAS), rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!("unsupported vertex count {n}")));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u128; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    let pad = expected * 6 - nbits;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Reads graph6 lines, skipping blanks and `#` comments.
/// Errors carry the 1-based line number.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(decode(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, friendship, path, star};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&complete(3).unwrap()), "Bw");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&complete(2).unwrap()), "A_");
        assert_eq!(encode(&cycle(4).unwrap()), "Cl");
        assert_eq!(encode(&path(4).unwrap()), "Ch");
        assert_eq!(encode(&star(4).unwrap()), "Ds_");
    }

    #[test]
    fn large_header_round_trip() {
        let f = friendship(40).unwrap();
        let s = encode(&f);
        assert!(s.starts_with("~?@P"));
        assert_eq!(decode(&s).unwrap(), f);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err());
        assert!(decode("Bww").is_err());
        assert!(decode("B\u{7f}").is_err());
        assert!(decode("?").is_err());
        // K2 with a stray padding bit
        assert!(decode("A`").is_err());
        assert!(decode("~~??????").is_err());
    }

    #[test]
    fn parse_lines_reports_line_number() {
        let text = "# header\nBw\n\nA_\nnot-graph6\n";
        let err = parse_lines(text).unwrap_err();
        assert_eq!(err.0, 5);
        assert_eq!(parse_lines("Bw\n# c\nA_\n").unwrap().len(), 2);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=70).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(g in arb_graph()) {
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
