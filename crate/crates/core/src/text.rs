//! Plain-text graph interchange format.
//!
//! ```text
//! # optional comments
//! n 6
//! 0 1 2
//! 0 1 3
//! ```
//!
//! The first non-comment line is the header `n <count>`; every later
//! non-blank line is one edge `a b c` with `0 <= a < b < c < n`. A `#` starts a
//! comment anywhere on a line. Repeated edges are rejected.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Hypergraph3Builder};

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

impl Hypergraph3 {
    pub fn from_text(input: &str) -> Result<Self> {
        let mut builder: Option<Hypergraph3Builder> = None;
        for (i, raw) in input.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match builder.as_mut() {
                None => {
                    let n = match fields.as_slice() {
                        ["n", count] => count
                            .parse::<usize>()
                            .or_else(|e| parse_err(line_no, format!("bad vertex count: {e}")))?,
                        _ => return parse_err(line_no, "expected header `n <count>`"),
                    };
                    builder = Some(Hypergraph3Builder::new(n));
                }
                Some(b) => {
                    let [a, bb, c] = fields.as_slice() else {
                        return parse_err(line_no, "expected three vertex labels");
                    };
                    let mut v = [0usize; 3];
                    for (slot, tok) in v.iter_mut().zip([a, bb, c]) {
                        *slot = tok
                            .parse()
                            .or_else(|e| parse_err(line_no, format!("bad label `{tok}`: {e}")))?;
                    }
                    if !(v[0] < v[1] && v[1] < v[2]) {
                        return parse_err(line_no, "labels must be strictly increasing");
                    }
                    if v[2] >= b.n() {
                        return parse_err(line_no, format!("label {} out of range", v[2]));
                    }
                    if !b.insert(v[0], v[1], v[2]).expect("validated triple") {
                        return parse_err(line_no, "duplicate edge");
                    }
                }
            }
        }
        builder.map(Hypergraph3Builder::build).ok_or(Error::Parse {
            line: 0,
            message: "missing header `n <count>`".into(),
        })
    }

    /// Serializes in the text format, edges in ascending triple-id order.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (a, b, c) in self.edges() {
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }
}

/// Serialized as a string in the text format.
impl serde::Serialize for Hypergraph3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> serde::Deserialize<'de> for Hypergraph3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Hypergraph3::from_text(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = Hypergraph3::from_text("# seed\n\nn 4\n0 1 2 # first\n\n1 2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, 2), (1, 2, 3)]);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "0 1 2\n",
            "n x\n",
            "n 4\n0 1\n",
            "n 4\n1 0 2\n",
            "n 4\n0 1 4\n",
            "n 4\n0 1 2\n0 1 2\n",
            "n 4\n0 1 two\n",
        ] {
            assert!(Hypergraph3::from_text(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn reports_offending_line() {
        match Hypergraph3::from_text("n 5\n0 1 2\n0 1 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn text_round_trip(n in 0usize..12, bits in proptest::collection::vec(any::<bool>(), 220)) {
            let g = Hypergraph3::from_fn(n, {
                let mut i = 0;
                move |_, _, _| { i += 1; bits[i - 1] }
            });
            prop_assert_eq!(Hypergraph3::from_text(&g.to_text()).unwrap(), g);
        }
    }
}
