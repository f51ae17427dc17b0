//! Plain-text cell complexes.
//!
//! ```text
//! # comments and blank lines are ignored
//! V E F
//! <edge id> <tail vertex> <head vertex>      (E lines)
//! <face id> <edge id> <edge id> ...          (F lines)
//! ```
//!
//! Ids are 0-based. Edge lines come first, then face lines; within each
//! block every id in `0..E` (or `0..F`) appears exactly once, in any order.
//! A face lists its boundary edges in order, repeating an edge that it meets
//! twice.

use std::fmt::Write as _;

use thiserror::Error;

use super::{OracleError, SurfaceComplex};

/// Refuse headers whose vertex count alone would need an absurd allocation.
const MAX_VERTICES: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `V E F` header")]
    MissingHeader,
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: String, found: usize },
    #[error("`{0}` is not a non-negative integer")]
    BadInteger(String),
    #[error("{count} {what} declared but only {remaining} lines remain")]
    Truncated {
        what: &'static str,
        count: usize,
        remaining: usize,
    },
    #[error("vertex count {0} exceeds limit")]
    TooManyVertices(usize),
    #[error("{what} id {id} out of range 0..{limit}")]
    IdOutOfRange {
        what: &'static str,
        id: usize,
        limit: usize,
    },
    #[error("{what} id {id} given twice")]
    DuplicateId { what: &'static str, id: usize },
    #[error("trailing content after the last face")]
    TrailingContent,
    #[error("{0}")]
    Complex(OracleError),
}

/// `line` is 1-based; 0 means the error concerns the whole input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn integers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| ParseError {
                line,
                kind: ParseErrorKind::BadInteger(t.to_string()),
            })
        })
        .collect()
}

fn claim(seen: &mut [bool], id: usize, what: &'static str, line: usize) -> Result<(), ParseError> {
    let limit = seen.len();
    match seen.get_mut(id) {
        None => Err(ParseError {
            line,
            kind: ParseErrorKind::IdOutOfRange { what, id, limit },
        }),
        Some(true) => Err(ParseError {
            line,
            kind: ParseErrorKind::DuplicateId { what, id },
        }),
        Some(slot) => {
            *slot = true;
            Ok(())
        }
    }
}

/// Parses the text format. The result has valid references but is not
/// checked for closedness.
pub fn parse_complex(input: &str) -> Result<SurfaceComplex, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let remaining = lines.clone().count();

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 0,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let header = integers(header_line, header)?;
    let [n_vertices, n_edges, n_faces] = header[..] else {
        return Err(ParseError {
            line: header_line,
            kind: ParseErrorKind::FieldCount {
                expected: "3".into(),
                found: header.len(),
            },
        });
    };
    if n_vertices > MAX_VERTICES {
        return Err(ParseError {
            line: header_line,
            kind: ParseErrorKind::TooManyVertices(n_vertices),
        });
    }
    let body = remaining - 1;
    for (what, count, remaining) in [
        ("edges", n_edges, body),
        ("faces", n_faces, body.saturating_sub(n_edges)),
    ] {
        if count > remaining {
            return Err(ParseError {
                line: header_line,
                kind: ParseErrorKind::Truncated { what, count, remaining },
            });
        }
    }

    let mut edges = vec![[0; 2]; n_edges];
    let mut seen = vec![false; n_edges];
    for _ in 0..n_edges {
        let (line, text) = lines.next().expect("counted above");
        let fields = integers(line, text)?;
        let [id, u, v] = fields[..] else {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::FieldCount {
                    expected: "3".into(),
                    found: fields.len(),
                },
            });
        };
        claim(&mut seen, id, "edge", line)?;
        for w in [u, v] {
            if w >= n_vertices {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::IdOutOfRange {
                        what: "vertex",
                        id: w,
                        limit: n_vertices,
                    },
                });
            }
        }
        edges[id] = [u, v];
    }

    let mut faces = vec![Vec::new(); n_faces];
    let mut seen = vec![false; n_faces];
    for _ in 0..n_faces {
        let (line, text) = lines.next().expect("counted above");
        let fields = integers(line, text)?;
        if fields.len() < 2 {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::FieldCount {
                    expected: "at least 2".into(),
                    found: fields.len(),
                },
            });
        }
        claim(&mut seen, fields[0], "face", line)?;
        if let Some(&e) = fields[1..].iter().find(|&&e| e >= n_edges) {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::IdOutOfRange {
                    what: "edge",
                    id: e,
                    limit: n_edges,
                },
            });
        }
        faces[fields[0]] = fields[1..].to_vec();
    }

    if let Some((line, _)) = lines.next() {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::TrailingContent,
        });
    }
    SurfaceComplex::new(n_vertices, edges, faces).map_err(|e| ParseError {
        line: 0,
        kind: ParseErrorKind::Complex(e),
    })
}

/// Inverse of [`parse_complex`], with ids in order.
pub fn write_complex(complex: &SurfaceComplex) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} {} {}",
        complex.n_vertices(),
        complex.n_edges(),
        complex.n_faces()
    )
    .unwrap();
    for (e, [u, v]) in complex.edges().iter().enumerate() {
        writeln!(out, "{e} {u} {v}").unwrap();
    }
    for (f, boundary) in complex.faces().iter().enumerate() {
        write!(out, "{f}").unwrap();
        for e in boundary {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_klein, build_polygon_code, build_projective, build_toric};
    use crate::Surface;
    use proptest::prelude::*;

    const SPHERE: &str = "\
# two triangles
3 3 2
0 0 1
2 2 0   # out of order is fine
1 1 2

1 0 1 2
0 2 1 0
";

    #[test]
    fn parses_sphere() {
        let c = parse_complex(SPHERE).unwrap();
        assert_eq!(c.edges(), &[[0, 1], [1, 2], [2, 0]]);
        assert_eq!(c.faces(), &[vec![2, 1, 0], vec![0, 1, 2]]);
        c.check_closed().unwrap();
    }

    #[test]
    fn round_trips_builders() {
        let complexes = [
            build_toric(3).unwrap(),
            build_klein(4).unwrap(),
            build_projective(3).unwrap(),
            build_polygon_code(Surface::non_orientable(5).unwrap()),
        ];
        for c in complexes {
            assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        }
    }

    fn kind(input: &str) -> ParseErrorKind {
        parse_complex(input).unwrap_err().kind
    }

    #[test]
    fn errors() {
        assert_eq!(kind(""), ParseErrorKind::MissingHeader);
        assert_eq!(kind("# nothing\n\n"), ParseErrorKind::MissingHeader);
        assert!(matches!(kind("1 2"), ParseErrorKind::FieldCount { .. }));
        assert!(matches!(kind("1 -2 0"), ParseErrorKind::BadInteger(_)));
        assert!(matches!(
            kind("1 5 0\n0 0 0\n"),
            ParseErrorKind::Truncated { what: "edges", .. }
        ));
        assert!(matches!(
            kind("1 1 9\n0 0 0\n"),
            ParseErrorKind::Truncated { what: "faces", .. }
        ));
        assert!(matches!(
            kind("1 18446744073709551615 0\n"),
            ParseErrorKind::Truncated { .. }
        ));
        assert!(matches!(kind("99999999999 0 0\n"), ParseErrorKind::TooManyVertices(_)));
        assert!(matches!(
            kind("1 1 0\n0 0 1\n"),
            ParseErrorKind::IdOutOfRange { what: "vertex", .. }
        ));
        assert!(matches!(
            kind("1 2 0\n0 0 0\n0 0 0\n"),
            ParseErrorKind::DuplicateId { what: "edge", .. }
        ));
        assert!(matches!(
            kind("1 1 1\n0 0 0\n0 3\n"),
            ParseErrorKind::IdOutOfRange { what: "edge", .. }
        ));
        assert!(matches!(kind("1 1 1\n0 0 0\n0\n"), ParseErrorKind::FieldCount { .. }));
        assert_eq!(kind("1 1 1\n0 0 0\n0 0 0\n5 5\n"), ParseErrorKind::TrailingContent);
        let err = parse_complex("1 1 0\n0 0 7\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    proptest! {
        #[test]
        fn never_panics(s in "[0-9 #\n]{0,80}") {
            let _ = parse_complex(&s);
        }

        #[test]
        fn toric_round_trip(l in 2usize..8) {
            let c = build_toric(l).unwrap();
            prop_assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        }
    }
}
