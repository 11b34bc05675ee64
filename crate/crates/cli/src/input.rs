//! Input formats: the whitespace vertex-list format and the one-record-per-
//! line database dump format.

use finetope_core::lattice::AffineLatticeSpec;
use finetope_core::{Int, LatticeVector};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// One polytope to process: optional id, vertex rows, and an optional
/// affine-lattice description for 4-column inputs.
#[derive(Clone, Debug)]
pub struct PolytopeInput {
    pub id: Option<String>,
    pub dim: usize,
    pub vertices: Vec<LatticeVector>,
    pub affine: Option<AffineLatticeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn parse_int(tok: &str, line: usize, column: usize) -> Result<Int, ParseError> {
    Int::from_str(tok).map_err(|_| ParseError {
        line,
        column,
        message: format!("malformed integer {tok:?}"),
    })
}

/// Parses the vertex-list format: an optional `id <token>` line followed by
/// one vertex per line as whitespace-separated integers; a blank line
/// separates records.
pub fn parse_polytope_file(text: &str) -> Result<Vec<PolytopeInput>, ParseError> {
    let mut out: Vec<PolytopeInput> = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut cur_id: Option<String> = None;
    let mut cur_id_line = 0;
    let mut rows: Vec<LatticeVector> = Vec::new();
    let mut width: Option<usize> = None;

    let mut flush = |cur_id: &mut Option<String>,
                     rows: &mut Vec<LatticeVector>,
                     width: &mut Option<usize>,
                     line: usize|
     -> Result<(), ParseError> {
        if rows.is_empty() {
            if let Some(id) = cur_id.take() {
                return Err(ParseError {
                    line,
                    column: 1,
                    message: format!("record {id:?} has no vertex rows"),
                });
            }
            return Ok(());
        }
        out.push(PolytopeInput {
            id: cur_id.take(),
            dim: width.take().unwrap(),
            vertices: std::mem::take(rows),
            affine: None,
        });
        Ok(())
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            flush(&mut cur_id, &mut rows, &mut width, line)?;
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("id ").or_else(|| {
            if trimmed == "id" {
                Some("")
            } else {
                None
            }
        }) {
            if !rows.is_empty() || cur_id.is_some() {
                flush(&mut cur_id, &mut rows, &mut width, line)?;
            }
            let token = rest.trim();
            if token.is_empty() {
                return Err(ParseError {
                    line,
                    column: 3,
                    message: "missing id token".into(),
                });
            }
            if !seen_ids.insert(token.to_string()) {
                return Err(ParseError {
                    line,
                    column: 4,
                    message: format!("duplicate id {token:?}"),
                });
            }
            cur_id = Some(token.to_string());
            cur_id_line = line;
            continue;
        }
        let mut coords = Vec::new();
        let mut col = 1;
        for tok in raw.split_whitespace() {
            let column = raw.find(tok).map(|i| i + 1).unwrap_or(col);
            coords.push(parse_int(tok, line, column)?);
            col = column + tok.len();
        }
        match width {
            None => width = Some(coords.len()),
            Some(w) if w != coords.len() => {
                return Err(ParseError {
                    line,
                    column: 1,
                    message: format!("ragged row: expected {w} coordinates, found {}", coords.len()),
                })
            }
            _ => {}
        }
        rows.push(LatticeVector(coords));
    }
    let last = text.lines().count() + 1;
    let _ = cur_id_line;
    flush(&mut cur_id, &mut rows, &mut width, last)?;
    Ok(out)
}

/// Streaming parse of a database dump: `<id>: x,y,z; x,y,z; ...`, one
/// record per line.
pub fn grdb_dump_import<R: std::io::BufRead>(reader: R) -> Result<Vec<PolytopeInput>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line_no = lineno + 1;
        let line = line.map_err(|e| ParseError {
            line: line_no,
            column: 1,
            message: format!("read error: {e}"),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (id, rest) = trimmed.split_once(':').ok_or_else(|| ParseError {
            line: line_no,
            column: 1,
            message: "missing ':' separator".into(),
        })?;
        let id = id.trim().to_string();
        let mut vertices = Vec::new();
        for chunk in rest.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let coords: Vec<&str> = chunk.split(',').map(str::trim).collect();
            if coords.len() != 3 {
                return Err(ParseError {
                    line: line_no,
                    column: 1,
                    message: format!("record {id}: vertex {chunk:?} is not an integer triple"),
                });
            }
            let mut v = Vec::with_capacity(3);
            for c in coords {
                v.push(Int::from_str(c).map_err(|_| ParseError {
                    line: line_no,
                    column: 1,
                    message: format!("record {id}: malformed integer {c:?}"),
                })?);
            }
            vertices.push(LatticeVector(v));
        }
        if vertices.is_empty() {
            return Err(ParseError {
                line: line_no,
                column: 1,
                message: format!("record {id}: no vertices"),
            });
        }
        out.push(PolytopeInput {
            id: Some(id),
            dim: 3,
            vertices,
            affine: None,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_record() {
        let text = "id 547386\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n";
        let inputs = parse_polytope_file(text).unwrap();
        assert_eq!(inputs.len(), 1);
        assert_eq!(inputs[0].id.as_deref(), Some("547386"));
        assert_eq!(inputs[0].vertices.len(), 4);
        assert_eq!(inputs[0].dim, 3);
    }

    #[test]
    fn parse_empty_file() {
        assert!(parse_polytope_file("").unwrap().is_empty());
        assert!(parse_polytope_file("\n\n").unwrap().is_empty());
    }

    #[test]
    fn ragged_row_reported_with_line() {
        let err = parse_polytope_file("1 0\n0 1 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("ragged"));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let text = "id a\n1 0 0\n\nid a\n0 1 0\n";
        let err = parse_polytope_file(text).unwrap_err();
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn multiple_records_blank_separated() {
        let text = "id x\n1 0 0\n0 1 0\n\n1 1\n2 2\n";
        let inputs = parse_polytope_file(text).unwrap();
        assert_eq!(inputs.len(), 2);
        assert_eq!(inputs[1].id, None);
        assert_eq!(inputs[1].dim, 2);
    }

    #[test]
    fn dump_import() {
        let data = "547324: 2,3,8; 1,0,0; 0,1,0; -1,-1,-1\n547386: 1,0,0; 0,1,0; 0,0,1; -1,-1,-1\nx: 0,0,0; 1,0,0; 0,1,0; 0,0,1\n";
        let inputs = grdb_dump_import(std::io::Cursor::new(data)).unwrap();
        assert_eq!(inputs.len(), 3);
        assert_eq!(inputs[0].id.as_deref(), Some("547324"));
        assert_eq!(
            inputs[0].vertices[0],
            LatticeVector::from_i64(&[2, 3, 8])
        );
        let bad = grdb_dump_import(std::io::Cursor::new("q: 1,2\n")).unwrap_err();
        assert!(bad.message.contains("integer triple"));
    }
}
