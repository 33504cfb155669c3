//! Reading and writing complex files. Two formats are accepted and sniffed
//! by the first non-blank character: a JSON object with a vertex count `m`
//! and exactly one of the keys `facets` or `minimal_nonfaces` (lists of
//! 1-based vertex lists), or a plain text form whose first line is the
//! vertex count and whose remaining lines are space-separated facets.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use topo_core::error::Error;
use topo_core::{Result, SimplicialComplex, VertexSet};

/// Which face family a JSON emission spells out. Text output always lists
/// facets, the only family that format can carry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Repr {
    Facets,
    MinimalNonfaces,
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex_str(&fs::read_to_string(path)?)
}

pub fn parse_complex_str(src: &str) -> Result<SimplicialComplex> {
    match src.trim_start().chars().next() {
        Some('{') | Some('[') => parse_json(src),
        Some(_) => parse_text(src),
        None => Err(Error::BadFormat("empty input".into())),
    }
}

fn parse_json(src: &str) -> Result<SimplicialComplex> {
    let value: Value = serde_json::from_str(src)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::BadFormat("top level must be a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "m" | "facets" | "minimal_nonfaces") {
            return Err(Error::BadFormat(format!("unknown key {key:?}")));
        }
    }
    let m = obj
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::BadFormat("\"m\" must be a nonnegative integer".into()))?
        as usize;
    match (obj.get("facets"), obj.get("minimal_nonfaces")) {
        (Some(f), None) => SimplicialComplex::from_facets(m, &face_lists(f, "facets")?),
        (None, Some(n)) => {
            SimplicialComplex::from_minimal_nonfaces(m, &face_lists(n, "minimal_nonfaces")?)
        }
        (Some(_), Some(_)) => Err(Error::BadFormat(
            "give exactly one of \"facets\" and \"minimal_nonfaces\", not both".into(),
        )),
        (None, None) => Err(Error::BadFormat(
            "missing \"facets\" or \"minimal_nonfaces\"".into(),
        )),
    }
}

fn face_lists(value: &Value, key: &str) -> Result<Vec<Vec<usize>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::BadFormat(format!("\"{key}\" must be an array of vertex lists")))?;
    rows.iter()
        .map(|row| {
            let entries = row.as_array().ok_or_else(|| {
                Error::BadFormat(format!("every entry of \"{key}\" must be a vertex list"))
            })?;
            entries
                .iter()
                .map(|entry| {
                    entry.as_u64().map(|v| v as usize).ok_or_else(|| {
                        Error::BadFormat(format!(
                            "vertex labels in \"{key}\" must be positive integers"
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

fn parse_text(src: &str) -> Result<SimplicialComplex> {
    let mut m = None;
    let mut facets = Vec::new();
    for (idx, line) in src.lines().enumerate() {
        let line_no = idx + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match m {
            None => {
                if tokens.len() != 1 {
                    return Err(parse_err(
                        line_no,
                        "the first line must hold the vertex count alone",
                    ));
                }
                m = Some(number(tokens[0], line_no)?);
            }
            Some(m) => {
                let facet = tokens
                    .iter()
                    .map(|t| {
                        let v = number(t, line_no)?;
                        if v == 0 || v > m {
                            return Err(parse_err(
                                line_no,
                                &format!("vertex {v} out of range 1..={m}"),
                            ));
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<usize>>>()?;
                facets.push(facet);
            }
        }
    }
    let m = m.ok_or_else(|| Error::BadFormat("empty input".into()))?;
    SimplicialComplex::from_facets(m, &facets)
}

fn number(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, &format!("expected an integer, found {token:?}")))
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn complex_to_json(k: &SimplicialComplex, repr: Repr) -> Result<String> {
    let value = match repr {
        Repr::Facets => json!({"m": k.m(), "facets": label_lists(k.facets()?)}),
        Repr::MinimalNonfaces => {
            json!({"m": k.m(), "minimal_nonfaces": label_lists(k.minimal_nonfaces()?)})
        }
    };
    Ok(format!("{value}\n"))
}

pub fn complex_to_text(k: &SimplicialComplex) -> Result<String> {
    let mut out = format!("{}\n", k.m());
    for facet in k.facets()? {
        let labels: Vec<String> = facet.labels().iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn label_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.labels()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_twin_complexes, square};

    #[test]
    fn text_and_json_round_trip_the_square() {
        let k = square();
        let text = complex_to_text(&k).unwrap();
        assert_eq!(text, "4\n1 2\n1 4\n2 3\n3 4\n");
        let back = parse_complex_str(&text).unwrap();
        assert_eq!(back.facets().unwrap(), k.facets().unwrap());

        let by_facets = complex_to_json(&k, Repr::Facets).unwrap();
        let back = parse_complex_str(&by_facets).unwrap();
        assert_eq!(back.facets().unwrap(), k.facets().unwrap());

        let by_nonfaces = complex_to_json(&k, Repr::MinimalNonfaces).unwrap();
        assert!(by_nonfaces.contains("minimal_nonfaces"));
        let back = parse_complex_str(&by_nonfaces).unwrap();
        assert_eq!(back.facets().unwrap(), k.facets().unwrap());
    }

    #[test]
    fn fifteen_vertex_complexes_survive_emission() {
        let twins = build_twin_complexes().unwrap();
        let json = complex_to_json(&twins.k2, Repr::MinimalNonfaces).unwrap();
        let back = parse_complex_str(&json).unwrap();
        assert_eq!(
            back.minimal_nonfaces().unwrap(),
            twins.k2.minimal_nonfaces().unwrap()
        );
        let text = complex_to_text(&twins.k2).unwrap();
        let back = parse_complex_str(&text).unwrap();
        assert_eq!(
            back.minimal_nonfaces().unwrap(),
            twins.k2.minimal_nonfaces().unwrap()
        );
    }

    #[test]
    fn ghost_only_complexes_round_trip_as_a_bare_count() {
        let text = "3\n";
        let k = parse_complex_str(text).unwrap();
        assert_eq!(k.m(), 3);
        assert_eq!(k.ghost_vertices(), vec![1, 2, 3]);
        assert_eq!(complex_to_text(&k).unwrap(), text);
        let json = complex_to_json(&k, Repr::Facets).unwrap();
        let back = parse_complex_str(&json).unwrap();
        assert_eq!(back.m(), 3);
        assert!(back.facets().unwrap().is_empty());
    }

    #[test]
    fn blank_lines_and_padding_are_tolerated() {
        let k = parse_complex_str("\n  4 \n\n1 2\n\n3   4\n\n").unwrap();
        assert_eq!(k.m(), 4);
        assert_eq!(k.facets().unwrap().len(), 2);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = parse_complex_str("4\n1 2\n2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_complex_str("4 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_complex_str("4\n1 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_complex_str("4\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn json_structure_errors_are_reported() {
        let cases = [
            r#"{"m": 4}"#,
            r#"{"m": 4, "facets": [[1,2]], "minimal_nonfaces": [[3]]}"#,
            r#"{"m": 4, "faces": [[1,2]]}"#,
            r#"{"m": -1, "facets": []}"#,
            r#"{"m": 4, "facets": [[1, "2"]]}"#,
            r#"{"m": 4, "facets": 7}"#,
            r#"[]"#,
            "",
            "   ",
        ];
        for src in cases {
            let err = parse_complex_str(src).unwrap_err();
            assert!(matches!(err, Error::BadFormat(_)), "{src:?} gave {err}");
        }
        let err = parse_complex_str(r#"{"m": 4,"#).unwrap_err();
        assert!(matches!(err, Error::Json(_)));
        let err = parse_complex_str(r#"{"m": 4, "facets": [[1,5]]}"#).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 5, m: 4 }));
    }
}
