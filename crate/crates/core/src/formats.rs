//! Readers for point clouds, distance matrices and vertex values, and the
//! barcode CSV writer.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hypergraph::Vertex;
use crate::persistence::{DistanceMatrix, PersistenceDiagram, VertexValues};
use crate::rational::{parse_rational, to_decimal_string};

/// Non-blank lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, s: &str) -> Result<BigRational> {
    parse_rational(s).ok_or_else(|| Error::Parse {
        line,
        message: format!("`{s}` is not a number"),
    })
}

/// Lines `token x1 x2 … xd`.
pub fn parse_point_cloud(text: &str) -> Result<DistanceMatrix> {
    let mut points: Vec<(Vertex, Vec<BigRational>)> = Vec::new();
    for (line, tokens) in content_lines(text) {
        let v = Vertex::new(tokens[0])?;
        if points.iter().any(|p| p.0 == v) {
            return Err(Error::Parse {
                line,
                message: format!("point `{v}` listed twice"),
            });
        }
        let coords = tokens[1..].iter().map(|s| number(line, s)).collect::<Result<Vec<_>>>()?;
        if let Some((_, first)) = points.first() {
            if first.len() != coords.len() {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {} coordinates, found {}", first.len(), coords.len()),
                });
            }
        }
        points.push((v, coords));
    }
    DistanceMatrix::from_points(&points)
}

/// A CSV matrix whose header row and first column hold the vertex tokens.
pub fn parse_distance_csv(text: &str) -> Result<DistanceMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(i + 1, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        rows.push((record.position().map_or(i + 1, |p| p.line() as usize), record));
    }
    let Some(((_, header), body)) = rows.split_first() else {
        return Err(Error::Parse {
            line: 1,
            message: "empty distance matrix".into(),
        });
    };
    let columns = header.iter().skip(1).map(Vertex::new).collect::<Result<Vec<_>>>()?;
    let mut by_vertex: BTreeMap<Vertex, Vec<BigRational>> = BTreeMap::new();
    for (line, record) in body {
        let v = Vertex::new(record.get(0).unwrap_or(""))?;
        let values = record.iter().skip(1).map(|s| number(*line, s)).collect::<Result<Vec<_>>>()?;
        if values.len() != columns.len() {
            return Err(Error::Parse {
                line: *line,
                message: format!("expected {} values, found {}", columns.len(), values.len()),
            });
        }
        if by_vertex.insert(v.clone(), values).is_some() {
            return Err(Error::Parse {
                line: *line,
                message: format!("row `{v}` listed twice"),
            });
        }
    }
    // Rows may come in any order; align them with the header.
    let matrix = columns
        .iter()
        .map(|v| {
            by_vertex
                .remove(v)
                .ok_or_else(|| Error::InvalidDistance(format!("no row for `{v}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(extra) = by_vertex.keys().next() {
        return Err(Error::InvalidDistance(format!("row `{extra}` has no column")));
    }
    DistanceMatrix::new(columns, matrix)
}

/// Lines `token value`, each vertex at most once.
pub fn parse_values(text: &str) -> Result<VertexValues> {
    let mut map = BTreeMap::new();
    for (line, tokens) in content_lines(text) {
        let [token, value] = tokens[..] else {
            return Err(Error::Parse {
                line,
                message: "expected `token value`".into(),
            });
        };
        let v = Vertex::new(token)?;
        if map.insert(v, number(line, value)?).is_some() {
            return Err(Error::InvalidValues(format!("`{token}` appears twice")));
        }
    }
    VertexValues::new(map)
}

/// `degree,birth,death` rows with decimal endpoints and `inf` for classes
/// that never die; an interval of multiplicity m is repeated m times.
pub fn barcode_csv(diagrams: &[PersistenceDiagram]) -> String {
    let mut out = String::from("degree,birth,death\n");
    for d in diagrams {
        for iv in &d.intervals {
            let death = iv.death.as_ref().map_or_else(|| "inf".to_string(), to_decimal_string);
            for _ in 0..iv.multiplicity {
                out.push_str(&format!("{},{},{}\n", d.degree, to_decimal_string(&iv.birth), death));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn point_cloud() {
        let d = parse_point_cloud("# plane\na 0 0\nb 3 4\n\nc 0.5 1/2\n").unwrap();
        let (a, b) = (Vertex::new("a").unwrap(), Vertex::new("b").unwrap());
        assert_eq!(d.raw(&a, &b), Some(&r(25, 1)));
        assert!(d.is_squared());
        assert!(matches!(parse_point_cloud("a 0 0\nb 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_point_cloud("a 0\na 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_point_cloud("a x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn distance_csv() {
        let d = parse_distance_csv(",a,b\nb,2,0\na,0,2\n").unwrap();
        let (a, b) = (Vertex::new("a").unwrap(), Vertex::new("b").unwrap());
        assert_eq!(d.raw(&a, &b), Some(&r(2, 1)));
        assert!(matches!(
            parse_distance_csv(",a,b\na,0,1\nb,2,0\n"),
            Err(Error::AsymmetricDistance(..))
        ));
        assert!(parse_distance_csv("").is_err());
        assert!(matches!(parse_distance_csv(",a,b\na,0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn vertex_values() {
        let v = parse_values("a 1\nb 0.25 # note\n").unwrap();
        assert_eq!(v.get(&Vertex::new("b").unwrap()), Some(&r(1, 4)));
        assert!(matches!(parse_values("a 2\n"), Err(Error::ValueOutOfRange(_))));
        assert!(matches!(parse_values("a 1\na 0\n"), Err(Error::InvalidValues(_))));
        assert!(matches!(parse_values("a\n"), Err(Error::Parse { line: 1, .. })));
    }
}
