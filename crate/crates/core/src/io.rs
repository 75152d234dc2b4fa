//! Text formats.
//!
//! Graph: a header `p <n> <m>`, then `m` lines `e <u> <v>` (0-based).
//! Lines starting with `c` are comments; blank lines are ignored.
//!
//! Colouring: one line `<u> <v> <colour>` per coloured edge, 0-based vertices,
//! 1-based colours, in canonical edge order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::colouring::{Colour, PartialEdgeColouring};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn parse_field<T: std::str::FromStr>(
    line: usize,
    field: Option<&str>,
    what: &str,
) -> Result<T, FormatError> {
    let s = field.ok_or_else(|| err(line, format!("missing {what}")))?;
    s.parse()
        .map_err(|_| err(line, format!("invalid {what} {s:?}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `p <n> <m>` header"))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("p") {
        return Err(err(hline, "expected `p <n> <m>` header"));
    }
    let n: usize = parse_field(hline, fields.next(), "vertex count")?;
    let m: usize = parse_field(hline, fields.next(), "edge count")?;
    if fields.next().is_some() {
        return Err(err(hline, "trailing fields in header"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let mut fields = line.split_whitespace();
        if fields.next() != Some("e") {
            return Err(err(lineno, "expected `e <u> <v>`"));
        }
        if edges.len() == m {
            return Err(err(
                lineno,
                format!("more than the {m} edges declared in the header"),
            ));
        }
        let u: usize = parse_field(lineno, fields.next(), "vertex")?;
        let v: usize = parse_field(lineno, fields.next(), "vertex")?;
        if fields.next().is_some() {
            return Err(err(lineno, "trailing fields after edge"));
        }
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
        edge_lines.push(lineno);
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|e| {
        let line = match e {
            GraphError::SelfLoop(u) => edges.iter().position(|&(a, b)| a == u && b == u),
            GraphError::DuplicateEdge(a, b) => edges
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| (x.min(y), x.max(y)) == (a, b))
                .map(|(i, _)| i)
                .nth(1),
            _ => None,
        };
        err(line.map_or(hline, |i| edge_lines[i]), e.to_string())
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// Parses a colouring of `g`. Edges absent from the text stay uncoloured.
/// The palette is not checked here; see [`PartialEdgeColouring::from_assignment`].
pub fn read_colouring(text: &str, g: &Graph) -> Result<Vec<Option<Colour>>, FormatError> {
    let mut colours = vec![None; g.edge_count()];
    for (lineno, line) in content_lines(text) {
        let mut fields = line.split_whitespace();
        let u: usize = parse_field(lineno, fields.next(), "vertex")?;
        let v: usize = parse_field(lineno, fields.next(), "vertex")?;
        let c: u32 = parse_field(lineno, fields.next(), "colour")?;
        if fields.next().is_some() {
            return Err(err(lineno, "trailing fields"));
        }
        let colour = Colour::new(c).ok_or_else(|| err(lineno, "colours start at 1"))?;
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| err(lineno, format!("({u}, {v}) is not an edge of the graph")))?;
        if colours[e].replace(colour).is_some() {
            return Err(err(lineno, format!("edge ({u}, {v}) coloured twice")));
        }
    }
    Ok(colours)
}

pub fn write_colouring(g: &Graph, c: &PartialEdgeColouring) -> String {
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(col) = c.colour(e) {
            let _ = writeln!(out, "{u} {v} {col}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_cycle;

    #[test]
    fn reads_single_edge() {
        let g = read_graph("p 2 1\ne 0 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        // Trailing newline optional, comments skipped.
        let g = read_graph("c hello\np 2 1\nc mid\ne 1 0").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn writes_canonical_order() {
        assert_eq!(
            write_graph(&gen_cycle(3).unwrap()),
            "p 3 3\ne 0 1\ne 0 2\ne 1 2\n"
        );
    }

    #[test]
    fn too_many_edges_reported_at_offending_line() {
        let e = read_graph("p 3 2\ne 0 1\ne 1 2\ne 0 2\n").unwrap_err();
        assert_eq!(e.line, 4);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(read_graph("").unwrap_err().line, 1);
        assert_eq!(read_graph("q 1 1\n").unwrap_err().line, 1);
        assert_eq!(read_graph("p 2 1\ne 0 2\n").unwrap_err().line, 2);
        assert_eq!(read_graph("p 2 1\ne 0 x\n").unwrap_err().line, 2);
        assert_eq!(read_graph("p 3 2\ne 0 1\n").unwrap_err().line, 2);
        assert_eq!(read_graph("p 3 2\ne 0 1\ne 2 2\n").unwrap_err().line, 3);
        assert_eq!(
            read_graph("p 3 3\ne 0 1\ne 1 2\ne 1 0\n").unwrap_err().line,
            4
        );
    }

    #[test]
    fn colouring_round_trip() {
        let g = gen_cycle(3).unwrap();
        let text = "0 1 1\n0 2 2\n1 2 3\n";
        let cs = read_colouring(text, &g).unwrap();
        let c = PartialEdgeColouring::from_assignment(&g, 3, cs).unwrap();
        assert_eq!(write_colouring(&g, &c), text);
    }

    #[test]
    fn colouring_errors() {
        let g = gen_cycle(3).unwrap();
        assert_eq!(read_colouring("0 1 0\n", &g).unwrap_err().line, 1);
        assert_eq!(read_colouring("0 1 1\n1 0 2\n", &g).unwrap_err().line, 2);
        assert_eq!(read_colouring("0 3 1\n", &g).unwrap_err().line, 1);
        // Partial files are fine; missing edges are uncoloured.
        assert_eq!(read_colouring("1 2 4\n", &g).unwrap()[2], Colour::new(4));
    }
}
