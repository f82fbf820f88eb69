//! Text formats for embedded graphs and colourings.
//!
//! Graph file:
//!
//! ```text
//! og 1
//! v 4
//! r 1 2 3 4
//! r 2 1 4 3
//! r 3 1 2 4
//! r 4 1 3 2
//! ```
//!
//! Each `r` line gives the rotation at one vertex (1-based ids, cyclic
//! order). Colouring file: one `<vertex> <colour>` line per vertex. In both
//! formats blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::embedding::EmbeddedGraph;
use crate::error::{ColouringError, EmbeddingError, ParseError};
use crate::verify::Colouring;

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| syntax(line, format!("expected {what}, found {token:?}")))
}

/// Normalised graph file: LF endings, single spaces, `r` lines by vertex id.
pub fn write_graph(g: &EmbeddedGraph) -> String {
    let mut out = format!("og 1\nv {}\n", g.vertex_count());
    for v in 0..g.vertex_count() {
        out.push_str(&format!("r {}", v + 1));
        for w in g.neighbours(v) {
            let _ = write!(out, " {}", w + 1);
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<EmbeddedGraph, ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, toks)) if toks == ["og", "1"] => {}
        Some((line, _)) => return Err(syntax(line, "expected header \"og 1\"")),
        None => return Err(syntax(0, "empty file")),
    }
    let count = match lines.next() {
        Some((line, toks)) if toks.len() == 2 && toks[0] == "v" => {
            let n = number(line, toks[1], "vertex count")?;
            if n == 0 {
                return Err(syntax(line, "vertex count must be positive"));
            }
            n
        }
        Some((line, _)) => return Err(syntax(line, "expected \"v <vertex_count>\"")),
        None => return Err(syntax(0, "missing \"v <vertex_count>\" line")),
    };
    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut origin = vec![0usize; count];
    let mut last_line = 0;
    for (line, toks) in lines {
        last_line = line;
        if toks[0] != "r" || toks.len() < 2 {
            return Err(syntax(line, "expected \"r <vertex> <neighbours...>\""));
        }
        let v = number(line, toks[1], "vertex id")?;
        if v == 0 || v > count {
            return Err(syntax(line, format!("vertex {v} out of range 1..={count}")));
        }
        if rotations[v - 1].is_some() {
            return Err(syntax(line, format!("second rotation for vertex {v}")));
        }
        let mut rot = Vec::with_capacity(toks.len() - 2);
        for tok in &toks[2..] {
            let w = number(line, tok, "neighbour id")?;
            if w == 0 || w > count {
                return Err(syntax(line, format!("neighbour {w} out of range 1..={count}")));
            }
            rot.push(w - 1);
        }
        rotations[v - 1] = Some(rot);
        origin[v - 1] = line;
    }
    if let Some(v) = rotations.iter().position(Option::is_none) {
        return Err(syntax(last_line, format!("no rotation given for vertex {}", v + 1)));
    }
    let rotations: Vec<Vec<usize>> = rotations.into_iter().map(Option::unwrap).collect();
    EmbeddedGraph::new(rotations).map_err(|e| {
        let at = match e {
            EmbeddingError::SelfLoop { vertex } | EmbeddingError::RepeatedNeighbour { vertex, .. } => vertex,
            EmbeddingError::AsymmetricRotation { from, .. } => from,
            EmbeddingError::VertexOutOfRange { vertex, .. } => vertex,
            _ => 0,
        };
        ParseError::Graph { line: origin.get(at).copied().unwrap_or(0), source: one_based(e) }
    })
}

fn one_based(e: EmbeddingError) -> EmbeddingError {
    match e {
        EmbeddingError::SelfLoop { vertex } => EmbeddingError::SelfLoop { vertex: vertex + 1 },
        EmbeddingError::RepeatedNeighbour { vertex, neighbour } => {
            EmbeddingError::RepeatedNeighbour { vertex: vertex + 1, neighbour: neighbour + 1 }
        }
        EmbeddingError::AsymmetricRotation { from, to } => {
            EmbeddingError::AsymmetricRotation { from: from + 1, to: to + 1 }
        }
        other => other,
    }
}

/// One `<vertex> <colour>` line per vertex, ordered by vertex id.
pub fn write_colouring(c: &Colouring) -> String {
    c.colours().iter().enumerate().map(|(v, col)| format!("{} {col}\n", v + 1)).collect()
}

/// Parses a colouring and checks it is total on `vertex_count` vertices.
pub fn parse_colouring(text: &str, vertex_count: usize) -> Result<Colouring, ParseError> {
    let mut colours: Vec<Option<u32>> = vec![None; vertex_count];
    for (line, toks) in content_lines(text) {
        if toks.len() != 2 {
            return Err(syntax(line, "expected \"<vertex> <colour>\""));
        }
        let v = number(line, toks[0], "vertex id")?;
        let col: u32 = toks[1].parse().map_err(|_| syntax(line, format!("expected colour, found {:?}", toks[1])))?;
        if v == 0 || v > vertex_count {
            return Err(syntax(line, format!("vertex {v} out of range 1..={vertex_count}")));
        }
        if col == 0 {
            return Err(syntax(line, "colours are positive"));
        }
        if colours[v - 1].replace(col).is_some() {
            return Err(syntax(line, format!("second colour for vertex {v}")));
        }
    }
    let got = colours.iter().filter(|c| c.is_some()).count();
    if got != vertex_count {
        return Err(ColouringError::Partial { expected: vertex_count, got }.into());
    }
    Ok(Colouring::new(colours.into_iter().map(Option::unwrap).collect())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn k4_round_trip() {
        let g = graphs::k4_planar();
        let text = write_graph(&g);
        assert_eq!(text, "og 1\nv 4\nr 1 2 3 4\nr 2 1 4 3\nr 3 1 2 4\nr 4 1 3 2\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn tolerant_whitespace_and_order() {
        let text = "# K2\n  og 1\nv   2\n\nr 2 1\nr   1   2  \n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "og 1\nv 2\nr 1 2\nr 2 1\n");
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let err = parse_graph("og 1\nv 2\nr 1 2\nr 2\n").unwrap_err();
        assert_eq!(err, ParseError::Graph { line: 3, source: EmbeddingError::AsymmetricRotation { from: 1, to: 2 } });
        assert!(matches!(parse_graph("og 2\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("og 1\nv 2\nr 1 3\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("og 1\nv 2\nr 1 2\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_graph("og 1\nv 1\nr 1 1\n"), Err(ParseError::Graph { line: 3, .. })));
    }

    #[test]
    fn colouring_round_trip_and_totality() {
        let c = Colouring::new(vec![1, 2, 1, 2, 1]).unwrap();
        let text = write_colouring(&c);
        assert_eq!(text, "1 1\n2 2\n3 1\n4 2\n5 1\n");
        assert_eq!(parse_colouring(&text, 5).unwrap(), c);
        assert_eq!(
            parse_colouring("1 1\n2 2\n", 3),
            Err(ParseError::Colouring(ColouringError::Partial { expected: 3, got: 2 }))
        );
        assert!(matches!(parse_colouring("1 0\n", 1), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_colouring("1 1\n1 2\n", 2), Err(ParseError::Syntax { line: 2, .. })));
    }
}
