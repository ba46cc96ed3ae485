//! The canonical upper-triangle text format for oriented graphs.
//!
//! Line 1 holds the vertex count n. Row i (of n-1 data rows) holds n-i
//! characters, one per column j > i: '>' for an arc i→j, '<' for j→i, '.'
//! for a tie. Blank lines and lines starting with '#' are ignored.

use std::fmt;

use okings_core::graph::{GraphError, OrientedGraph, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    BadHeader { line: usize },
    BadRowLength { line: usize, expected: usize, found: usize },
    BadCharacter { line: usize, column: usize },
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::BadHeader { line } => {
                write!(f, "line {line}: expected a vertex count header")
            }
            ParseError::BadRowLength { line, expected, found } => {
                write!(f, "line {line}: expected a row of {expected} characters, found {found}")
            }
            ParseError::BadCharacter { line, column } => {
                write!(f, "line {line}, column {column}: expected '>', '<' or '.'")
            }
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError::Graph(e)
    }
}

pub fn parse_graph(text: &str) -> Result<OrientedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line })?;
    if n < 1 {
        return Err(ParseError::BadHeader { line: header_line });
    }

    let mut arcs = Vec::new();
    let mut last_line = header_line;
    for i in 1..n {
        let expected = n - i;
        let (line, row) = lines.next().ok_or(ParseError::BadRowLength {
            line: last_line + 1,
            expected,
            found: 0,
        })?;
        last_line = line;
        let chars: Vec<char> = row.chars().collect();
        if chars.len() != expected {
            return Err(ParseError::BadRowLength {
                line,
                expected,
                found: chars.len(),
            });
        }
        for (offset, &c) in chars.iter().enumerate() {
            let j = i + 1 + offset;
            match c {
                '>' => arcs.push((i, j)),
                '<' => arcs.push((j, i)),
                '.' => {}
                _ => {
                    return Err(ParseError::BadCharacter {
                        line,
                        column: offset + 1,
                    })
                }
            }
        }
    }
    if let Some((line, row)) = lines.next() {
        return Err(ParseError::BadRowLength {
            line,
            expected: 0,
            found: row.chars().count(),
        });
    }
    Ok(OrientedGraph::build(n, &arcs)?)
}

pub fn serialize_graph(g: &OrientedGraph) -> String {
    let n = g.vertex_count();
    let mut out = format!("{n}\n");
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push(match g.relation(i, j) {
                Relation::Forward => '>',
                Relation::Backward => '<',
                Relation::Tie => '.',
            });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dstar() -> OrientedGraph {
        OrientedGraph::build(5, &[(1, 2), (2, 3), (2, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn parses_dstar() {
        let g = parse_graph("5\n>...\n>>>\n..\n.").unwrap();
        assert_eq!(g, dstar());
    }

    #[test]
    fn parses_null_and_single() {
        let g = parse_graph("2\n.").unwrap();
        assert!(g.arcs().is_empty());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(parse_graph("1").unwrap().vertex_count(), 1);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let g = parse_graph("# fixture\n\n5\n>...\n# mid-document comment\n>>>\n..\n.\n").unwrap();
        assert_eq!(g, dstar());
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_graph("3\n>x\n>"),
            Err(ParseError::BadCharacter { line: 2, column: 2 })
        );
        assert_eq!(parse_graph(""), Err(ParseError::BadHeader { line: 1 }));
        assert_eq!(parse_graph("zero"), Err(ParseError::BadHeader { line: 1 }));
        assert_eq!(
            parse_graph("3\n>>"),
            Err(ParseError::BadRowLength { line: 3, expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph("3\n>>>\n>"),
            Err(ParseError::BadRowLength { line: 2, expected: 2, found: 3 })
        );
        assert_eq!(
            parse_graph("2\n.\n."),
            Err(ParseError::BadRowLength { line: 3, expected: 0, found: 1 })
        );
    }

    #[test]
    fn serialize_round_trips() {
        for g in [
            dstar(),
            OrientedGraph::build(1, &[]).unwrap(),
            OrientedGraph::build(3, &[(1, 2), (2, 3), (3, 1)]).unwrap(),
        ] {
            assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
        }
        assert_eq!(serialize_graph(&dstar()), "5\n>...\n>>>\n..\n.\n");
    }
}
