use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Parses the edge-list format: a header `n m` followed by `m` lines `u v`
/// (0-indexed). Lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut tok = header.split_whitespace();
    let n = parse_usize(tok.next(), hl, "vertex count")?;
    let m = parse_usize(tok.next(), hl, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_err(hl, "header must be `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        let u = parse_usize(tok.next(), ln, "endpoint")?;
        let v = parse_usize(tok.next(), ln, "endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hl,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Serialises `g` in the edge-list format, with optional leading comments.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n# mid\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn round_trip() {
        let g = Graph::new(5, [(0, 4), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g, &["example".into()]);
        assert!(text.starts_with("# example\n5 3\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_edge_list("").is_err());
    }
}
