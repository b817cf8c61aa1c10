//! Text graph formats: the 1-indexed edge list, graph6, and DOT (output only).

use std::fmt::{self, Write as _};

use lexext_core::Graph;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Line(usize),
    Byte(usize),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Line(l) => write!(f, "line {l}"),
            Position::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

fn at_line(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position: Position::Line(line),
        message: message.into(),
    }
}

fn at_byte(byte: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position: Position::Byte(byte),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Edgelist,
    Graph6,
    Dot,
}

/// A graph together with the format it was read from or is written to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub graph: Graph,
}

impl GraphDocument {
    pub fn parse(format: GraphFormat, text: &str) -> Result<Self, ParseError> {
        let graph = match format {
            GraphFormat::Edgelist => parse_edgelist(text)?,
            GraphFormat::Graph6 => parse_graph6(text)?,
            GraphFormat::Dot => {
                return Err(at_byte(0, "DOT input is not supported"));
            }
        };
        Ok(GraphDocument { format, graph })
    }

    /// The document text, newline-terminated.
    pub fn emit(&self) -> String {
        match self.format {
            GraphFormat::Edgelist => write_edgelist(&self.graph),
            GraphFormat::Graph6 => write_graph6(&self.graph) + "\n",
            GraphFormat::Dot => write_dot(&self.graph),
        }
    }
}

/// `n m` followed by one `u v` line per edge, `u < v`, in lex order.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = line.split(' ');
    let mut next = |name: &str| -> Result<usize, ParseError> {
        let field = fields
            .next()
            .ok_or_else(|| at_line(lineno, format!("missing {name} in {what}")))?;
        field
            .parse()
            .map_err(|_| at_line(lineno, format!("invalid {name} `{field}` in {what}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(at_line(lineno, format!("trailing fields in {what}")));
    }
    Ok((a, b))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| at_line(1, "empty input"))?;
    let (n, m) = parse_pair(header, 1, "header `n m`")?;
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno, "edge `u v`")?;
        if !(1 <= u && u < v && v <= n) {
            return Err(at_line(lineno, format!("edge {u} {v} violates 1 <= u < v <= {n}")));
        }
        if g.has_edge(u, v) {
            return Err(at_line(lineno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| at_line(lineno, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(at_line(seen + 2, format!("header declares {m} edges but {seen} were given")));
    }
    Ok(g)
}

const GRAPH6_BIAS: u8 = 63;

fn graph6_size_header(n: usize) -> Vec<u8> {
    let sixes = |count: usize| (0..count).rev().map(move |i| ((n >> (6 * i)) & 0x3f) as u8 + GRAPH6_BIAS);
    if n <= 62 {
        vec![n as u8 + GRAPH6_BIAS]
    } else if n <= 258_047 {
        std::iter::once(126).chain(sixes(3)).collect()
    } else {
        [126, 126].into_iter().chain(sixes(6)).collect()
    }
}

/// McKay's graph6: size header, then the upper triangle column by column,
/// six bits per printable byte, most significant bit first.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = graph6_size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + GRAPH6_BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + GRAPH6_BIAS);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let sextet = |pos: usize| -> Result<usize, ParseError> {
        match bytes.get(pos) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - GRAPH6_BIAS) as usize),
            Some(&b) => Err(at_byte(pos, format!("byte {b:#04x} outside the graph6 range 63..=126"))),
            None => Err(at_byte(pos, "unexpected end of input")),
        }
    };
    let read = |start: usize, count: usize| -> Result<usize, ParseError> {
        (start..start + count).try_fold(0usize, |acc, p| Ok(acc << 6 | sextet(p)?))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(at_byte(0, "empty input")),
        Some(126) if bytes.get(1) == Some(&126) => (read(2, 6)?, 8),
        Some(126) => (read(1, 3)?, 4),
        Some(_) => (sextet(0)?, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(at_byte(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(pos)?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i + 1, j + 1).expect("indices in range");
            }
            k += 1;
        }
    }
    if k % 6 != 0 && current & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(at_byte(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// Undirected DOT for rendering.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lexext_core::lexgraph::build_lex_graph;

    #[test]
    fn edgelist_of_l56() {
        let g = build_lex_graph(5, 6).unwrap();
        assert_eq!(write_edgelist(&g), "5 6\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n");
        assert_eq!(write_edgelist(&Graph::empty(3)), "3 0\n");
    }

    #[test]
    fn edgelist_errors_carry_lines() {
        let err = parse_edgelist("3 2\n1 2\n2 2\n").unwrap_err();
        assert_eq!(err.position, Position::Line(3));
        let err = parse_edgelist("3 2\n1 2\n").unwrap_err();
        assert_eq!(err.position, Position::Line(3));
        let err = parse_edgelist("3 x\n").unwrap_err();
        assert_eq!(err.position, Position::Line(1));
        let err = parse_edgelist("3 2\n1 2\n1 2\n").unwrap_err();
        assert!(err.message.contains("duplicate"));
        let err = parse_edgelist("3 1\n2 1\n").unwrap_err();
        assert_eq!(err.position, Position::Line(2));
        let err = parse_edgelist("").unwrap_err();
        assert_eq!(err.position, Position::Line(1));
        assert_eq!(parse_edgelist("4 0").unwrap(), Graph::empty(4));
    }

    // Expected strings produced by networkx.to_graph6_bytes on the same lex graphs.
    #[test]
    fn graph6_matches_reference_encoder() {
        for (n, m, expected) in [
            (4, 6, "C~"),
            (5, 6, "D}_"),
            (1, 0, "@"),
            (0, 0, "?"),
            (7, 10, "F}rC?"),
            (12, 30, "K~zfFB_wF?[?"),
        ] {
            let g = build_lex_graph(n, m).unwrap();
            assert_eq!(write_graph6(&g), expected, "L({n},{m})");
            assert_eq!(parse_graph6(expected).unwrap(), g);
        }
        let wide = build_lex_graph(70, 100).unwrap();
        assert!(write_graph6(&wide).starts_with("~?@E}rEEB?"));
        assert_eq!(parse_graph6(&write_graph6(&wide)).unwrap(), wide);
    }

    #[test]
    fn graph6_errors_carry_bytes() {
        let err = parse_graph6("C~~").unwrap_err();
        assert!(matches!(err.position, Position::Byte(_)));
        let err = parse_graph6("C ").unwrap_err();
        assert_eq!(err.position, Position::Byte(1));
        let err = parse_graph6("").unwrap_err();
        assert_eq!(err.position, Position::Byte(0));
        // K3 is "Bw"; "Bx" sets a padding bit
        assert_eq!(parse_graph6("Bw").unwrap().edge_count(), 3);
        assert!(parse_graph6("Bx").unwrap_err().message.contains("padding"));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn dot_lists_edges() {
        let dot = write_dot(&build_lex_graph(3, 2).unwrap());
        assert_eq!(dot, "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n}\n");
    }

    #[test]
    fn round_trips_for_lex_graphs() {
        for n in 0..=12usize {
            for m in 0..=(n * n.saturating_sub(1) / 2) as u64 {
                let g = build_lex_graph(n, m).unwrap();
                for format in [GraphFormat::Edgelist, GraphFormat::Graph6] {
                    let doc = GraphDocument { format, graph: g.clone() };
                    assert_eq!(GraphDocument::parse(format, &doc.emit()).unwrap(), doc);
                }
            }
        }
    }
}
