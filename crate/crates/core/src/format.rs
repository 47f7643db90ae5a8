//! Text formats.
//!
//! Functions: `function <n> <hex>`, the truth table in big-endian hex.
//! Hypergraphs: `hypergraph <n>` followed by one edge per line as 1-based
//! vertex indices, `empty` for the empty edge. Graphs use the hypergraph
//! format with edges of one or two vertices. `#` starts a comment.

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn with_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => parse_err(line, other.to_string()),
    })
}

fn parse_function_line(line: usize, s: &str) -> Result<TruthTable> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    match parts.as_slice() {
        ["function", n, hex] => {
            let n: usize = n
                .parse()
                .map_err(|_| parse_err(line, format!("`{n}` is not an arity")))?;
            with_line(line, TruthTable::from_hex(n, hex))
        }
        _ => Err(parse_err(line, format!("expected `function <n> <hex>`, got `{s}`"))),
    }
}

/// Every function in a file, in order.
pub fn parse_functions(text: &str) -> Result<Vec<TruthTable>> {
    content_lines(text)
        .map(|(line, s)| parse_function_line(line, s))
        .collect()
}

/// A file holding exactly one function.
pub fn parse_function(text: &str) -> Result<TruthTable> {
    let mut all = parse_functions(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(parse_err(0, "no function in input")),
        k => Err(parse_err(0, format!("expected one function, found {k}"))),
    }
}

pub fn write_function(f: &TruthTable) -> String {
    format!("{f}\n")
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "no hypergraph in input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["hypergraph", n] => n
            .parse::<usize>()
            .map_err(|_| parse_err(first, format!("`{n}` is not a vertex count")))?,
        _ => return Err(parse_err(first, format!("expected `hypergraph <n>`, got `{header}`"))),
    };
    let mut edges = Vec::new();
    for (line, s) in lines {
        if s == "empty" {
            edges.push(0u32);
            continue;
        }
        let mut mask = 0u32;
        for tok in s.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line, format!("`{tok}` is not a vertex")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
            }
            if mask >> (v - 1) & 1 == 1 {
                return Err(parse_err(line, format!("vertex {v} repeated in an edge")));
            }
            mask |= 1 << (v - 1);
        }
        edges.push(mask);
    }
    with_line(first, Hypergraph::new(n, edges))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = format!("hypergraph {}\n", h.n_vertices());
    for e in h.edge_lists() {
        if e.is_empty() {
            s.push_str("empty\n");
        } else {
            let names: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&names.join(" "));
            s.push('\n');
        }
    }
    s
}
