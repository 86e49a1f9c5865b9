//! Text formats: graph documents, words and vertex sets.
//!
//! A graph document is line oriented:
//!
//! ```text
//! # comment
//! convention no-2        # or no-inf, full
//! vertex a
//! vertex b
//! edge a b 3             # label: integer >= 2 or inf
//! ```
//!
//! The convention line comes first. Pairs without an `edge` line get label
//! 2 under `no-2`, infinity under `no-inf`, and are an error under `full`.

use std::collections::HashSet;
use std::fmt;

use artin_core::graph::is_valid_name;
use artin_core::{Convention, Label, LabeledGraph, Letter, VertexSet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Whitespace separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col, i)),
            (true, Some((sc, si))) => {
                out.push((sc + 1, &line[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((sc, si)) = start {
        out.push((sc + 1, &line[si..]));
    }
    out
}

pub fn convention_keyword(c: Convention) -> &'static str {
    match c {
        Convention::NoInfinityEdge => "no-inf",
        Convention::NoTwoEdge => "no-2",
        Convention::FullEdge => "full",
    }
}

fn parse_label(text: &str) -> Result<Label, String> {
    if text == "inf" {
        return Ok(Label::Infinity);
    }
    let n: u64 = text.parse().map_err(|_| format!("expected an integer label or `inf`, found `{text}`"))?;
    Label::finite(n).map_err(|e| e.to_string())
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut convention = None;
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, Label)> = Vec::new();
    let mut seen_pairs: HashSet<(String, String)> = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else { continue };
        let err = |c: usize, m: String| ParseError::new(line_no, c, m);
        let arity = |n: usize| -> Result<(), ParseError> {
            match toks.get(n) {
                Some(&(c, t)) => Err(err(c, format!("unexpected `{t}`"))),
                None if toks.len() < n => {
                    Err(err(content.chars().count() + 1, format!("`{keyword}` needs {} argument(s)", n - 1)))
                }
                None => Ok(()),
            }
        };
        if convention.is_none() && keyword != "convention" {
            return Err(err(col, "the first directive must be `convention no-inf|no-2|full`".into()));
        }
        match keyword {
            "convention" => {
                if convention.is_some() {
                    return Err(err(col, "convention declared twice".into()));
                }
                arity(2)?;
                let (c, word) = toks[1];
                convention = Some(match word {
                    "no-inf" => Convention::NoInfinityEdge,
                    "no-2" => Convention::NoTwoEdge,
                    "full" => Convention::FullEdge,
                    other => return Err(err(c, format!("unknown convention `{other}`"))),
                });
            }
            "vertex" => {
                arity(2)?;
                let (c, name) = toks[1];
                if !is_valid_name(name) || name == "inf" {
                    return Err(err(c, format!("invalid vertex name `{name}`")));
                }
                if names.iter().any(|n| n == name) {
                    return Err(err(c, format!("duplicate vertex `{name}`")));
                }
                names.push(name.to_owned());
            }
            "edge" => {
                arity(4)?;
                let (cu, u) = toks[1];
                let (cv, v) = toks[2];
                let (cl, l) = toks[3];
                for (c, name) in [(cu, u), (cv, v)] {
                    if !names.iter().any(|n| n == name) {
                        return Err(err(c, format!("undeclared vertex `{name}`")));
                    }
                }
                if u == v {
                    return Err(err(cv, format!("edge from `{u}` to itself")));
                }
                let key = if u < v { (u.to_owned(), v.to_owned()) } else { (v.to_owned(), u.to_owned()) };
                if !seen_pairs.insert(key) {
                    return Err(err(cu, format!("duplicate edge `{u}` `{v}`")));
                }
                let label = parse_label(l).map_err(|m| err(cl, m))?;
                edges.push((u.to_owned(), v.to_owned(), label));
            }
            other => return Err(err(col, format!("unknown directive `{other}`"))),
        }
    }

    let convention = convention.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing `convention` line"))?;
    LabeledGraph::from_edges(names, edges, convention)
        .map_err(|e| ParseError::new(last_line.max(1), 1, e.to_string()))
}

/// Prints `g` as a document that parses back to the same graph.
pub fn print_graph(g: &LabeledGraph, convention: Convention) -> String {
    let mut out = format!("convention {}\n", convention_keyword(convention));
    for name in g.names() {
        out.push_str(&format!("vertex {name}\n"));
    }
    for (u, v, l) in g.edges(convention) {
        out.push_str(&format!("edge {} {} {}\n", g.name(u), g.name(v), label_text(l)));
    }
    out
}

pub fn label_text(l: Label) -> String {
    match l {
        Label::Finite(n) => n.to_string(),
        Label::Infinity => "inf".into(),
    }
}

/// Parses `1` or terms `name` / `name^k` separated by `*` or whitespace.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let spaced = text.replace('*', " ");
    let toks = tokens(&spaced);
    if toks.is_empty() {
        return Err(ParseError::new(1, 1, "empty word; write `1` for the identity"));
    }
    if toks.len() == 1 && toks[0].1 == "1" {
        return Ok(Word::identity());
    }
    let mut out = Word::identity();
    for (col, term) in toks {
        let (name, power) = match term.split_once('^') {
            None => (term, 1i64),
            Some((name, exp)) => {
                let k: i64 = exp.parse().map_err(|_| {
                    ParseError::new(1, col + name.chars().count() + 1, format!("bad exponent `{exp}`"))
                })?;
                (name, k)
            }
        };
        let Some(g) = names.iter().position(|n| n == name) else {
            return Err(ParseError::new(1, col, format!("unknown generator `{name}`")));
        };
        for _ in 0..power.unsigned_abs() {
            out.push(Letter { generator: g, inverse: power < 0 });
        }
    }
    Ok(out)
}

/// Parses a vertex set: names separated by commas or whitespace, optionally
/// in braces. An empty string or `{}` is the empty set.
pub fn parse_set(text: &str, names: &[String]) -> Result<VertexSet, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(trimmed);
    let spaced = inner.replace(',', " ");
    let mut set = VertexSet::EMPTY;
    for (col, name) in tokens(&spaced) {
        match names.iter().position(|n| n == name) {
            Some(v) => set.insert(v),
            None => return Err(ParseError::new(1, col, format!("unknown vertex `{name}`"))),
        }
    }
    Ok(set)
}
