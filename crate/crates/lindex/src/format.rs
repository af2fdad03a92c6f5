//! Text formats.
//!
//! Graphs are either an arc list
//!
//! ```text
//! digraph 3
//! 0 1
//! 1 2
//! ```
//!
//! or an adjacency matrix, rows either space separated or packed:
//!
//! ```text
//! matrix 3
//! 011
//! 0 0 1
//! 000
//! ```
//!
//! Vertices are 0-based, `#` starts a comment and blank lines are ignored.
//! The writer always emits the arc-list form with arcs sorted.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lindex_core::{Digraph, HkqGraph};

use crate::error::{CliError, Result};

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| CliError::parse(1, "empty input, expected `digraph <n>` or `matrix <n>`"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let n: usize = words
        .next()
        .ok_or_else(|| CliError::parse(header_line, "missing vertex count"))?
        .parse()
        .map_err(|_| CliError::parse(header_line, "vertex count is not a number"))?;
    if words.next().is_some() {
        return Err(CliError::parse(header_line, "trailing text after vertex count"));
    }

    let mut g = Digraph::new(n);
    let mut add = |line: usize, u: usize, v: usize| {
        g.add_arc(u, v).map_err(|e| CliError::parse(line, e.to_string()))
    };
    match kind {
        "digraph" => {
            for (line, l) in lines {
                let ends: Vec<&str> = l.split_whitespace().collect();
                if ends.len() != 2 {
                    return Err(CliError::parse(line, format!("expected `u v`, found `{l}`")));
                }
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| CliError::parse(line, format!("`{s}` is not a vertex index")))
                };
                add(line, parse(ends[0])?, parse(ends[1])?)?;
            }
        }
        "matrix" => {
            let mut row = 0;
            for (line, l) in lines {
                if row == n {
                    return Err(CliError::parse(line, format!("more than {n} matrix rows")));
                }
                let cells: Vec<char> = if l.contains(char::is_whitespace) {
                    l.split_whitespace()
                        .map(|t| if t.len() == 1 { t.chars().next().unwrap() } else { '?' })
                        .collect()
                } else {
                    l.chars().collect()
                };
                if cells.len() != n {
                    return Err(CliError::parse(line, format!("expected {n} entries, found {}", cells.len())));
                }
                for (col, c) in cells.into_iter().enumerate() {
                    match (c, col == row) {
                        ('0', _) => {}
                        ('1', false) => add(line, row, col)?,
                        ('1', true) => return Err(CliError::parse(line, format!("self-loop at vertex {row}"))),
                        _ => return Err(CliError::parse(line, format!("entry `{c}` is not 0 or 1"))),
                    }
                }
                row += 1;
            }
            if row != n {
                return Err(CliError::parse(header_line, format!("expected {n} matrix rows, found {row}")));
            }
        }
        other => {
            return Err(CliError::parse(
                header_line,
                format!("unknown header `{other}`, expected `digraph` or `matrix`"),
            ))
        }
    }
    Ok(g)
}

pub fn write_graph(g: &Digraph) -> String {
    let mut out = format!("digraph {}\n", g.vertex_count());
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One line `<vertex> : (v)|(w)` per vertex of `H_k^q`.
pub fn write_labels(h: &HkqGraph) -> String {
    let mut out = String::new();
    for x in 0..h.vertex_count() {
        let (v, w) = h.label(x);
        writeln!(out, "{x} : {v}|{w}").unwrap();
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_graph(&text).map_err(|e| match e {
        CliError::Parse { line, message } => CliError::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}
