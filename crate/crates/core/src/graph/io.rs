//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= v || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("edge `{u} {v}` must satisfy 0 <= u < v < {n}"),
            });
        }
        g.try_add_edge(u, v).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let bad = |msg: String| Error::Parse { line, msg };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| bad(format!("expected two integers in `{l}`")))?;
        tok.parse()
            .map_err(|_| bad(format!("`{tok}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(bad(format!("trailing tokens in `{l}`")));
    }
    Ok((a, b))
}

pub fn read_edge_list_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_edge_list(&text)
}

pub fn write_edge_list_file(g: &Graph, path: &Path) -> Result<()> {
    fs::write(path, write_edge_list(g)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}
