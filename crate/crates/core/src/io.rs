//! Plain-text graph and matrix-space files.
//!
//! Graph file: a header line `n m`, then `m` lines `u v` with `1 <= u < v <= n`.
//! Blank lines and lines starting with `#` are ignored.
//!
//! Space file: a header line `n q k`, then `k` blocks of `n` rows of `n`
//! integer codes in `[0, q)`, blocks separated by blank lines.

use crate::altspace::AltSpace;
use crate::error::ParseError;
use crate::gfq::{Field, FqMatrix};
use crate::graph::Graph;

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<u64>, ParseError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| ParseError::new(line, format!("{t:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header \"n m\""))?;
    let h = parse_ints(hl, header)?;
    let [n, m] = h[..] else {
        return Err(ParseError::new(hl, "header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m as usize);
    let mut last_line = hl;
    for _ in 0..m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| ParseError::new(last_line + 1, format!("expected {m} edge lines")))?;
        last_line = ln;
        let e = parse_ints(ln, l)?;
        let [u, v] = e[..] else {
            return Err(ParseError::new(ln, "edge line must be \"u v\""));
        };
        if u >= v {
            return Err(ParseError::new(ln, format!("edge {u} {v} must have u < v")));
        }
        edges.push((u as usize, v as usize));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln, "trailing content after edge list"));
    }
    // Report graph-level errors at the header; the edge line is not tracked
    // through validation.
    Graph::new(n as usize, &edges).map_err(|e| ParseError::new(hl, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edges().len());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_space(text: &str) -> Result<AltSpace, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header \"n q k\""))?;
    let h = parse_ints(hl, header)?;
    let [n, q, k] = h[..] else {
        return Err(ParseError::new(hl, "header must be \"n q k\""));
    };
    let field = u32::try_from(q)
        .ok()
        .and_then(|q| Field::new(q).ok())
        .ok_or_else(|| ParseError::new(hl, format!("{q} is not a supported prime power")))?;
    let n = n as usize;
    let mut mats = Vec::with_capacity(k as usize);
    let mut last_line = hl;
    for b in 0..k {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, l) = lines.next().ok_or_else(|| {
                ParseError::new(last_line + 1, format!("block {} is missing rows", b + 1))
            })?;
            last_line = ln;
            let r: Vec<u32> = parse_ints(ln, l)?.into_iter().map(|c| c as u32).collect();
            if r.len() != n {
                return Err(ParseError::new(ln, format!("expected {n} entries, found {}", r.len())));
            }
            if let Some(bad) = r.iter().find(|&&c| c >= field.q()) {
                return Err(ParseError::new(ln, format!("entry {bad} is not in [0, {q})")));
            }
            rows.push(r);
        }
        let m = if n == 0 {
            FqMatrix::zeros(0, 0)
        } else {
            FqMatrix::from_codes(&field, &rows).map_err(|e| ParseError::new(last_line, e.to_string()))?
        };
        mats.push(m);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln, "trailing content after matrix blocks"));
    }
    AltSpace::new(n, &field, mats).map_err(|e| ParseError::new(hl, e.to_string()))
}

pub fn write_space(s: &AltSpace) -> String {
    let mut out = format!("{} {} {}\n", s.n(), s.field().q(), s.dim());
    for (b, g) in s.gens().iter().enumerate() {
        if b > 0 {
            out.push('\n');
        }
        for row in g.codes() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}
