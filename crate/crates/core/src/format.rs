//! ASCII rotation format.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 : 1 2 3
//! 1 : 2 0 3
//! 2 : 1 3 0
//! 3 : 1 0 2
//! ```
//!
//! Comment lines start with `#`. The header `n <N>` is followed by exactly
//! `N` lines `<v> : <w1> <w2> ... <wk>` listing the neighbors of `v` in
//! clockwise order. Integers are base 10, fields are separated by single
//! spaces, and every line ends with `\n`. Colors are carried by a comment
//! block `# blue 0..<m-1>` before the header.

use crate::constructions::{Color, ColoredTriangulation};
use crate::kernel::{Triangulation, ValidationError, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("invalid triangulation: {0}")]
    Invalid(#[from] ValidationError),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn parse_int(tok: &str, line: usize, col: usize, what: &str) -> Result<u64, ParseError> {
    tok.parse::<u64>().map_err(|_| syntax(line, col, format!("expected {what}, found `{tok}`")))
}

struct Parsed {
    tri: Triangulation,
    blue_upto: Option<Vertex>,
}

fn parse_inner(text: &str) -> Result<Parsed, ParseError> {
    let mut header: Option<usize> = None;
    let mut rows: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut blue_upto: Option<Vertex> = None;
    let mut seen_rows = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            // Color block: `# blue 0..<m-1>` (inclusive range).
            let rest = rest.trim();
            if let Some(range) = rest.strip_prefix("blue ") {
                if let Some((lo, hi)) = range.split_once("..") {
                    let lo = parse_int(lo.trim(), lineno, 1, "blue range start")?;
                    let hi = parse_int(hi.trim(), lineno, 1, "blue range end")?;
                    if lo != 0 {
                        return Err(syntax(lineno, 1, "blue range must start at 0"));
                    }
                    blue_upto = Some(hi as Vertex);
                }
            }
            continue;
        }
        match header {
            None => {
                let mut toks = line.split_whitespace();
                match (toks.next(), toks.next(), toks.next()) {
                    (Some("n"), Some(count), None) => {
                        let n = parse_int(count, lineno, 3, "vertex count")? as usize;
                        header = Some(n);
                        rows = vec![None; n];
                    }
                    _ => {
                        return Err(syntax(lineno, 1, "expected header line `n <N>`"));
                    }
                }
            }
            Some(n) => {
                if seen_rows == n {
                    return Err(syntax(lineno, 1, format!("more than {n} rotation lines")));
                }
                let (vtext, rest) = line
                    .split_once(':')
                    .ok_or_else(|| syntax(lineno, 1, "expected `<v> : <neighbors>`"))?;
                let col_rest = vtext.len() + 2;
                let v = parse_int(vtext.trim(), lineno, 1, "vertex id")?;
                if v as usize >= n {
                    return Err(syntax(lineno, 1, format!("vertex id {v} out of range 0..{n}")));
                }
                let mut neighbors = Vec::new();
                let mut col = col_rest;
                for tok in rest.split_whitespace() {
                    let w = parse_int(tok, lineno, col, "neighbor id")?;
                    if w as usize >= n {
                        return Err(syntax(
                            lineno,
                            col,
                            format!("neighbor id {w} out of range 0..{n}"),
                        ));
                    }
                    neighbors.push(w as Vertex);
                    col += tok.len() + 1;
                }
                if neighbors.is_empty() {
                    return Err(syntax(lineno, col_rest, format!("vertex {v} lists no neighbors")));
                }
                if rows[v as usize].is_some() {
                    return Err(syntax(lineno, 1, format!("vertex {v} listed twice")));
                }
                rows[v as usize] = Some(neighbors);
                seen_rows += 1;
            }
        }
    }

    let n = header.ok_or_else(|| syntax(1, 1, "missing header line `n <N>`"))?;
    if seen_rows != n {
        return Err(syntax(0, 0, format!("expected {n} rotation lines, found {seen_rows}")));
    }
    let rotations: Vec<Vec<Vertex>> = rows.into_iter().map(|r| r.unwrap()).collect();
    Ok(Parsed { tri: Triangulation::from_rotations(rotations)?, blue_upto })
}

/// Parses a triangulation, validating every invariant.
pub fn parse(text: &str) -> Result<Triangulation, ParseError> {
    parse_inner(text).map(|p| p.tri)
}

/// Parses a triangulation with a `# blue 0..<m-1>` color block. Vertices in
/// the block are blue, all others red.
pub fn parse_colored(text: &str) -> Result<ColoredTriangulation, ParseError> {
    let parsed = parse_inner(text)?;
    let upto = parsed
        .blue_upto
        .ok_or_else(|| syntax(1, 1, "missing `# blue 0..<m-1>` color block"))?;
    let n = parsed.tri.n();
    if upto as usize >= n {
        return Err(syntax(1, 1, format!("blue range end {upto} out of range 0..{n}")));
    }
    let colors = (0..n as Vertex)
        .map(|v| if v <= upto { Color::Blue } else { Color::Red })
        .collect();
    Ok(ColoredTriangulation::new(parsed.tri, colors).expect("lengths match"))
}

/// Writes the exact rotation format: header then one line per vertex in
/// ascending order, single spaces, `\n` line endings.
pub fn write(t: &Triangulation) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", t.n()));
    for v in 0..t.n() as Vertex {
        out.push_str(&format!("{} :", v));
        for w in t.rotation(v) {
            out.push_str(&format!(" {}", w));
        }
        out.push('\n');
    }
    out
}

/// Like [`write`], with the color block ahead of the header. Blue vertices
/// must form the id prefix `0..=m-1`.
pub fn write_colored(c: &ColoredTriangulation) -> String {
    let m = c.blue_count();
    format!("# blue 0..{}\n{}", m - 1, write(c.triangulation()))
}
