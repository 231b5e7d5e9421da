//! Text formats for posets and complexes.
//!
//! Poset files: a `n <count>` header, then one covering pair per line as
//! `<i> < <j>`. `#` starts a comment, whitespace is free, and multi-poset
//! streams separate entries with `---` lines.
//!
//! Complex files: one face per line as comma-separated vertex labels; a
//! blank line is the empty face. Input faces are closed downward.

use std::fmt;

use nonevasive::poset::{CoverWarning, FinitePoset};
use nonevasive::SimplicialComplex;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

#[derive(Debug)]
pub struct ParsedPoset {
    pub poset: FinitePoset,
    pub warnings: Vec<CoverWarning>,
}

/// Parse a single poset. `line_offset` shifts reported line numbers when
/// parsing a block out of a larger stream.
pub fn parse_poset(text: &str, line_offset: usize) -> Result<ParsedPoset, ParseError> {
    let mut n: Option<usize> = None;
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = line_offset + i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            let mut tokens = line.split_whitespace();
            match (tokens.next(), tokens.next(), tokens.next()) {
                (Some("n"), Some(count), None) => {
                    let count: usize = count
                        .parse()
                        .map_err(|_| err(lineno, format!("invalid element count '{count}'")))?;
                    n = Some(count);
                }
                _ => return Err(err(lineno, "expected header 'n <count>'")),
            }
            continue;
        }
        let mut sides = line.split('<');
        let (Some(lo), Some(hi), None) = (sides.next(), sides.next(), sides.next()) else {
            return Err(err(lineno, "expected a covering pair '<i> < <j>'"));
        };
        let lo: usize = lo
            .trim()
            .parse()
            .map_err(|_| err(lineno, format!("invalid element id '{}'", lo.trim())))?;
        let hi: usize = hi
            .trim()
            .parse()
            .map_err(|_| err(lineno, format!("invalid element id '{}'", hi.trim())))?;
        covers.push((lo, hi));
    }
    let Some(n) = n else {
        return Err(err(line_offset + 1, "missing header 'n <count>'"));
    };
    let (poset, warnings) = FinitePoset::from_cover_relations(n, &covers)
        .map_err(|e| err(line_offset + 1, e.to_string()))?;
    Ok(ParsedPoset { poset, warnings })
}

/// Parse a `---`-separated stream of posets.
pub fn parse_poset_stream(text: &str) -> Result<Vec<ParsedPoset>, ParseError> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut block_start = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        if raw.trim() == "---" {
            if !block_is_blank(&block) {
                out.push(parse_poset(&block, block_start)?);
            }
            block.clear();
            block_start = lineno + 1;
        } else {
            block.push_str(raw);
            block.push('\n');
        }
    }
    if !block_is_blank(&block) {
        out.push(parse_poset(&block, block_start)?);
    }
    if out.is_empty() {
        return Err(err(1, "no posets in input"));
    }
    Ok(out)
}

fn block_is_blank(block: &str) -> bool {
    block
        .lines()
        .all(|l| l.split('#').next().unwrap_or("").trim().is_empty())
}

pub fn poset_to_text(poset: &FinitePoset) -> String {
    let mut out = format!("n {}\n", poset.len());
    for (lo, hi) in poset.cover_pairs() {
        out.push_str(&format!("{lo} < {hi}\n"));
    }
    out
}

pub struct ParsedComplex {
    pub complex: SimplicialComplex,
    pub was_down_closed: bool,
}

pub fn parse_complex(text: &str) -> Result<ParsedComplex, ParseError> {
    let mut faces: Vec<Vec<u32>> = Vec::new();
    let mut universe: Vec<u32> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let trimmed = raw.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            faces.push(Vec::new()); // blank line is the empty face
            continue;
        }
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut face = Vec::new();
        for part in body.split(',') {
            let label: u32 = part
                .trim()
                .parse()
                .map_err(|_| err(lineno, format!("invalid vertex label '{}'", part.trim())))?;
            face.push(label);
        }
        face.sort_unstable();
        face.dedup();
        universe.extend_from_slice(&face);
        faces.push(face);
    }
    if faces.is_empty() {
        return Err(err(1, "no faces in input"));
    }
    let (complex, was_down_closed) =
        SimplicialComplex::new_closed(&universe, &faces).map_err(|e| err(1, e.to_string()))?;
    Ok(ParsedComplex {
        complex,
        was_down_closed,
    })
}
