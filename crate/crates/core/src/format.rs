//! Text formats for codes.
//!
//! A code file holds one codeword per line as a string of `0`/`1`, leftmost
//! character first. Lines starting with `#` are comments and blank lines are
//! skipped. A generator file has the same layout, but each line is a row of a
//! generator matrix and the file denotes the row space.

use std::fmt::Write as _;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::families;
use crate::gf2::Gf2Basis;
use crate::limits::Limits;
use crate::word::Word;

/// A parsed file plus any non-fatal diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub code: Code,
    pub warnings: Vec<String>,
}

fn parse_lines(text: &str) -> Result<Vec<(usize, Word)>> {
    let mut rows = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word = line.parse::<Word>().map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        match width {
            None => width = Some((word.len(), line_no)),
            Some((w, first)) if w != word.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "length {} differs from length {w} on line {first}",
                        word.len()
                    ),
                });
            }
            Some(_) => {}
        }
        rows.push((line_no, word));
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "no codewords found".into(),
        });
    }
    Ok(rows)
}

fn wrap(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

/// Parses a code file. Repeated codewords are dropped with a warning.
pub fn parse_code_file(text: &str) -> Result<Parsed> {
    parse_code_file_with(text, &Limits::default())
}

pub fn parse_code_file_with(text: &str, limits: &Limits) -> Result<Parsed> {
    let rows = parse_lines(text)?;
    let first_line = rows[0].0;
    let mut warnings = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (line, w) in &rows {
        if let Some(prev) = seen.insert(w, *line) {
            warnings.push(format!(
                "line {line}: duplicate of line {prev} ({w}) ignored"
            ));
        }
    }
    let code = Code::from_words_with(rows.into_iter().map(|(_, w)| w), limits)
        .map_err(wrap(first_line))?;
    Ok(Parsed { code, warnings })
}

/// Parses a generator file and materializes its row space.
pub fn parse_gen_file(text: &str) -> Result<Parsed> {
    parse_gen_file_with(text, &Limits::default())
}

pub fn parse_gen_file_with(text: &str, limits: &Limits) -> Result<Parsed> {
    let rows = parse_lines(text)?;
    let last_line = rows.last().map_or(1, |(l, _)| *l);
    let words: Vec<Word> = rows.into_iter().map(|(_, w)| w).collect();
    let mut warnings = Vec::new();
    let rank = Gf2Basis::from_words(words[0].len(), &words)?.dim();
    if rank < words.len() {
        warnings.push(format!(
            "{} generator rows have rank {rank}; dependent rows ignored",
            words.len()
        ));
    }
    let code = families::from_generator_with(&words, limits).map_err(wrap(last_line))?;
    Ok(Parsed { code, warnings })
}

/// Canonical text form: a one-line header, then the codewords in
/// lexicographic order.
pub fn write_code_file(code: &Code) -> String {
    let mut out = String::with_capacity(code.len() * (code.n() + 1) + 32);
    let _ = writeln!(out, "# n={} M={}", code.n(), code.len());
    for w in code {
        let _ = writeln!(out, "{w}");
    }
    out
}

/// A basis as a generator file, rows in pivot order.
pub fn write_gen_file(basis: &Gf2Basis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} dim={}", basis.n(), basis.dim());
    for row in basis.rows() {
        let _ = writeln!(out, "{row}");
    }
    out
}
