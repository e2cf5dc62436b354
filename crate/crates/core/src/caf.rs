//! The `.caf` theory text format.
//!
//! ```text
//! # comment
//! args: a b c
//! a -> b
//! a b ->
//! -> c
//! ```
//!
//! One generator per line, sides separated by `->`, identifiers separated by
//! whitespace. Either side may be empty. The optional `args:` header fixes
//! the universe and its order and must precede every attack line; without
//! it the universe is collected in order of first appearance. Printing a
//! theory always emits the header followed by the normalized base, so
//! printing is byte-stable across a parse/print round trip.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::theory::{AttackPair, Theory};

const HEADER: &str = "args:";
const ARROW: &str = "->";

/// Names on one side of an attack line, with their `(line, column)`.
type Side = Vec<(usize, usize, String)>;

/// Parses a theory from `.caf` text.
pub fn parse_theory(text: &str) -> Result<Theory> {
    let mut header: Option<Vec<String>> = None;
    let mut seen: Vec<String> = Vec::new();
    let mut raw: Vec<(Side, Side)> = Vec::new();

    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let offset = content.len() - trimmed.len();

        if let Some(rest) = trimmed.strip_prefix(HEADER) {
            let column = offset + HEADER.len() + 1;
            if header.is_some() {
                return Err(syntax(line_no, offset + 1, "duplicate `args:` header"));
            }
            if !raw.is_empty() {
                return Err(syntax(
                    line_no,
                    offset + 1,
                    "`args:` header must precede all attacks",
                ));
            }
            if let Some(i) = rest.find(ARROW) {
                return Err(syntax(line_no, column + i, "unexpected `->` in header"));
            }
            let mut names = Vec::new();
            for (col, tok) in tokens(rest, column) {
                if names.contains(&tok.to_string()) {
                    return Err(syntax(line_no, col, &format!("duplicate argument `{tok}`")));
                }
                names.push(tok.to_string());
            }
            header = Some(names);
            continue;
        }

        let Some(arrow) = content.find(ARROW) else {
            return Err(syntax(line_no, offset + 1, "expected `->`"));
        };
        let (lhs, rhs) = (&content[..arrow], &content[arrow + ARROW.len()..]);
        if let Some(i) = rhs.find(ARROW) {
            return Err(syntax(
                line_no,
                arrow + ARROW.len() + i + 1,
                "more than one `->`",
            ));
        }
        let mut side = |part: &str, start: usize| -> Result<Side> {
            let mut out = Vec::new();
            for (col, tok) in tokens(part, start) {
                match &header {
                    Some(names) if !names.iter().any(|n| n == tok) => {
                        return Err(syntax(
                            line_no,
                            col,
                            &format!("argument `{tok}` not declared in header"),
                        ));
                    }
                    Some(_) => {}
                    None => {
                        if !seen.iter().any(|n| n == tok) {
                            seen.push(tok.to_string());
                        }
                    }
                }
                out.push((line_no, col, tok.to_string()));
            }
            Ok(out)
        };
        let source = side(lhs, 1)?;
        let target = side(rhs, arrow + ARROW.len() + 1)?;
        raw.push((source, target));
    }

    let names = header.unwrap_or(seen);
    let lookup = |entries: &[(usize, usize, String)]| {
        entries
            .iter()
            .map(|(_, _, n)| names.iter().position(|m| m == n).expect("validated name"))
            .collect()
    };
    let pairs: Vec<AttackPair> = raw
        .iter()
        .map(|(s, t)| AttackPair {
            source: lookup(s),
            target: lookup(t),
        })
        .collect();
    Theory::new(names, pairs)
}

/// Renders a theory as `.caf` text (header plus normalized base).
pub fn print_theory(theory: &Theory) -> String {
    theory.to_string()
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.arguments().iter().map(|a| a.name.as_str()).collect();
        if names.is_empty() {
            writeln!(f, "{HEADER}")?;
        } else {
            writeln!(f, "{HEADER} {}", names.join(" "))?;
        }
        for pair in self.base() {
            let lhs = self.names(pair.source).join(" ");
            let rhs = self.names(pair.target).join(" ");
            match (lhs.is_empty(), rhs.is_empty()) {
                (true, true) => writeln!(f, "{ARROW}")?,
                (true, false) => writeln!(f, "{ARROW} {rhs}")?,
                (false, true) => writeln!(f, "{lhs} {ARROW}")?,
                (false, false) => writeln!(f, "{lhs} {ARROW} {rhs}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theory> {
        parse_theory(s)
    }
}

/// Whitespace-separated tokens of `text` with their 1-based columns, where
/// `text` starts at column `start`.
fn tokens(text: &str, start: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut pos = 0;
    std::iter::from_fn(move || {
        let rest = &text[pos..];
        let lead = rest.len() - rest.trim_start().len();
        let rest = &rest[lead..];
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let col = start + pos + lead;
        pos += lead + len;
        Some((col, &rest[..len]))
    })
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}
