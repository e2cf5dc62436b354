//! Parser for the `.dlp` program format.
//!
//! ```text
//! rule  ::= head "." | head ":-" body "." | ":-" body "."
//! head  ::= atom ("|" atom)*
//! body  ::= lit ("," lit)*
//! lit   ::= atom | "not" atom
//! atom  ::= [a-z][a-zA-Z0-9_]*
//! ```
//!
//! `%` starts a comment running to the end of the line. Atoms are numbered
//! in order of first appearance. Identifiers starting with an uppercase
//! letter or `_` are variables and rejected as non-ground input.

use crate::bits::{AtomSet, MAX_UNIVERSE};
use crate::error::{Error, Result};

use super::{Program, Rule};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Variable(String),
    Not,
    Dot,
    If,
    Bar,
    Comma,
    Open,
    Close,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |out: &mut Vec<Spanned>, tok| {
                out.push(Spanned {
                    tok,
                    line: line_no,
                    column,
                })
            };
            match c {
                '%' => break,
                c if c.is_whitespace() => i += 1,
                '.' => {
                    push(&mut out, Tok::Dot);
                    i += 1;
                }
                '|' => {
                    push(&mut out, Tok::Bar);
                    i += 1;
                }
                ',' => {
                    push(&mut out, Tok::Comma);
                    i += 1;
                }
                '(' => {
                    push(&mut out, Tok::Open);
                    i += 1;
                }
                ')' => {
                    push(&mut out, Tok::Close);
                    i += 1;
                }
                ':' if chars.get(i + 1) == Some(&'-') => {
                    push(&mut out, Tok::If);
                    i += 2;
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    let tok = if c.is_ascii_uppercase() || c == '_' {
                        Tok::Variable(word)
                    } else if c.is_ascii_lowercase() {
                        if word == "not" {
                            Tok::Not
                        } else {
                            Tok::Atom(word)
                        }
                    } else {
                        return Err(syntax(
                            line_no,
                            column,
                            &format!("identifier `{word}` must start with a lowercase letter"),
                        ));
                    };
                    push(&mut out, tok);
                }
                other => {
                    return Err(syntax(
                        line_no,
                        column,
                        &format!("unexpected character `{other}`"),
                    ))
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    atoms: Vec<String>,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_here(&self, message: &str) -> Error {
        match self.peek() {
            Some(t) => syntax(t.line, t.column, message),
            None => syntax(self.end.0, self.end.1, message),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|t| &t.tok) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error_here(&format!("expected {what}")))
        }
    }

    fn intern(&mut self, name: String) -> usize {
        match self.atoms.iter().position(|a| *a == name) {
            Some(i) => i,
            None => {
                self.atoms.push(name);
                self.atoms.len() - 1
            }
        }
    }

    fn atom(&mut self) -> Result<usize> {
        let Some(t) = self.bump() else {
            return Err(syntax(
                self.end.0,
                self.end.1,
                "expected atom, found end of input",
            ));
        };
        match t.tok {
            Tok::Atom(name) => {
                if self.peek().map(|t| &t.tok) == Some(&Tok::Open) {
                    return Err(self.compound_error());
                }
                if !self.atoms.contains(&name) && self.atoms.len() == MAX_UNIVERSE {
                    return Err(Error::UniverseTooLarge {
                        size: MAX_UNIVERSE + 1,
                        max: MAX_UNIVERSE,
                    });
                }
                Ok(self.intern(name))
            }
            Tok::Variable(name) => Err(Error::NonGround {
                line: t.line,
                column: t.column,
                name,
            }),
            Tok::Not => Err(syntax(
                t.line,
                t.column,
                "`not` is reserved and cannot name an atom",
            )),
            _ => Err(syntax(t.line, t.column, "expected atom")),
        }
    }

    /// Called at `(` following an atom: a variable inside makes the input
    /// non-ground, otherwise it is an unsupported compound term.
    fn compound_error(&mut self) -> Error {
        let open = self.peek().cloned().expect("peeked `(`");
        let mut depth = 0usize;
        while let Some(t) = self.bump() {
            match t.tok {
                Tok::Open => depth += 1,
                Tok::Close => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                Tok::Variable(name) => {
                    return Error::NonGround {
                        line: t.line,
                        column: t.column,
                        name,
                    }
                }
                _ => {}
            }
        }
        syntax(open.line, open.column, "compound atoms are not supported")
    }

    fn body(&mut self, rule: &mut Rule) -> Result<()> {
        loop {
            if self.eat(&Tok::Not) {
                let a = self.atom()?;
                rule.neg_body.insert(a);
            } else {
                let a = self.atom()?;
                rule.pos_body.insert(a);
            }
            if !self.eat(&Tok::Comma) {
                return Ok(());
            }
        }
    }

    fn rule(&mut self) -> Result<Rule> {
        let mut rule = Rule::new(AtomSet::EMPTY, AtomSet::EMPTY, AtomSet::EMPTY);
        if self.eat(&Tok::If) {
            self.body(&mut rule)?;
            self.expect(&Tok::Dot, "`,` or `.`")?;
            return Ok(rule);
        }
        loop {
            let a = self.atom()?;
            rule.head.insert(a);
            if !self.eat(&Tok::Bar) {
                break;
            }
        }
        if self.eat(&Tok::If) {
            self.body(&mut rule)?;
            self.expect(&Tok::Dot, "`,` or `.`")?;
        } else {
            self.expect(&Tok::Dot, "`|`, `:-` or `.`")?;
        }
        Ok(rule)
    }
}

/// Parses `.dlp` text into a ground program.
pub fn parse_program(text: &str) -> Result<Program> {
    let tokens = lex(text)?;
    let line_count = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut parser = Parser {
        tokens,
        pos: 0,
        atoms: Vec::new(),
        end: (line_count, last_len + 1),
    };
    let mut rules = Vec::new();
    while parser.peek().is_some() {
        rules.push(parser.rule()?);
    }
    Program::new(parser.atoms, rules)
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}
