//! Propositional disjunctive logic programs.
//!
//! Rules have the shape `h1 | .. | hk :- b1, .., bm, not c1, .., not cn.`
//! with an empty head standing for a constraint. A program determines a
//! collective theory over the abducibles `~a` (one per atom) in which `¬C`
//! attacks `¬D` exactly when the program together with the assumptions `¬C`
//! derives the disjunction `⋁D`; see [`compile`].

mod compile;
mod derive;
mod parse;

use std::fmt;
use std::str::FromStr;

pub use compile::{argument_name, compile, compile_with_cap, LazyTheory, DEFAULT_ATOM_CAP};
pub use derive::{derive_clauses, derives, hyperresolve, reduct, ClauseSet};
pub use parse::parse_program;

use crate::bits::{AtomSet, MAX_UNIVERSE};
use crate::error::{Error, Result};

/// `head ← pos_body, not neg_body`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub head: AtomSet,
    pub pos_body: AtomSet,
    pub neg_body: AtomSet,
}

impl Rule {
    pub fn new(
        head: impl Into<AtomSet>,
        pos_body: impl Into<AtomSet>,
        neg_body: impl Into<AtomSet>,
    ) -> Self {
        Rule {
            head: head.into(),
            pos_body: pos_body.into(),
            neg_body: neg_body.into(),
        }
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.neg_body.is_empty()
    }

    fn atoms(&self) -> AtomSet {
        self.head | self.pos_body | self.neg_body
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Program {
    atoms: Vec<String>,
    rules: Vec<Rule>,
}

impl Program {
    pub fn new<S: Into<String>>(
        atoms: impl IntoIterator<Item = S>,
        rules: Vec<Rule>,
    ) -> Result<Program> {
        let mut names: Vec<String> = Vec::new();
        for atom in atoms {
            let atom = atom.into();
            if names.contains(&atom) {
                return Err(Error::DuplicateName(atom));
            }
            names.push(atom);
        }
        if names.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                max: MAX_UNIVERSE,
            });
        }
        let universe = AtomSet::full(names.len());
        for rule in &rules {
            if let Some(index) = (rule.atoms() - universe).first() {
                return Err(Error::OutOfUniverse {
                    index,
                    size: names.len(),
                });
            }
        }
        Ok(Program {
            atoms: names,
            rules,
        })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn universe(&self) -> AtomSet {
        AtomSet::full(self.atoms.len())
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    pub fn atom_set<S: AsRef<str>>(&self, atoms: &[S]) -> Result<AtomSet> {
        atoms
            .iter()
            .map(|a| {
                self.index_of(a.as_ref())
                    .ok_or_else(|| Error::UnknownArgument(a.as_ref().to_string()))
            })
            .collect()
    }

    pub fn names(&self, set: AtomSet) -> Vec<&str> {
        set.iter().map(|i| self.atoms[i].as_str()).collect()
    }

    /// No rule has more than one head atom.
    pub fn is_non_disjunctive(&self) -> bool {
        self.rules.iter().all(|r| r.head.len() <= 1)
    }

    pub fn has_constraints(&self) -> bool {
        self.rules.iter().any(Rule::is_constraint)
    }

    /// Non-disjunctive and constraint-free.
    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(|r| r.head.len() == 1)
    }

    fn write_rule(&self, f: &mut fmt::Formatter<'_>, rule: &Rule) -> fmt::Result {
        let head = self.names(rule.head).join(" | ");
        let body: Vec<String> = rule
            .pos_body
            .iter()
            .map(|i| self.atoms[i].clone())
            .chain(
                rule.neg_body
                    .iter()
                    .map(|i| format!("not {}", self.atoms[i])),
            )
            .collect();
        match (head.is_empty(), body.is_empty()) {
            (false, true) => write!(f, "{head}."),
            (false, false) => write!(f, "{head} :- {}.", body.join(", ")),
            // An empty rule is unconditional falsum; written in constraint
            // form although the grammar wants a non-empty body.
            (true, _) => write!(f, ":- {}.", body.join(", ")),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            self.write_rule(f, rule)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Program {
    type Err = Error;

    fn from_str(s: &str) -> Result<Program> {
        parse_program(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_stray_atoms() {
        let err = Program::new(["p"], vec![Rule::new([1], [], [])]).unwrap_err();
        assert_eq!(err, Error::OutOfUniverse { index: 1, size: 1 });
        assert!(Program::new(["p", "p"], vec![]).is_err());
    }

    #[test]
    fn display_round_trips() {
        let text = "p | q.\nr :- p, not q.\n:- not r.\n";
        let p: Program = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(p.to_string().parse::<Program>().unwrap(), p);
    }

    #[test]
    fn classification() {
        let p: Program = "p :- not q.\nq :- not p.".parse().unwrap();
        assert!(p.is_normal() && p.is_non_disjunctive() && !p.has_constraints());
        let p: Program = "p | q.".parse().unwrap();
        assert!(!p.is_normal() && !p.is_non_disjunctive());
        let p: Program = "p.\n:- p.".parse().unwrap();
        assert!(!p.is_normal() && p.is_non_disjunctive() && p.has_constraints());
    }
}
