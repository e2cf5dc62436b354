//! Derivation of positive disjunctions under negative assumptions.
//!
//! Given assumptions `¬F`, the rules whose negative body is contained in `F`
//! fire unconditionally on their negative part; stripping it leaves a
//! positive disjunctive program. Its derivable disjunctions are computed by
//! positive hyperresolution: every rule `H ← A₁, .., Aₘ` together with
//! derived clauses `D₁ ∋ A₁, .., Dₘ ∋ Aₘ` yields `H ∪ ⋃(Dᵢ ∖ {Aᵢ})`.
//! Clause sets are kept subsumption-minimal and closed to a fixpoint.

use crate::bits::AtomSet;

use super::{Program, Rule};

/// A subsumption-minimal set of positive clauses (disjunctions of atoms).
///
/// May contain the empty clause, in which case it is the only member.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClauseSet {
    clauses: Vec<AtomSet>,
}

impl ClauseSet {
    pub fn new() -> Self {
        ClauseSet::default()
    }

    /// Adds `clause` unless an existing clause subsumes it, dropping the
    /// clauses it subsumes. Returns whether it was added.
    pub fn insert(&mut self, clause: AtomSet) -> bool {
        if self.subsumes(clause) {
            return false;
        }
        self.clauses.retain(|c| !clause.is_subset(*c));
        self.clauses.push(clause);
        true
    }

    /// Some member is contained in `clause`.
    pub fn subsumes(&self, clause: AtomSet) -> bool {
        self.clauses.iter().any(|c| c.is_subset(clause))
    }

    pub fn contains_empty(&self) -> bool {
        self.clauses.iter().any(|c| c.is_empty())
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Clauses in canonical order.
    pub fn clauses(&self) -> Vec<AtomSet> {
        let mut out = self.clauses.clone();
        out.sort();
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomSet> + '_ {
        self.clauses.iter().copied()
    }
}

/// Rules applicable under the assumptions `¬assumed`, with negative bodies
/// stripped.
pub fn reduct(program: &Program, assumed: AtomSet) -> Vec<Rule> {
    program
        .rules()
        .iter()
        .filter(|r| r.neg_body.is_subset(assumed))
        .map(|r| Rule::new(r.head, r.pos_body, AtomSet::EMPTY))
        .collect()
}

/// Hyperresolution closure of positive rules (negative bodies are ignored).
pub fn hyperresolve(rules: &[Rule]) -> ClauseSet {
    let mut clauses = ClauseSet::new();
    for r in rules.iter().filter(|r| r.pos_body.is_empty()) {
        clauses.insert(r.head);
    }
    let nuclei: Vec<(AtomSet, Vec<usize>)> = rules
        .iter()
        .filter(|r| !r.pos_body.is_empty())
        .map(|r| (r.head, r.pos_body.iter().collect()))
        .collect();

    loop {
        if clauses.contains_empty() {
            return clauses;
        }
        let mut changed = false;
        for (head, body) in &nuclei {
            let electrons = clauses.clone();
            let mut resolvents = Vec::new();
            resolve(&electrons, &clauses, body, *head, &mut resolvents);
            for r in resolvents {
                changed |= clauses.insert(r);
            }
        }
        if !changed {
            return clauses;
        }
    }
}

/// Picks an electron for each remaining body atom; a partial resolvent that
/// is already subsumed can only grow, so such branches are cut.
fn resolve(
    electrons: &ClauseSet,
    current: &ClauseSet,
    body: &[usize],
    acc: AtomSet,
    out: &mut Vec<AtomSet>,
) {
    if current.subsumes(acc) {
        return;
    }
    let Some((&atom, rest)) = body.split_first() else {
        out.push(acc);
        return;
    };
    for e in electrons.iter().filter(|e| e.contains(atom)) {
        resolve(electrons, current, rest, acc | e.without(atom), out);
    }
}

/// Minimal positive clauses derivable from the program under `¬assumed`.
pub fn derive_clauses(program: &Program, assumed: AtomSet) -> ClauseSet {
    hyperresolve(&reduct(program, assumed))
}

/// The program with assumptions `¬assumed` derives `⋁disjunction`.
///
/// `disjunction = ∅` asks whether falsum is derivable.
pub fn derives(program: &Program, assumed: AtomSet, disjunction: AtomSet) -> bool {
    derive_clauses(program, assumed).subsumes(disjunction)
}
