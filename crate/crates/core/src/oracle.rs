//! Brute-force semantics for disjunctive programs.
//!
//! Everything here works by enumerating interpretations, independently of
//! the hyperresolution engine and the argumentation machinery, so it can be
//! used to cross-check both.

use crate::bits::{sort_canonical, AtomSet};
use crate::error::{Error, Result};
use crate::program::{compile_with_cap, Program, Rule, DEFAULT_ATOM_CAP};
use crate::semantics::{Limits, DEFAULT_ENUMERATION_CAP};
use crate::theory::Theory;

/// A two-valued interpretation, given by its true atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation {
    pub true_atoms: AtomSet,
}

impl From<AtomSet> for Interpretation {
    fn from(true_atoms: AtomSet) -> Self {
        Interpretation { true_atoms }
    }
}

/// Classical satisfaction of every rule: a true body forces a true head atom.
pub fn is_model(rules: &[Rule], interpretation: AtomSet) -> bool {
    rules.iter().all(|r| {
        let body_true =
            r.pos_body.is_subset(interpretation) && !r.neg_body.intersects(interpretation);
        !body_true || r.head.intersects(interpretation)
    })
}

/// `rules ⊨ ⋁disjunction`, by truth table over `atom_count` atoms.
///
/// The empty disjunction is falsum, entailed only by unsatisfiable rules.
pub fn entails(rules: &[Rule], atom_count: usize, disjunction: AtomSet) -> bool {
    AtomSet::full(atom_count)
        .subsets()
        .filter(|i| is_model(rules, *i))
        .all(|i| i.intersects(disjunction))
}

/// Gelfond–Lifschitz reduct: drop rules with a negative body atom in
/// `candidate`, strip negative bodies from the rest.
pub fn gl_reduct(program: &Program, candidate: AtomSet) -> Vec<Rule> {
    program
        .rules()
        .iter()
        .filter(|r| !r.neg_body.intersects(candidate))
        .map(|r| Rule::new(r.head, r.pos_body, AtomSet::EMPTY))
        .collect()
}

/// `candidate` is a model and none of its proper subsets is.
pub fn is_minimal_model(rules: &[Rule], candidate: AtomSet) -> bool {
    is_model(rules, candidate)
        && candidate
            .subsets()
            .filter(|s| *s != candidate)
            .all(|s| !is_model(rules, s))
}

pub fn is_stable_model(program: &Program, candidate: AtomSet) -> bool {
    is_minimal_model(&gl_reduct(program, candidate), candidate)
}

/// All stable models with the default atom cap.
pub fn stable_models(program: &Program) -> Result<Vec<Interpretation>> {
    stable_models_with_cap(program, DEFAULT_ATOM_CAP)
}

pub fn stable_models_with_cap(program: &Program, cap: usize) -> Result<Vec<Interpretation>> {
    let n = program.atom_count();
    if n > cap {
        return Err(Error::AtomCap { size: n, cap });
    }
    let mut out: Vec<Interpretation> = program
        .universe()
        .subsets()
        .filter(|c| is_stable_model(program, *c))
        .map(Interpretation::from)
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// Result of matching stable models `C` against stable sets `¬C̄` of the
/// compiled theory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableModelReport {
    pub theory: Theory,
    pub stable_models: Vec<Interpretation>,
    pub stable_sets: Vec<AtomSet>,
    /// Stable models whose complement is not a stable set.
    pub unmatched_models: Vec<Interpretation>,
    /// Stable sets whose complement is not a stable model.
    pub unmatched_sets: Vec<AtomSet>,
}

impl StableModelReport {
    pub fn passed(&self) -> bool {
        self.unmatched_models.is_empty() && self.unmatched_sets.is_empty()
    }
}

/// Checks that `C ↦ ¬(atoms ∖ C)` is a bijection between stable models and
/// stable sets of the compiled theory.
pub fn check_stable_models(program: &Program) -> Result<StableModelReport> {
    check_stable_models_with(
        program,
        DEFAULT_ATOM_CAP,
        &Limits::new(DEFAULT_ENUMERATION_CAP),
    )
}

pub fn check_stable_models_with(
    program: &Program,
    atom_cap: usize,
    limits: &Limits,
) -> Result<StableModelReport> {
    let n = program.atom_count();
    let theory = compile_with_cap(program, atom_cap)?;
    let models = stable_models_with_cap(program, atom_cap)?;
    let sets = limits.stable_sets(&theory)?;
    let unmatched_models = models
        .iter()
        .filter(|m| !sets.contains(&m.true_atoms.complement(n)))
        .copied()
        .collect();
    let unmatched_sets = sets
        .iter()
        .filter(|s| !models.contains(&Interpretation::from(s.complement(n))))
        .copied()
        .collect();
    Ok(StableModelReport {
        theory,
        stable_models: models,
        stable_sets: sets,
        unmatched_models,
        unmatched_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::program::parse_program;

    fn models(text: &str) -> Vec<Vec<String>> {
        let p = parse_program(text).unwrap();
        stable_models(&p)
            .unwrap()
            .into_iter()
            .map(|m| {
                p.names(m.true_atoms)
                    .into_iter()
                    .map(String::from)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn entailment_examples() {
        let p = parse_program("p | q.").unwrap();
        assert!(entails(p.rules(), 2, AtomSet::from([0, 1])));
        assert!(!entails(p.rules(), 2, AtomSet::from([0])));
        assert!(!entails(&[], 1, AtomSet::from([0])));
        let p = parse_program("p.").unwrap();
        assert!(entails(p.rules(), 1, AtomSet::from([0])));
        assert!(!entails(p.rules(), 1, AtomSet::EMPTY));
    }

    #[test]
    fn reduct_examples() {
        let p = parse_program("p :- not q.").unwrap();
        assert_eq!(
            gl_reduct(&p, AtomSet::from([0])),
            vec![Rule::new([0], [], [])]
        );
        assert!(gl_reduct(&p, AtomSet::from([1])).is_empty());
        let p = parse_program("p | q.").unwrap();
        assert_eq!(gl_reduct(&p, AtomSet::from([0])), p.rules());
    }

    #[test]
    fn stable_model_examples() {
        assert_eq!(models("p | q."), vec![vec!["p"], vec!["q"]]);
        assert_eq!(
            models("p :- not q.\nq :- not p."),
            vec![vec!["p"], vec!["q"]]
        );
        assert!(models("p :- not p.").is_empty());
        assert_eq!(models(""), vec![Vec::<String>::new()]);
        assert!(models("p.\n:- p.").is_empty());
    }

    #[test]
    fn bijection_examples() {
        for text in ["p | q.", "", "p :- not p.", "p :- not q.\nq :- not p."] {
            let p = parse_program(text).unwrap();
            let report = check_stable_models(&p).unwrap();
            assert!(report.passed(), "{text}: {report:?}");
        }
        let p = parse_program("").unwrap();
        let report = check_stable_models(&p).unwrap();
        assert_eq!(report.stable_sets, vec![AtomSet::EMPTY]);
    }

    #[test]
    fn caps() {
        let text: String = (0..13).map(|i| format!("a{i}.\n")).collect();
        let p = parse_program(&text).unwrap();
        assert!(matches!(stable_models(&p), Err(Error::AtomCap { .. })));
    }
}
