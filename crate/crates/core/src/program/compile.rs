//! Compilation of programs into collective theories.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::bits::{ArgumentSet, AtomSet};
use crate::error::{Error, Result};
use crate::theory::{AttackPair, AttackRelation, Theory};

use super::derive::{hyperresolve, reduct, ClauseSet};
use super::Program;

/// Largest atom count [`compile`] accepts by default.
pub const DEFAULT_ATOM_CAP: usize = 12;

/// Name of the abducible `¬atom`.
pub fn argument_name(atom: &str) -> String {
    format!("~{atom}")
}

/// Compiles with the default atom cap.
pub fn compile(program: &Program) -> Result<Theory> {
    compile_with_cap(program, DEFAULT_ATOM_CAP)
}

/// Materializes the theory over arguments `~a` in which `¬F ↝ ¬E` for every
/// assumption set `F` and every minimal clause `E` derivable under `¬F`.
///
/// Derivability is monotone in `F`, so `(F, E)` is a minimal generator
/// exactly when `E` is not derivable after dropping any single assumption.
pub fn compile_with_cap(program: &Program, cap: usize) -> Result<Theory> {
    let n = program.atom_count();
    if n > cap {
        return Err(Error::AtomCap { size: n, cap });
    }
    let mut oracle = ClauseCache::new(program);
    let mut pairs = Vec::new();
    for assumed in program.universe().subsets() {
        let clauses = oracle.clauses(assumed).clone();
        for clause in clauses.iter() {
            let minimal = assumed
                .iter()
                .all(|a| !oracle.clauses(assumed.without(a)).subsumes(clause));
            if minimal {
                pairs.push(AttackPair::new(assumed, clause));
            }
        }
    }
    let names = program.atoms().iter().map(|a| argument_name(a));
    Theory::new(names, pairs)
}

/// Hyperresolution results memoized by the set of surviving rules.
struct ClauseCache<'p> {
    program: &'p Program,
    by_reduct: HashMap<Vec<bool>, ClauseSet>,
    by_assumption: HashMap<AtomSet, Vec<bool>>,
}

impl<'p> ClauseCache<'p> {
    fn new(program: &'p Program) -> Self {
        ClauseCache {
            program,
            by_reduct: HashMap::new(),
            by_assumption: HashMap::new(),
        }
    }

    fn clauses(&mut self, assumed: AtomSet) -> &ClauseSet {
        let program = self.program;
        let key = self
            .by_assumption
            .entry(assumed)
            .or_insert_with(|| {
                program
                    .rules()
                    .iter()
                    .map(|r| r.neg_body.is_subset(assumed))
                    .collect()
            })
            .clone();
        self.by_reduct
            .entry(key)
            .or_insert_with(|| hyperresolve(&reduct(program, assumed)))
    }
}

/// Answers attack queries by running the derivation on demand, without
/// materializing a generator base.
///
/// Supports everything that only needs [`AttackRelation`] (stable sets,
/// p-stable pairs); closures and property checks need [`compile`].
pub struct LazyTheory<'p> {
    program: &'p Program,
    cache: Mutex<HashMap<AtomSet, ClauseSet>>,
}

impl<'p> LazyTheory<'p> {
    pub fn new(program: &'p Program) -> Self {
        LazyTheory {
            program,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn program(&self) -> &'p Program {
        self.program
    }
}

impl AttackRelation for LazyTheory<'_> {
    fn universe_size(&self) -> usize {
        self.program.atom_count()
    }

    fn attacks(&self, source: ArgumentSet, target: ArgumentSet) -> bool {
        let mut cache = self.cache.lock().expect("clause cache poisoned");
        cache
            .entry(source)
            .or_insert_with(|| hyperresolve(&reduct(self.program, source)))
            .subsumes(target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::program::{derives, parse_program};
    use crate::properties::{is_affirmative, is_local};
    use crate::semantics::stable_sets;

    #[test]
    fn disjunctive_fact() {
        let p = parse_program("p | q.").unwrap();
        let t = compile(&p).unwrap();
        let names: Vec<&str> = t.arguments().iter().map(|a| a.name.as_str()).collect();
        assert_eq!(names, ["~p", "~q"]);
        assert!(t.base().contains(&AttackPair::new(AtomSet::EMPTY, [0, 1])));
        assert_eq!(
            stable_sets(&t).unwrap(),
            vec![t.set(&["~p"]).unwrap(), t.set(&["~q"]).unwrap()]
        );
    }

    #[test]
    fn mutual_negation() {
        let p = parse_program("p :- not q.\nq :- not p.").unwrap();
        let t = compile(&p).unwrap();
        let (np, nq) = (t.set(&["~p"]).unwrap(), t.set(&["~q"]).unwrap());
        assert!(t.attacks(nq, np));
        assert!(t.attacks(np, nq));
        assert_eq!(stable_sets(&t).unwrap(), vec![np, nq]);
    }

    #[test]
    fn empty_program() {
        let p = parse_program("").unwrap();
        let t = compile(&p).unwrap();
        assert!(t.base().is_empty());
        assert!(is_affirmative(&t) && is_local(&t));
    }

    #[test]
    fn atom_cap() {
        let text: String = (0..13).map(|i| format!("a{i}.\n")).collect();
        let p = parse_program(&text).unwrap();
        assert_eq!(compile(&p), Err(Error::AtomCap { size: 13, cap: 12 }));
        assert!(compile_with_cap(&p, 13).is_ok());
    }

    #[test]
    fn materialized_agrees_with_derivation_and_lazy() {
        let p = parse_program("p | q :- not r.\nr :- p, not s.\ns :- q.\n:- r, s.").unwrap();
        let t = compile(&p).unwrap();
        let lazy = LazyTheory::new(&p);
        for c in p.universe().subsets() {
            for d in p.universe().subsets() {
                let expected = derives(&p, c, d);
                assert_eq!(t.attacks(c, d), expected, "{c:?} {d:?}");
                assert_eq!(lazy.attacks(c, d), expected);
            }
        }
    }
}
