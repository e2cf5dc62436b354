//! Stable sets, p-stable pairs, and the three admissibility notions.
//!
//! The membership tests are the fixpoint equations
//!
//! ```text
//! Γ stable        ⇔  Γ ⊬ Γ  and  Γ = {α | Γ ⊬ Γ,α}
//! (Γ,Δ) p-stable  ⇔  Γ ⊆ Δ,  Γ ⊬ Δ,  Δ ⊬ Γ,
//!                    Δ = {α | Γ ⊬ Δ,α}  and  Γ = {α | Δ ⊬ Γ,α}
//! ```
//!
//! The non-attack guards make the equations agree with the definitions by
//! maximal allowable sets also for theories that attack `∅`. Enumeration is
//! a depth-first scan over in/out (resp. lower/upper/out) assignments that
//! cuts a branch as soon as the partial sets violate a guard; all guards are
//! monotone, so no solution is lost.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::bits::{maximal_sets, sort_canonical, ArgumentSet, BitSet};
use crate::closure::{negative_closure, positive_closure};
use crate::error::{Error, Result};
use crate::theory::{AttackRelation, Theory};

/// Enumeration refuses universes above this size unless raised explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;
/// Enumeration above this size logs a warning.
pub const ENUMERATION_WARN_SIZE: usize = 14;

/// A candidate p-stable pair `(Γ, Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PStablePair {
    pub lower: ArgumentSet,
    pub upper: ArgumentSet,
}

impl PStablePair {
    pub fn new(lower: ArgumentSet, upper: ArgumentSet) -> Result<Self> {
        if !lower.is_subset(upper) {
            return Err(Error::LowerNotSubset);
        }
        Ok(PStablePair { lower, upper })
    }
}

/// Which attack (and counterattack) relation admissibility quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdmissibilityKind {
    /// `↝`
    Plain,
    /// `↝⁺`
    Positive,
    /// `↝⁻`
    Negative,
}

impl AdmissibilityKind {
    pub const ALL: [AdmissibilityKind; 3] = [
        AdmissibilityKind::Plain,
        AdmissibilityKind::Positive,
        AdmissibilityKind::Negative,
    ];

    /// The theory whose plain relation is this kind of attack.
    pub fn attack_theory(self, theory: &Theory) -> Cow<'_, Theory> {
        match self {
            AdmissibilityKind::Plain => Cow::Borrowed(theory),
            AdmissibilityKind::Positive => Cow::Owned(positive_closure(theory)),
            AdmissibilityKind::Negative => Cow::Owned(negative_closure(theory)),
        }
    }
}

impl fmt::Display for AdmissibilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdmissibilityKind::Plain => "plain",
            AdmissibilityKind::Positive => "positive",
            AdmissibilityKind::Negative => "negative",
        })
    }
}

impl FromStr for AdmissibilityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(AdmissibilityKind::Plain),
            "positive" => Ok(AdmissibilityKind::Positive),
            "negative" => Ok(AdmissibilityKind::Negative),
            other => Err(format!("unknown admissibility kind `{other}`")),
        }
    }
}

/// `{α | source ⊬ base ∪ {α}}`
fn allowable_extensions<R: AttackRelation + ?Sized>(
    relation: &R,
    source: ArgumentSet,
    base: ArgumentSet,
) -> ArgumentSet {
    relation
        .universe()
        .iter()
        .filter(|&a| !relation.attacks(source, base.with(a)))
        .collect()
}

pub fn is_stable<R: AttackRelation + ?Sized>(relation: &R, set: ArgumentSet) -> bool {
    relation.is_conflict_free(set) && allowable_extensions(relation, set, set) == set
}

pub fn is_p_stable<R: AttackRelation + ?Sized>(relation: &R, pair: &PStablePair) -> Result<bool> {
    let PStablePair { lower, upper } = *pair;
    if !lower.is_subset(upper) {
        return Err(Error::LowerNotSubset);
    }
    Ok(!relation.attacks(lower, upper)
        && !relation.attacks(upper, lower)
        && allowable_extensions(relation, lower, upper) == upper
        && allowable_extensions(relation, upper, lower) == lower)
}

/// Plain, positive or negative admissibility of `set`.
///
/// Only minimal attackers are checked: for every generator `(A, B)` of the
/// kind's attack theory with `B ⊆ Γ`, `Γ` must counterattack `A`.
pub fn is_admissible(theory: &Theory, set: ArgumentSet, kind: AdmissibilityKind) -> bool {
    admissible_in(&kind.attack_theory(theory), set)
}

fn admissible_in(attack: &Theory, set: ArgumentSet) -> bool {
    attack.is_conflict_free(set)
        && attack
            .base()
            .iter()
            .filter(|p| p.target.is_subset(set))
            .all(|p| attack.attacks(set, p.source))
}

/// Size limits for the exhaustive enumeration entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_args: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Limits {
    pub fn new(max_args: usize) -> Self {
        Limits { max_args }
    }

    pub fn check(&self, size: usize) -> Result<()> {
        if size > self.max_args {
            return Err(Error::EnumerationCap {
                size,
                cap: self.max_args,
            });
        }
        if size > ENUMERATION_WARN_SIZE {
            log::warn!("enumerating over {size} arguments; this may take a while");
        }
        Ok(())
    }

    pub fn stable_sets<R: AttackRelation + ?Sized>(
        &self,
        relation: &R,
    ) -> Result<Vec<ArgumentSet>> {
        let n = relation.universe_size();
        self.check(n)?;
        let mut out = Vec::new();
        scan_subsets(n, &|set| relation.is_conflict_free(set), &mut |set| {
            if is_stable(relation, set) {
                out.push(set);
            }
        });
        sort_canonical(&mut out);
        Ok(out)
    }

    pub fn p_stable_pairs<R: AttackRelation + ?Sized>(
        &self,
        relation: &R,
    ) -> Result<Vec<PStablePair>> {
        let n = relation.universe_size();
        self.check(n)?;
        let mut out = Vec::new();
        scan_pairs(relation, 0, n, BitSet::EMPTY, BitSet::EMPTY, &mut out);
        sort_canonical(&mut out);
        Ok(out)
    }

    pub fn admissible_sets(
        &self,
        theory: &Theory,
        kind: AdmissibilityKind,
        maximal_only: bool,
    ) -> Result<Vec<ArgumentSet>> {
        let n = theory.len();
        self.check(n)?;
        let attack = kind.attack_theory(theory);
        let mut out = Vec::new();
        scan_subsets(n, &|set| attack.is_conflict_free(set), &mut |set| {
            if admissible_in(&attack, set) {
                out.push(set);
            }
        });
        if maximal_only {
            out = maximal_sets(&out);
        }
        sort_canonical(&mut out);
        Ok(out)
    }
}

/// All stable sets, in canonical order.
pub fn stable_sets<R: AttackRelation + ?Sized>(relation: &R) -> Result<Vec<ArgumentSet>> {
    Limits::default().stable_sets(relation)
}

/// All p-stable pairs, ordered by lower then upper set.
pub fn p_stable_pairs<R: AttackRelation + ?Sized>(relation: &R) -> Result<Vec<PStablePair>> {
    Limits::default().p_stable_pairs(relation)
}

/// All (or only the inclusion-maximal) admissible sets of the given kind.
pub fn admissible_sets(
    theory: &Theory,
    kind: AdmissibilityKind,
    maximal_only: bool,
) -> Result<Vec<ArgumentSet>> {
    Limits::default().admissible_sets(theory, kind, maximal_only)
}

/// Depth-first scan over subsets of `{0..n}`; `viable` must be monotone
/// decreasing (once false on a set, false on all supersets).
fn scan_subsets(n: usize, viable: &dyn Fn(BitSet) -> bool, visit: &mut dyn FnMut(BitSet)) {
    fn go(
        i: usize,
        n: usize,
        current: BitSet,
        viable: &dyn Fn(BitSet) -> bool,
        visit: &mut dyn FnMut(BitSet),
    ) {
        if !viable(current) {
            return;
        }
        if i == n {
            visit(current);
            return;
        }
        go(i + 1, n, current.with(i), viable, visit);
        go(i + 1, n, current, viable, visit);
    }
    go(0, n, BitSet::EMPTY, viable, visit);
}

fn scan_pairs<R: AttackRelation + ?Sized>(
    relation: &R,
    i: usize,
    n: usize,
    lower: BitSet,
    upper: BitSet,
    out: &mut Vec<PStablePair>,
) {
    if relation.attacks(lower, upper) || relation.attacks(upper, lower) {
        return;
    }
    if i == n {
        let pair = PStablePair { lower, upper };
        if is_p_stable(relation, &pair).unwrap_or(false) {
            out.push(pair);
        }
        return;
    }
    scan_pairs(relation, i + 1, n, lower.with(i), upper.with(i), out);
    scan_pairs(relation, i + 1, n, lower, upper.with(i), out);
    scan_pairs(relation, i + 1, n, lower, upper, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::AttackPair;

    fn theory(names: &[&str], generators: &[(&[&str], &[&str])]) -> Theory {
        Theory::from_named(names, generators).unwrap()
    }

    #[test]
    fn self_attacker_example_has_no_stable_sets() {
        let t = theory(&["a", "b"], &[(&["a"], &["a"]), (&["a"], &["b"])]);
        assert!(stable_sets(&t).unwrap().is_empty());
        assert_eq!(
            stable_sets(&positive_closure(&t)).unwrap(),
            vec![BitSet::from([1])]
        );
    }

    #[test]
    fn empty_base_is_its_own_stable_set() {
        let t = theory(&["a", "b"], &[]);
        assert_eq!(stable_sets(&t).unwrap(), vec![BitSet::from([0, 1])]);
        let t = theory(&["a"], &[]);
        assert_eq!(
            p_stable_pairs(&t).unwrap(),
            vec![PStablePair::new(BitSet::from([0]), BitSet::from([0])).unwrap()]
        );
    }

    #[test]
    fn stable_sets_give_diagonal_p_stable_pairs() {
        let t = theory(
            &["a", "b", "c"],
            &[(&["a"], &["b"]), (&["b"], &["a"]), (&["b"], &["c"])],
        );
        for s in stable_sets(&t).unwrap() {
            assert!(is_p_stable(&t, &PStablePair { lower: s, upper: s }).unwrap());
        }
    }

    #[test]
    fn p_stable_rejects_non_nested_pair() {
        let t = theory(&["a", "b"], &[]);
        let pair = PStablePair {
            lower: BitSet::from([0]),
            upper: BitSet::from([1]),
        };
        assert_eq!(is_p_stable(&t, &pair), Err(Error::LowerNotSubset));
        assert_eq!(
            PStablePair::new(BitSet::from([0]), BitSet::EMPTY),
            Err(Error::LowerNotSubset)
        );
    }

    #[test]
    fn guards_matter_when_the_empty_set_is_attacked() {
        // {a} ↝ ∅: the bare fixpoint equations accept (∅, {a}), but {a} is
        // not allowable for ∅'s partner since ⟨{a}⟩ is empty.
        let t = theory(&["a"], &[(&["a"], &[])]);
        let pair = PStablePair {
            lower: BitSet::EMPTY,
            upper: BitSet::from([0]),
        };
        assert_eq!(allowable_extensions(&t, pair.lower, pair.upper), pair.upper);
        assert_eq!(allowable_extensions(&t, pair.upper, pair.lower), pair.lower);
        assert!(!is_p_stable(&t, &pair).unwrap());

        // ∅ ↝ ∅ makes ∅ a bare fixpoint of the stable equation.
        let t = Theory::new(["a"], [AttackPair::new(BitSet::EMPTY, BitSet::EMPTY)]).unwrap();
        assert_eq!(
            allowable_extensions(&t, BitSet::EMPTY, BitSet::EMPTY),
            BitSet::EMPTY
        );
        assert!(!is_stable(&t, BitSet::EMPTY));
        assert!(stable_sets(&t).unwrap().is_empty());
    }

    #[test]
    fn admissibility_examples() {
        let t = theory(&["a", "b"], &[]);
        for kind in AdmissibilityKind::ALL {
            assert!(is_admissible(&t, BitSet::EMPTY, kind));
        }

        let t = theory(&["a", "b"], &[(&["a"], &["a"]), (&["a"], &["b"])]);
        let p = positive_closure(&t);
        assert!(is_admissible(
            &p,
            BitSet::from([1]),
            AdmissibilityKind::Positive
        ));
        assert!(is_admissible(
            &t,
            BitSet::from([1]),
            AdmissibilityKind::Positive
        ));

        let t = theory(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        assert!(is_admissible(
            &t,
            BitSet::from([0]),
            AdmissibilityKind::Plain
        ));
        assert_eq!(
            admissible_sets(&t, AdmissibilityKind::Plain, false).unwrap(),
            vec![BitSet::EMPTY, BitSet::from([0]), BitSet::from([1])]
        );
        assert_eq!(
            admissible_sets(&t, AdmissibilityKind::Plain, true).unwrap(),
            vec![BitSet::from([0]), BitSet::from([1])]
        );
    }

    #[test]
    fn caps_are_enforced() {
        let names: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        let t = Theory::new(names, []).unwrap();
        assert_eq!(
            stable_sets(&t),
            Err(Error::EnumerationCap { size: 21, cap: 20 })
        );
        assert!(Limits::new(3).p_stable_pairs(&t).is_err());
        assert!(Limits::new(3)
            .admissible_sets(&t, AdmissibilityKind::Plain, false)
            .is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in AdmissibilityKind::ALL {
            assert_eq!(kind.to_string().parse::<AdmissibilityKind>().unwrap(), kind);
        }
        assert!("weird".parse::<AdmissibilityKind>().is_err());
    }
}
