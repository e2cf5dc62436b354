//! Abstract argumentation over normal theories.
//!
//! In a normal (affirmative and local) theory `Γ ↝ Δ` holds iff `Γ ↝ α` for
//! some `α ∈ Δ`, so the relation between sets and single arguments carries
//! all the information. The classical operator is
//! `[Γ] = {α | Γ ⊬ α}`, and `[[Γ]]` collects the arguments acceptable for
//! `Γ`.

use std::fmt;
use std::str::FromStr;

use crate::bits::{maximal_sets, sort_canonical, ArgumentSet, BitSet};
use crate::error::{Error, Result};
use crate::properties::is_normal;
use crate::semantics::{Limits, PStablePair};
use crate::theory::{AttackRelation, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DungSemantics {
    Complete,
    Preferred,
    Stable,
    Grounded,
}

impl DungSemantics {
    pub const ALL: [DungSemantics; 4] = [
        DungSemantics::Complete,
        DungSemantics::Preferred,
        DungSemantics::Stable,
        DungSemantics::Grounded,
    ];
}

impl fmt::Display for DungSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DungSemantics::Complete => "complete",
            DungSemantics::Preferred => "preferred",
            DungSemantics::Stable => "stable",
            DungSemantics::Grounded => "grounded",
        })
    }
}

impl FromStr for DungSemantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        DungSemantics::ALL
            .into_iter()
            .find(|sem| sem.to_string() == s)
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

/// A normal theory seen as an abstract argumentation framework.
#[derive(Debug, Clone, Copy)]
pub struct DungView<'t> {
    theory: &'t Theory,
}

impl<'t> DungView<'t> {
    pub fn new(theory: &'t Theory) -> Result<Self> {
        if !is_normal(theory) {
            return Err(Error::NotNormal);
        }
        Ok(DungView { theory })
    }

    pub fn theory(&self) -> &'t Theory {
        self.theory
    }

    /// `[Γ]`, the arguments allowable by `Γ`.
    pub fn bracket(&self, set: ArgumentSet) -> ArgumentSet {
        let t = self.theory;
        t.universe()
            .iter()
            .filter(|&a| !t.attacks(set, BitSet::singleton(a)))
            .collect()
    }

    /// `[[Γ]]`, the arguments acceptable for `Γ`.
    pub fn acceptable(&self, set: ArgumentSet) -> ArgumentSet {
        self.bracket(self.bracket(set))
    }

    pub fn is_conflict_free(&self, set: ArgumentSet) -> bool {
        set.is_subset(self.bracket(set))
    }

    pub fn is_admissible(&self, set: ArgumentSet) -> bool {
        self.is_conflict_free(set) && set.is_subset(self.acceptable(set))
    }

    pub fn is_complete(&self, set: ArgumentSet) -> bool {
        self.is_conflict_free(set) && self.acceptable(set) == set
    }

    pub fn is_stable_extension(&self, set: ArgumentSet) -> bool {
        self.bracket(set) == set
    }

    /// Least complete extension, by iterating `Γ ↦ [[Γ]]` from `∅`.
    ///
    /// The map is monotone and each step adds at least one argument until
    /// the fixpoint, so at most `n` steps are taken.
    pub fn grounded(&self) -> ArgumentSet {
        let mut current = BitSet::EMPTY;
        for _ in 0..=self.theory.len() {
            let next = self.acceptable(current);
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    pub fn extensions(&self, semantics: DungSemantics) -> Result<Vec<ArgumentSet>> {
        self.extensions_with(semantics, &Limits::default())
    }

    pub fn extensions_with(
        &self,
        semantics: DungSemantics,
        limits: &Limits,
    ) -> Result<Vec<ArgumentSet>> {
        if semantics == DungSemantics::Grounded {
            return Ok(vec![self.grounded()]);
        }
        limits.check(self.theory.len())?;
        let all = self.theory.universe().subsets();
        let mut out: Vec<ArgumentSet> = match semantics {
            DungSemantics::Stable => all.filter(|s| self.is_stable_extension(*s)).collect(),
            DungSemantics::Complete | DungSemantics::Preferred => {
                all.filter(|s| self.is_complete(*s)).collect()
            }
            DungSemantics::Grounded => unreachable!(),
        };
        if semantics == DungSemantics::Preferred {
            out = maximal_sets(&out);
        }
        sort_canonical(&mut out);
        Ok(out)
    }

    /// All admissible sets (classical definition).
    pub fn admissible_sets(&self, limits: &Limits) -> Result<Vec<ArgumentSet>> {
        limits.check(self.theory.len())?;
        let mut out: Vec<ArgumentSet> = self
            .theory
            .universe()
            .subsets()
            .filter(|s| self.is_admissible(*s))
            .collect();
        sort_canonical(&mut out);
        Ok(out)
    }

    /// Compares collective stable sets and p-stable pairs against the
    /// classical stable and complete extensions.
    pub fn check_normal_correspondence(&self) -> Result<CorrespondenceReport> {
        self.check_normal_correspondence_with(&Limits::default())
    }

    pub fn check_normal_correspondence_with(
        &self,
        limits: &Limits,
    ) -> Result<CorrespondenceReport> {
        let collective_stable = limits.stable_sets(self.theory)?;
        let dung_stable = self.extensions_with(DungSemantics::Stable, limits)?;
        let collective_pairs = limits.p_stable_pairs(self.theory)?;
        let mut dung_pairs: Vec<PStablePair> = self
            .extensions_with(DungSemantics::Complete, limits)?
            .into_iter()
            .map(|c| PStablePair {
                lower: c,
                upper: self.bracket(c),
            })
            .collect();
        sort_canonical(&mut dung_pairs);

        Ok(CorrespondenceReport {
            stable_only_collective: missing(&collective_stable, &dung_stable),
            stable_only_dung: missing(&dung_stable, &collective_stable),
            p_stable_only_collective: missing(&collective_pairs, &dung_pairs),
            complete_only_dung: missing(&dung_pairs, &collective_pairs),
            stable_sets: collective_stable,
            p_stable_pairs: collective_pairs,
        })
    }
}

fn missing<T: Copy + PartialEq>(from: &[T], other: &[T]) -> Vec<T> {
    from.iter()
        .filter(|x| !other.contains(x))
        .copied()
        .collect()
}

/// Outcome of [`DungView::check_normal_correspondence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub stable_sets: Vec<ArgumentSet>,
    pub p_stable_pairs: Vec<PStablePair>,
    /// Collective stable sets that are not stable extensions.
    pub stable_only_collective: Vec<ArgumentSet>,
    /// Stable extensions that are not collective stable sets.
    pub stable_only_dung: Vec<ArgumentSet>,
    /// P-stable pairs not of the form `(Γ, [Γ])` for a complete `Γ`.
    pub p_stable_only_collective: Vec<PStablePair>,
    /// Pairs `(Γ, [Γ])` for complete `Γ` that are not p-stable.
    pub complete_only_dung: Vec<PStablePair>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.stable_only_collective.is_empty()
            && self.stable_only_dung.is_empty()
            && self.p_stable_only_collective.is_empty()
            && self.complete_only_dung.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theory(names: &[&str], generators: &[(&[&str], &[&str])]) -> Theory {
        Theory::from_named(names, generators).unwrap()
    }

    #[test]
    fn bracket_on_chain() {
        let t = theory(&["a", "b", "c"], &[(&["a"], &["b"]), (&["b"], &["c"])]);
        let v = DungView::new(&t).unwrap();
        let a = t.set(&["a"]).unwrap();
        assert_eq!(v.bracket(a), t.set(&["a", "c"]).unwrap());
        assert_eq!(v.acceptable(a), t.set(&["a", "c"]).unwrap());
        assert_eq!(v.bracket(BitSet::EMPTY), t.universe());
    }

    #[test]
    fn chain_extensions() {
        let t = theory(&["a", "b", "c"], &[(&["a"], &["b"]), (&["b"], &["c"])]);
        let v = DungView::new(&t).unwrap();
        let ac = vec![t.set(&["a", "c"]).unwrap()];
        assert_eq!(v.extensions(DungSemantics::Grounded).unwrap(), ac);
        assert_eq!(v.extensions(DungSemantics::Stable).unwrap(), ac);
        assert_eq!(v.extensions(DungSemantics::Complete).unwrap(), ac);
        assert_eq!(v.extensions(DungSemantics::Preferred).unwrap(), ac);
    }

    #[test]
    fn mutual_attack_extensions() {
        let t = theory(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        let v = DungView::new(&t).unwrap();
        let (a, b) = (BitSet::from([0]), BitSet::from([1]));
        assert_eq!(
            v.extensions(DungSemantics::Complete).unwrap(),
            vec![BitSet::EMPTY, a, b]
        );
        assert_eq!(v.extensions(DungSemantics::Preferred).unwrap(), vec![a, b]);
        assert_eq!(
            v.extensions(DungSemantics::Grounded).unwrap(),
            vec![BitSet::EMPTY]
        );
        assert!(v.check_normal_correspondence().unwrap().passed());
    }

    #[test]
    fn empty_base_extensions() {
        let t = theory(&["a", "b"], &[]);
        let v = DungView::new(&t).unwrap();
        for sem in DungSemantics::ALL {
            assert_eq!(v.extensions(sem).unwrap(), vec![t.universe()], "{sem}");
        }
        assert!(v.check_normal_correspondence().unwrap().passed());
    }

    #[test]
    fn non_normal_theory_is_rejected() {
        let t = theory(&["a", "b", "c"], &[(&["a"], &["b", "c"])]);
        assert_eq!(DungView::new(&t).unwrap_err(), Error::NotNormal);
        let t = theory(&["a"], &[(&["a"], &[])]);
        assert_eq!(DungView::new(&t).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn semantics_names() {
        for sem in DungSemantics::ALL {
            assert_eq!(sem.to_string().parse::<DungSemantics>().unwrap(), sem);
        }
    }
}
