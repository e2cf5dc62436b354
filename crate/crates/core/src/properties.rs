//! Structural properties of theories, decided on the generator base.

use crate::bits::BitSet;
use crate::closure::{negative_closure, positive_closure};
use crate::theory::{AttackRelation, Theory};

/// No set attacks `∅`.
pub fn is_affirmative(theory: &Theory) -> bool {
    theory.base().iter().all(|p| !p.target.is_empty())
}

/// Locality: `Γ ↝ Δ,Δ′` implies `Γ ↝ Δ` or `Γ ↝ Δ′`.
///
/// Equivalent to every generator `(A, B)` satisfying `A ↝ ∅` or `A ↝ {b}`
/// for some `b ∈ B`.
pub fn is_local(theory: &Theory) -> bool {
    theory.base().iter().all(|p| {
        theory.attacks(p.source, BitSet::EMPTY)
            || p.target
                .iter()
                .any(|b| theory.attacks(p.source, BitSet::singleton(b)))
    })
}

/// Semi-locality: `Γ ↝ Δ,Φ` implies `Γ,Δ ↝ Φ` or `Γ,Φ ↝ Δ`.
///
/// Checked on every split of every generator's target.
pub fn is_semi_local(theory: &Theory) -> bool {
    theory.base().iter().all(|p| {
        p.target.subsets().all(|left| {
            let right = p.target - left;
            theory.attacks(p.source | left, right) || theory.attacks(p.source | right, left)
        })
    })
}

/// `Γ,Δ ↝ Δ` implies `Γ ↝ Δ`.
pub fn is_positive(theory: &Theory) -> bool {
    positive_closure(theory).same_relation(theory)
}

/// `Γ ↝ Γ,Δ` implies `Γ ↝ Δ`.
pub fn is_negative(theory: &Theory) -> bool {
    negative_closure(theory).same_relation(theory)
}

pub fn is_normal(theory: &Theory) -> bool {
    is_affirmative(theory) && is_local(theory)
}

/// Positive and semi-local.
pub fn is_l_positive(theory: &Theory) -> bool {
    is_positive(theory) && is_semi_local(theory)
}

/// All six property flags of a theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properties {
    pub affirmative: bool,
    pub local: bool,
    pub semi_local: bool,
    pub positive: bool,
    pub negative: bool,
    pub normal: bool,
}

impl Properties {
    pub fn of(theory: &Theory) -> Self {
        let affirmative = is_affirmative(theory);
        let local = is_local(theory);
        Properties {
            affirmative,
            local,
            semi_local: is_semi_local(theory),
            positive: is_positive(theory),
            negative: is_negative(theory),
            normal: affirmative && local,
        }
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("affirmative", self.affirmative),
            ("local", self.local),
            ("semi_local", self.semi_local),
            ("positive", self.positive),
            ("negative", self.negative),
            ("normal", self.normal),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theory(names: &[&str], generators: &[(&[&str], &[&str])]) -> Theory {
        Theory::from_named(names, generators).unwrap()
    }

    #[test]
    fn joint_target_is_not_local() {
        let t = theory(&["a", "b", "c"], &[(&["a"], &["b", "c"])]);
        assert!(!is_local(&t));
        assert!(is_affirmative(&t));
        assert!(!is_normal(&t));
    }

    #[test]
    fn mutual_attack_with_joint_refutation_is_negative() {
        let t = theory(
            &["a", "b"],
            &[(&["a"], &["b"]), (&["b"], &["a"]), (&["a", "b"], &[])],
        );
        assert!(is_negative(&t));
        assert!(!is_affirmative(&t));
    }

    #[test]
    fn positive_and_negative_implies_symmetric() {
        let t = theory(&["a", "b"], &[(&["a"], &["b"])]);
        let both = positive_closure(&negative_closure(&t));
        assert!(is_positive(&both) && is_negative(&both));
        assert!(both.attacks(BitSet::from([1]), BitSet::from([0])));
    }

    #[test]
    fn singleton_attacks_are_normal() {
        let t = theory(&["a", "b", "c"], &[(&["a"], &["b"]), (&["b", "c"], &["a"])]);
        let props = Properties::of(&t);
        assert!(props.normal && props.local && props.affirmative);
        assert!(!props.positive && !props.negative);
    }

    #[test]
    fn positive_closure_of_local_theory_is_semi_local() {
        let t = theory(&["a", "b", "c"], &[(&["a", "b"], &["c"]), (&["c"], &["a"])]);
        let p = positive_closure(&t);
        assert!(is_semi_local(&p) && is_positive(&p));
        assert!(is_l_positive(&p));
    }

    #[test]
    fn empty_theory_has_everything() {
        let props = Properties::of(&theory(&["a"], &[]));
        assert!(props.flags().iter().all(|(_, v)| *v));
    }
}
