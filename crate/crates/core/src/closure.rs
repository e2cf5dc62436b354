//! Negative and positive closures.
//!
//! The negative closure is the relation `↝⁻` viewed as a theory: its
//! generators move any part of a target into the source,
//! `(A ∪ S, B ∖ S)` for `S ⊆ B`. The positive closure is `↝⁺`, moving any
//! part of a source into the target, `(A ∖ S, B ∪ S)` for `S ⊆ A`.
//!
//! One transfer pass per generator is enough: transferring `S₁` and then
//! `S₂` yields the same pair as transferring `S₁ ∪ S₂` at once, so the
//! result already satisfies Importation (resp. Exportation).

use crate::theory::{AttackPair, Theory};

/// Least negative theory containing `theory`.
pub fn negative_closure(theory: &Theory) -> Theory {
    theory.with_base(theory.base().iter().flat_map(|p| {
        p.target
            .subsets()
            .map(move |s| AttackPair::new(p.source | s, p.target - s))
    }))
}

/// Least positive theory containing `theory`.
pub fn positive_closure(theory: &Theory) -> Theory {
    theory.with_base(theory.base().iter().flat_map(|p| {
        p.source
            .subsets()
            .map(move |s| AttackPair::new(p.source - s, p.target | s))
    }))
}
