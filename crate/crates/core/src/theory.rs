//! Collective argumentation theories.
//!
//! A theory is a finite universe of named arguments plus a finite *attack
//! base*: a list of generator pairs `(A, B)`. The attack relation between
//! argument sets is derived from the base by
//!
//! ```text
//! attacks(Γ, Δ)  ⇔  some generator (A, B) has A ⊆ Γ and B ⊆ Δ
//! ```
//!
//! so monotonicity in both positions holds by construction and nothing
//! exponential is ever stored. Bases are kept subsumption-normalized (no
//! generator is dominated by another one), which makes the normalized base
//! a canonical name for the derived relation.

use std::fmt;

use crate::bits::{minimal_sets, sort_canonical, ArgumentSet, BitSet, MAX_UNIVERSE};
use crate::error::{Error, Result};

/// An argument of a theory: an index into the universe plus its name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Argument {
    pub id: usize,
    pub name: String,
}

/// One generator of an attack relation: `source` attacks `target`.
///
/// Either side may be empty. An empty target encodes an attack on `∅`,
/// which makes the theory non-affirmative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttackPair {
    pub source: ArgumentSet,
    pub target: ArgumentSet,
}

impl AttackPair {
    pub fn new(source: impl Into<ArgumentSet>, target: impl Into<ArgumentSet>) -> Self {
        AttackPair {
            source: source.into(),
            target: target.into(),
        }
    }

    /// True when every attack generated by `other` is also generated by `self`.
    pub fn subsumes(&self, other: &AttackPair) -> bool {
        self.source.is_subset(other.source) && self.target.is_subset(other.target)
    }

    /// True when this generator alone yields `source ↝ target`.
    pub fn fires(&self, source: ArgumentSet, target: ArgumentSet) -> bool {
        self.source.is_subset(source) && self.target.is_subset(target)
    }
}

/// Removes duplicate and dominated generators and sorts the rest.
///
/// The derived relation is unchanged.
pub fn normalize_base(pairs: impl IntoIterator<Item = AttackPair>) -> Vec<AttackPair> {
    let mut pairs: Vec<AttackPair> = pairs.into_iter().collect();
    sort_canonical(&mut pairs);
    pairs
        .iter()
        .filter(|p| !pairs.iter().any(|q| q != *p && q.subsumes(p)))
        .copied()
        .collect()
}

/// Anything that answers set-to-set attack queries over a fixed universe.
///
/// Implemented by the materialized [`Theory`] and by the lazily evaluated
/// [`crate::program::LazyTheory`].
pub trait AttackRelation {
    fn universe_size(&self) -> usize;

    fn attacks(&self, source: ArgumentSet, target: ArgumentSet) -> bool;

    fn universe(&self) -> ArgumentSet {
        BitSet::full(self.universe_size())
    }

    /// `Γ ↝⁺ Δ`: `Γ` attacks `Δ` after provisionally borrowing `Δ`.
    fn attacks_positively(&self, source: ArgumentSet, target: ArgumentSet) -> bool {
        self.attacks(source | target, target)
    }

    /// `Γ ↝⁻ Δ`: `Γ` refutes the addition of `Δ` to itself.
    fn attacks_negatively(&self, source: ArgumentSet, target: ArgumentSet) -> bool {
        self.attacks(source, source | target)
    }

    fn is_conflict_free(&self, set: ArgumentSet) -> bool {
        !self.attacks(set, set)
    }
}

/// A collective argumentation theory `⟨𝒜, ↝⟩` over a finite universe.
///
/// Immutable after construction. Two theories over the same universe have
/// the same derived relation exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Theory {
    arguments: Vec<Argument>,
    base: Vec<AttackPair>,
}

impl Theory {
    /// Builds a theory from argument names and raw generators.
    ///
    /// Fails on duplicate names, on universes larger than 64 arguments, and
    /// on generators mentioning indices outside the universe.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        generators: impl IntoIterator<Item = AttackPair>,
    ) -> Result<Theory> {
        let arguments = build_arguments(names)?;
        let size = arguments.len();
        let universe = BitSet::full(size);
        let generators: Vec<AttackPair> = generators.into_iter().collect();
        for pair in &generators {
            let stray = (pair.source | pair.target) - universe;
            if let Some(index) = stray.first() {
                return Err(Error::OutOfUniverse { index, size });
            }
        }
        Ok(Theory {
            arguments,
            base: normalize_base(generators),
        })
    }

    /// Builds a theory from names, with generators given by argument names.
    ///
    /// ```
    /// use collarg::{AttackRelation, Theory};
    ///
    /// let t = Theory::from_named(["a", "b"], &[(&["a"], &["b"])]).unwrap();
    /// let (a, b) = (t.set(&["a"]).unwrap(), t.set(&["b"]).unwrap());
    /// assert!(t.attacks(a, b));
    /// assert!(!t.attacks(b, a));
    /// ```
    pub fn from_named<S: AsRef<str>>(
        names: impl IntoIterator<Item = S>,
        generators: &[(&[&str], &[&str])],
    ) -> Result<Theory> {
        let arguments = build_arguments(names.into_iter().map(|s| s.as_ref().to_string()))?;
        let shell = Theory {
            arguments,
            base: Vec::new(),
        };
        let mut pairs = Vec::with_capacity(generators.len());
        for (source, target) in generators {
            pairs.push(AttackPair::new(shell.set(source)?, shell.set(target)?));
        }
        Ok(shell.with_base(pairs))
    }

    /// Same universe, new generators (normalized). Indices must be valid.
    pub(crate) fn with_base(&self, generators: impl IntoIterator<Item = AttackPair>) -> Theory {
        Theory {
            arguments: self.arguments.clone(),
            base: normalize_base(generators),
        }
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    /// The normalized generator base, in canonical order.
    pub fn base(&self) -> &[AttackPair] {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.arguments.iter().position(|a| a.name == name)
    }

    pub fn name(&self, id: usize) -> &str {
        &self.arguments[id].name
    }

    /// Resolves a list of names to an argument set.
    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<ArgumentSet> {
        names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| Error::UnknownArgument(n.as_ref().to_string()))
            })
            .collect()
    }

    /// Member names of `set`, in universe order.
    pub fn names(&self, set: ArgumentSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Renders `set` as `{a, b}`.
    pub fn show(&self, set: ArgumentSet) -> String {
        format!("{{{}}}", self.names(set).join(", "))
    }

    /// True when every generator of `other` is derivable here, i.e. the
    /// relation of `other` is included in this one.
    pub fn includes(&self, other: &Theory) -> bool {
        other.base.iter().all(|p| self.attacks(p.source, p.target))
    }

    /// Mutual derivability of bases: both theories induce the same relation.
    pub fn same_relation(&self, other: &Theory) -> bool {
        self.len() == other.len() && self.includes(other) && other.includes(self)
    }

    /// The targets of all generators triggered by `source`.
    fn triggered_targets(&self, source: ArgumentSet) -> Vec<ArgumentSet> {
        self.base
            .iter()
            .filter(|p| p.source.is_subset(source))
            .map(|p| p.target)
            .collect()
    }

    /// The maximal elements of `⟨Γ⟩ = {Δ | Γ does not attack Δ}`.
    ///
    /// `Δ` escapes every triggered target `B` exactly when the complement of
    /// `Δ` hits every `B`, so the maximal allowable sets are the complements
    /// of the minimal hitting sets of the triggered target family. Returns
    /// an empty list when `Γ` attacks `∅`.
    pub fn maximal_allowable(&self, source: ArgumentSet) -> Vec<ArgumentSet> {
        let universe = self.universe();
        let mut out: Vec<ArgumentSet> = minimal_hitting_sets(&self.triggered_targets(source))
            .into_iter()
            .map(|h| universe - h)
            .collect();
        sort_canonical(&mut out);
        out
    }

    /// True when `set` is one of the maximal elements of `⟨source⟩`.
    pub fn is_maximal_allowable(&self, source: ArgumentSet, set: ArgumentSet) -> bool {
        !self.attacks(source, set)
            && self
                .universe()
                .difference(set)
                .iter()
                .all(|a| self.attacks(source, set.with(a)))
    }
}

impl AttackRelation for Theory {
    fn universe_size(&self) -> usize {
        self.arguments.len()
    }

    fn attacks(&self, source: ArgumentSet, target: ArgumentSet) -> bool {
        self.base.iter().any(|p| p.fires(source, target))
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn build_arguments<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Vec<Argument>> {
    let mut arguments: Vec<Argument> = Vec::new();
    for name in names {
        let name = name.into();
        if arguments.iter().any(|a| a.name == name) {
            return Err(Error::DuplicateName(name));
        }
        arguments.push(Argument {
            id: arguments.len(),
            name,
        });
    }
    if arguments.len() > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            size: arguments.len(),
            max: MAX_UNIVERSE,
        });
    }
    Ok(arguments)
}

/// Minimal hitting sets of a family (Berge's incremental construction).
///
/// No hitting set exists when the family contains `∅`; the empty family is
/// hit by `∅`.
pub fn minimal_hitting_sets(family: &[BitSet]) -> Vec<BitSet> {
    if family.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    let mut hitting = vec![BitSet::EMPTY];
    for edge in minimal_sets(family) {
        let mut next = Vec::with_capacity(hitting.len() * 2);
        for h in hitting {
            if h.intersects(edge) {
                next.push(h);
            } else {
                next.extend(edge.iter().map(|x| h.with(x)));
            }
        }
        hitting = minimal_sets(&next);
    }
    hitting
}
