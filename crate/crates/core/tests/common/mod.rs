//! Brute-force twins of the library's checkers, quantifying over every set
//! combination instead of working on generator bases. Shared by the
//! integration test targets.

#![allow(dead_code)]

use std::path::PathBuf;

use collarg::bits::maximal_sets;
use collarg::gen::argument_names;
use collarg::{ArgumentSet, AttackPair, AttackRelation, BitSet, PStablePair, Program, Theory};

pub fn subsets(n: usize) -> impl Iterator<Item = BitSet> + Clone {
    BitSet::full(n).subsets()
}

/// Maximal elements of `⟨source⟩` by scanning every candidate.
pub fn maximal_allowable(t: &impl AttackRelation, source: ArgumentSet) -> Vec<ArgumentSet> {
    let allowable: Vec<BitSet> = subsets(t.universe_size())
        .filter(|d| !t.attacks(source, *d))
        .collect();
    maximal_sets(&allowable)
}

/// Stable by definition: a maximal element of `⟨Γ⟩`.
pub fn stable_by_definition(t: &impl AttackRelation, set: ArgumentSet) -> bool {
    maximal_allowable(t, set).contains(&set)
}

pub fn stable_sets_by_definition(t: &impl AttackRelation) -> Vec<ArgumentSet> {
    subsets(t.universe_size())
        .filter(|s| stable_by_definition(t, *s))
        .collect::<Vec<_>>()
        .sorted()
}

/// P-stable by definition: each side maximal in the other's allowable sets.
pub fn p_stable_by_definition(t: &impl AttackRelation, pair: &PStablePair) -> bool {
    pair.lower.is_subset(pair.upper)
        && maximal_allowable(t, pair.upper).contains(&pair.lower)
        && maximal_allowable(t, pair.lower).contains(&pair.upper)
}

pub fn p_stable_pairs_by_definition(t: &impl AttackRelation) -> Vec<PStablePair> {
    let n = t.universe_size();
    let mut out = Vec::new();
    for upper in subsets(n) {
        for lower in upper.subsets() {
            let pair = PStablePair { lower, upper };
            if p_stable_by_definition(t, &pair) {
                out.push(pair);
            }
        }
    }
    out.sort();
    out
}

/// Admissibility with the counterattack condition checked against every
/// possible attacker.
pub fn admissible_naive(t: &Theory, set: ArgumentSet, kind: collarg::AdmissibilityKind) -> bool {
    use collarg::AdmissibilityKind::*;
    let attack = |g: BitSet, d: BitSet| match kind {
        Plain => t.attacks(g, d),
        Positive => t.attacks_positively(g, d),
        Negative => t.attacks_negatively(g, d),
    };
    t.is_conflict_free(set) && subsets(t.len()).all(|d| !attack(d, set) || attack(set, d))
}

pub fn is_affirmative_naive(t: &Theory) -> bool {
    subsets(t.len()).all(|g| !t.attacks(g, BitSet::EMPTY))
}

pub fn is_local_naive(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| {
        subsets(n).all(|d| {
            subsets(n).all(|d2| !t.attacks(g, d | d2) || t.attacks(g, d) || t.attacks(g, d2))
        })
    })
}

pub fn is_semi_local_naive(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| {
        subsets(n).all(|d| {
            subsets(n).all(|f| !t.attacks(g, d | f) || t.attacks(g | d, f) || t.attacks(g | f, d))
        })
    })
}

pub fn is_positive_naive(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| subsets(n).all(|d| !t.attacks(g | d, d) || t.attacks(g, d)))
}

pub fn is_negative_naive(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| subsets(n).all(|d| !t.attacks(g, g | d) || t.attacks(g, d)))
}

/// Importation: `Γ ↝ Δ,Φ ⇒ Γ,Δ ↝ Φ`.
pub fn satisfies_importation(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| {
        subsets(n).all(|d| subsets(n).all(|f| !t.attacks(g, d | f) || t.attacks(g | d, f)))
    })
}

/// Exportation: `Γ,Δ ↝ Φ ⇒ Γ ↝ Δ,Φ`.
pub fn satisfies_exportation(t: &Theory) -> bool {
    let n = t.len();
    subsets(n).all(|g| {
        subsets(n).all(|d| subsets(n).all(|f| !t.attacks(g | d, f) || t.attacks(g, d | f)))
    })
}

/// An attack relation stored extensionally as a table over all set pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table {
    n: usize,
    cells: Vec<bool>,
}

impl Table {
    pub fn of(t: &impl AttackRelation) -> Table {
        let n = t.universe_size();
        let mut cells = vec![false; 1 << (2 * n)];
        for g in subsets(n) {
            for d in subsets(n) {
                cells[Self::index(n, g, d)] = t.attacks(g, d);
            }
        }
        Table { n, cells }
    }

    fn index(n: usize, g: BitSet, d: BitSet) -> usize {
        ((g.bits() as usize) << n) | d.bits() as usize
    }

    pub fn get(&self, g: BitSet, d: BitSet) -> bool {
        self.cells[Self::index(self.n, g, d)]
    }

    fn set(&mut self, g: BitSet, d: BitSet) -> bool {
        let i = Self::index(self.n, g, d);
        let was = self.cells[i];
        self.cells[i] = true;
        !was
    }

    /// Closes the table under monotonicity and a transfer rule
    /// `(g, d) ↦ rule(g, d)` until nothing changes.
    pub fn close_under(&mut self, rule: impl Fn(BitSet, BitSet) -> Vec<(BitSet, BitSet)>) {
        let n = self.n;
        loop {
            let mut changed = false;
            for g in subsets(n) {
                for d in subsets(n) {
                    if !self.get(g, d) {
                        continue;
                    }
                    for i in 0..n {
                        changed |= self.set(g.with(i), d);
                        changed |= self.set(g, d.with(i));
                    }
                    for (g2, d2) in rule(g, d) {
                        changed |= self.set(g2, d2);
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }
}

/// Least relation containing `t`, closed under monotonicity and Importation.
pub fn importation_fixpoint(t: &Theory) -> Table {
    let mut table = Table::of(t);
    table.close_under(|g, x| x.subsets().map(|d| (g | d, x - d)).collect());
    table
}

/// Least relation containing `t`, closed under monotonicity and Exportation.
pub fn exportation_fixpoint(t: &Theory) -> Table {
    let mut table = Table::of(t);
    table.close_under(|x, f| x.subsets().map(|d| (x - d, d | f)).collect());
    table
}

/// Every normalized theory over `n` arguments, one per antichain of
/// generator pairs. Feasible for `n ≤ 2` (6 and 168 theories).
pub fn all_theories(n: usize) -> Vec<Theory> {
    assert!(
        n <= 2,
        "the number of theories explodes beyond two arguments"
    );
    let pairs: Vec<AttackPair> = subsets(n)
        .flat_map(|s| subsets(n).map(move |t| AttackPair::new(s, t)))
        .collect();
    let mut out: Vec<Theory> = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: Vec<AttackPair> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let antichain = chosen
            .iter()
            .all(|p| !chosen.iter().any(|q| q != p && q.subsumes(p)));
        if antichain {
            out.push(Theory::new(argument_names(n), chosen).unwrap());
        }
    }
    out
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

/// The fixed program corpus, as `(file name, program)`.
pub fn corpus() -> Vec<(String, Program)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "dlp"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path).unwrap();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let program = text.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, program)
        })
        .collect()
}

pub trait Sorted {
    fn sorted(self) -> Self;
}

impl<T: Ord> Sorted for Vec<T> {
    fn sorted(mut self) -> Self {
        self.sort();
        self
    }
}
