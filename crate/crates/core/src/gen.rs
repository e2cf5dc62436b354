//! Seeded random theories and programs for randomized cross-checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::program::{Program, Rule};
use crate::theory::{AttackPair, Theory};

/// The generator used everywhere a `--seed` is accepted.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default argument names `a, b, .., z, x26, x27, ..`.
pub fn argument_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match u8::try_from(i) {
            Ok(i) if i < 26 => char::from(b'a' + i).to_string(),
            _ => format!("x{i}"),
        })
        .collect()
}

/// Default atom names `p, q, r, s, t, u, v, w, p8, p9, ..`.
pub fn atom_names(n: usize) -> Vec<String> {
    const NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];
    (0..n)
        .map(|i| {
            NAMES
                .get(i)
                .map_or_else(|| format!("p{i}"), |s| s.to_string())
        })
        .collect()
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, density: f64) -> BitSet {
    (0..n).filter(|_| rng.gen_bool(density)).collect()
}

/// Shape parameters for random theories.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryShape {
    pub max_args: usize,
    pub max_pairs: usize,
    /// Probability that an argument joins a side of a generator.
    pub density: f64,
}

impl Default for TheoryShape {
    fn default() -> Self {
        TheoryShape {
            max_args: 6,
            max_pairs: 6,
            density: 0.3,
        }
    }
}

impl TheoryShape {
    /// Universe size uniform in `1..=max_args`, generator count uniform in
    /// `0..=max_pairs`, each side an independent random subset.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Theory {
        let n = rng.gen_range(1..=self.max_args.max(1));
        self.sample_with_size(rng, n)
    }

    pub fn sample_with_size<R: Rng>(&self, rng: &mut R, n: usize) -> Theory {
        let m = rng.gen_range(0..=self.max_pairs);
        let pairs: Vec<AttackPair> = (0..m)
            .map(|_| {
                AttackPair::new(
                    random_subset(rng, n, self.density),
                    random_subset(rng, n, self.density),
                )
            })
            .collect();
        Theory::new(argument_names(n), pairs).expect("generated theory is well-formed")
    }

    /// A normal theory: every generator targets a single argument.
    pub fn sample_normal<R: Rng>(&self, rng: &mut R) -> Theory {
        let n = rng.gen_range(1..=self.max_args.max(1));
        let m = rng.gen_range(0..=self.max_pairs);
        let pairs: Vec<AttackPair> = (0..m)
            .map(|_| {
                let target = BitSet::singleton(rng.gen_range(0..n));
                AttackPair::new(random_subset(rng, n, self.density), target)
            })
            .collect();
        Theory::new(argument_names(n), pairs).expect("generated theory is well-formed")
    }
}

/// Shape parameters for random programs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgramShape {
    pub max_atoms: usize,
    pub max_rules: usize,
    /// Allow heads with more than one atom.
    pub disjunctive: bool,
    /// Allow empty heads.
    pub constraints: bool,
}

impl Default for ProgramShape {
    fn default() -> Self {
        ProgramShape {
            max_atoms: 5,
            max_rules: 6,
            disjunctive: true,
            constraints: true,
        }
    }
}

impl ProgramShape {
    /// Normal programs: one head atom per rule, no constraints.
    pub fn normal(max_atoms: usize, max_rules: usize) -> Self {
        ProgramShape {
            max_atoms,
            max_rules,
            disjunctive: false,
            constraints: false,
        }
    }

    /// Atom and rule counts are uniform; each atom independently lands in
    /// the positive body, the negative body, or neither, and heads are drawn
    /// by size then position.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Program {
        let n = rng.gen_range(1..=self.max_atoms.max(1));
        let m = rng.gen_range(0..=self.max_rules);
        let rules = (0..m).map(|_| self.sample_rule(rng, n)).collect();
        Program::new(atom_names(n), rules).expect("generated program is well-formed")
    }

    fn sample_rule<R: Rng>(&self, rng: &mut R, n: usize) -> Rule {
        let min_head = usize::from(!self.constraints);
        let max_head = if self.disjunctive { 2.min(n) } else { 1 };
        let head_size = rng.gen_range(min_head..=max_head.max(min_head));
        let mut head = BitSet::EMPTY;
        while head.len() < head_size {
            head.insert(rng.gen_range(0..n));
        }
        let mut pos = BitSet::EMPTY;
        let mut neg = BitSet::EMPTY;
        for a in 0..n {
            match rng.gen_range(0..6) {
                0 => pos.insert(a),
                1 => neg.insert(a),
                _ => {}
            }
        }
        // An empty constraint makes every program inconsistent; give it a body.
        if head.is_empty() && pos.is_empty() && neg.is_empty() {
            neg.insert(rng.gen_range(0..n));
        }
        Rule::new(head, pos, neg)
    }
}
