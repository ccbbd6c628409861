//! Exhaustive (or, for very large tables, seeded-sample) verification of the
//! gyrogroup axioms against a [`FiniteGyrogroup`].
//!
//! Every check reports the lexicographically smallest failing tuple it
//! examined, so reports are reproducible and independent of thread count.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gyrogroup::FiniteGyrogroup;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    LeftIdentity,
    LeftInverse,
    GyrAutomorphism,
    LeftGyroassociativity,
    LeftLoopProperty,
    GyratorIdentity,
    Gyrocommutativity,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::LeftIdentity,
        Axiom::LeftInverse,
        Axiom::GyrAutomorphism,
        Axiom::LeftGyroassociativity,
        Axiom::LeftLoopProperty,
        Axiom::GyratorIdentity,
        Axiom::Gyrocommutativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::LeftIdentity => "left_identity",
            Axiom::LeftInverse => "left_inverse",
            Axiom::GyrAutomorphism => "gyr_automorphism",
            Axiom::LeftGyroassociativity => "left_gyroassociativity",
            Axiom::LeftLoopProperty => "left_loop_property",
            Axiom::GyratorIdentity => "gyrator_identity",
            Axiom::Gyrocommutativity => "gyrocommutativity",
        }
    }

    /// What the witness tuple of a failure means.
    pub fn witness_shape(self) -> &'static str {
        match self {
            Axiom::LeftIdentity => "(x): 0 ⊕ x != x",
            Axiom::LeftInverse => "(a): no b with b ⊕ a = 0",
            Axiom::GyrAutomorphism => "(a, b, x, y): gyr[a,b](x ⊕ y) != gyr[a,b]x ⊕ gyr[a,b]y",
            Axiom::LeftGyroassociativity => "(a, b, c): a ⊕ (b ⊕ c) != (a ⊕ b) ⊕ gyr[a,b]c",
            Axiom::LeftLoopProperty => "(a, b): gyr[a,b] != gyr[a ⊕ b, b]",
            Axiom::GyratorIdentity => {
                "(a, b, c): gyr[a,b]c != ⊖(a ⊕ b) ⊕ (a ⊕ (b ⊕ c)), or (x) when ⊖x is undefined"
            }
            Axiom::Gyrocommutativity => "(a, b): a ⊕ b != gyr[a,b](b ⊕ a)",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AxiomStatus {
    Pass,
    Fail { witness: Vec<usize> },
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomStatus::Pass)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            AxiomStatus::Pass => None,
            AxiomStatus::Fail { witness } => Some(witness),
        }
    }

    fn from_witness<const K: usize>(w: Option<[usize; K]>) -> Self {
        match w {
            None => AxiomStatus::Pass,
            Some(w) => AxiomStatus::Fail {
                witness: w.to_vec(),
            },
        }
    }
}

/// How the triple-quantified checks were run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coverage {
    Exhaustive,
    /// `samples` pseudo-random triples drawn from a ChaCha8 stream seeded
    /// with `seed`.
    Sampled {
        seed: u64,
        samples: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest order for which triple checks scan all `N^3` triples.
    pub exhaustive_limit: usize,
    pub samples: u64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_limit: 512,
            samples: 10_000_000,
            seed: 0x6779_7232,
        }
    }
}

impl VerifyOptions {
    fn coverage(&self, order: usize) -> Coverage {
        if order <= self.exhaustive_limit {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled {
                seed: self.seed,
                samples: self.samples,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub axiom: Axiom,
    #[serde(flatten)]
    pub status: AxiomStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub order: usize,
    pub coverage: Coverage,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn status(&self, axiom: Axiom) -> &AxiomStatus {
        &self
            .checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
            .status
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status.passed())
    }

    /// The gyrogroup axioms proper; gyrocommutativity and the gyrator
    /// identity are not required.
    pub fn is_gyrogroup(&self) -> bool {
        [
            Axiom::LeftIdentity,
            Axiom::LeftInverse,
            Axiom::GyrAutomorphism,
            Axiom::LeftGyroassociativity,
            Axiom::LeftLoopProperty,
        ]
        .into_iter()
        .all(|a| self.status(a).passed())
    }

    pub fn is_gyrocommutative(&self) -> bool {
        self.is_gyrogroup() && self.status(Axiom::Gyrocommutativity).passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.status.passed())
    }
}

/// Runs every check. Nothing short-circuits.
pub fn verify(g: &FiniteGyrogroup) -> VerificationReport {
    verify_with(g, &VerifyOptions::default())
}

pub fn verify_with(g: &FiniteGyrogroup, opts: &VerifyOptions) -> VerificationReport {
    let coverage = opts.coverage(g.order());
    let checks = Axiom::ALL
        .into_iter()
        .map(|axiom| {
            let status = match axiom {
                Axiom::LeftIdentity => check_left_identity(g),
                Axiom::LeftInverse => check_left_inverses(g),
                Axiom::GyrAutomorphism => check_gyr_automorphisms(g),
                Axiom::LeftGyroassociativity => check_left_gyroassociativity_with(g, opts),
                Axiom::LeftLoopProperty => check_loop_property(g),
                Axiom::GyratorIdentity => check_gyrator_identity_with(g, opts),
                Axiom::Gyrocommutativity => check_gyrocommutative(g),
            };
            CheckResult { axiom, status }
        })
        .collect();
    VerificationReport {
        order: g.order(),
        coverage,
        checks,
    }
}

pub fn check_left_identity(g: &FiniteGyrogroup) -> AxiomStatus {
    AxiomStatus::from_witness((0..g.order()).find(|&x| g.op(0, x) != x).map(|x| [x]))
}

pub fn check_left_inverses(g: &FiniteGyrogroup) -> AxiomStatus {
    AxiomStatus::from_witness(
        g.inverse_map()
            .iter()
            .position(Option::is_none)
            .map(|a| [a]),
    )
}

/// The unique `b` with `b ⊕ x = 0`.
pub fn inverse_of(g: &FiniteGyrogroup, x: usize) -> Result<usize> {
    g.check_element(x)?;
    let mut found = (0..g.order()).filter(|&b| g.op(b, x) == 0);
    match (found.next(), found.next()) {
        (Some(b), None) => Ok(b),
        (None, _) => Err(Error::NoInverse(x)),
        (Some(b1), Some(b2)) => Err(Error::Inconsistent(format!(
            "{x} has two left inverses, {b1} and {b2}"
        ))),
    }
}

/// First pair `(x, y)` with `p(x ⊕ y) != p(x) ⊕ p(y)`.
pub fn automorphism_violation(g: &FiniteGyrogroup, p: &Permutation) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).into_par_iter().find_map_first(|x| {
        let px = p.apply(x);
        (0..n)
            .find(|&y| p.apply(g.op(x, y)) != g.op(px, p.apply(y)))
            .map(|y| (x, y))
    })
}

pub fn is_automorphism(g: &FiniteGyrogroup, p: &Permutation) -> bool {
    p.degree() == g.order() && automorphism_violation(g, p).is_none()
}

/// Each distinct gyration is checked once; a failure is reported against the
/// first `(a, b)` (row-major) whose gyration it is.
pub fn check_gyr_automorphisms(g: &FiniteGyrogroup) -> AxiomStatus {
    let n = g.order();
    let mut first_pair = vec![None; g.perms().len()];
    for a in 0..n {
        for b in 0..n {
            first_pair[g.gyr_index(a, b)].get_or_insert((a, b));
        }
    }
    // perms are ordered by first appearance, so index order is pair order
    let w = g.perms().iter().enumerate().find_map(|(k, p)| {
        let (a, b) = first_pair[k]?;
        automorphism_violation(g, p).map(|(x, y)| [a, b, x, y])
    });
    AxiomStatus::from_witness(w)
}

pub fn check_left_gyroassociativity(g: &FiniteGyrogroup) -> AxiomStatus {
    check_left_gyroassociativity_with(g, &VerifyOptions::default())
}

pub fn check_left_gyroassociativity_with(g: &FiniteGyrogroup, opts: &VerifyOptions) -> AxiomStatus {
    let holds =
        |a: usize, b: usize, c: usize| g.op(a, g.op(b, c)) == g.op(g.op(a, b), g.gyrate(a, b, c));
    AxiomStatus::from_witness(scan_triples(g.order(), opts, holds))
}

pub fn check_loop_property(g: &FiniteGyrogroup) -> AxiomStatus {
    let n = g.order();
    AxiomStatus::from_witness(scan_pairs(n, |a, b| {
        g.gyr_index(a, b) == g.gyr_index(g.op(a, b), b)
    }))
}

pub fn check_gyrator_identity(g: &FiniteGyrogroup) -> AxiomStatus {
    check_gyrator_identity_with(g, &VerifyOptions::default())
}

pub fn check_gyrator_identity_with(g: &FiniteGyrogroup, opts: &VerifyOptions) -> AxiomStatus {
    let inv = g.inverse_map();
    if let Some(x) = inv.iter().position(Option::is_none) {
        return AxiomStatus::Fail { witness: vec![x] };
    }
    let inv: Vec<usize> = inv.into_iter().flatten().collect();
    let holds = |a: usize, b: usize, c: usize| {
        g.gyrate(a, b, c) == g.op(inv[g.op(a, b)], g.op(a, g.op(b, c)))
    };
    AxiomStatus::from_witness(scan_triples(g.order(), opts, holds))
}

pub fn check_gyrocommutative(g: &FiniteGyrogroup) -> AxiomStatus {
    AxiomStatus::from_witness(scan_pairs(g.order(), |a, b| {
        g.op(a, b) == g.gyrate(a, b, g.op(b, a))
    }))
}

/// Right identity `x ⊕ 0 = x`; a consequence of the left axioms.
pub fn check_right_identity(g: &FiniteGyrogroup) -> AxiomStatus {
    AxiomStatus::from_witness((0..g.order()).find(|&x| g.op(x, 0) != x).map(|x| [x]))
}

/// `x ⊕ (⊖x) = 0`, with `⊖x` the left inverse.
pub fn check_right_inverse(g: &FiniteGyrogroup) -> AxiomStatus {
    let w = g
        .inverse_map()
        .iter()
        .enumerate()
        .find(|&(x, inv)| inv.is_none_or(|i| g.op(x, i) != 0))
        .map(|(x, _)| [x]);
    AxiomStatus::from_witness(w)
}

/// Right loop property `gyr[a, b] = gyr[a, b ⊕ a]`.
pub fn check_right_loop_property(g: &FiniteGyrogroup) -> AxiomStatus {
    AxiomStatus::from_witness(scan_pairs(g.order(), |a, b| {
        g.gyr_index(a, b) == g.gyr_index(a, g.op(b, a))
    }))
}

fn scan_pairs(n: usize, holds: impl Fn(usize, usize) -> bool + Sync) -> Option<[usize; 2]> {
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..n).find(|&b| !holds(a, b)).map(|b| [a, b]))
}

const SAMPLE_CHUNK: u64 = 1 << 16;

fn scan_triples(
    n: usize,
    opts: &VerifyOptions,
    holds: impl Fn(usize, usize, usize) -> bool + Sync,
) -> Option<[usize; 3]> {
    match opts.coverage(n) {
        Coverage::Exhaustive => (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| (0..n).find(|&c| !holds(a, b, c)).map(|c| [a, b, c]))
        }),
        Coverage::Sampled { seed, samples } => {
            let chunks = samples.div_ceil(SAMPLE_CHUNK);
            (0..chunks)
                .into_par_iter()
                .filter_map(|chunk| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(chunk);
                    let len = SAMPLE_CHUNK.min(samples - chunk * SAMPLE_CHUNK);
                    (0..len)
                        .map(|_| {
                            [
                                rng.gen_range(0..n),
                                rng.gen_range(0..n),
                                rng.gen_range(0..n),
                            ]
                        })
                        .filter(|&[a, b, c]| !holds(a, b, c))
                        .min()
                })
                .min()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn cyclic_group_passes_everything() {
        let r = verify(&groups::cyclic(8));
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.coverage, Coverage::Exhaustive);
    }

    #[test]
    fn dihedral_group_is_not_gyrocommutative() {
        let r = verify(&groups::dihedral(4));
        assert!(r.is_gyrogroup());
        assert!(!r.status(Axiom::Gyrocommutativity).passed());
        let w = r.status(Axiom::Gyrocommutativity).witness().unwrap();
        let g = groups::dihedral(4);
        assert_ne!(g.op(w[0], w[1]), g.op(w[1], w[0]));
    }

    #[test]
    fn broken_left_identity() {
        let g = groups::cyclic(4).with_cayley_entry(0, 1, 2).unwrap();
        assert_eq!(
            check_left_identity(&g),
            AxiomStatus::Fail { witness: vec![1] }
        );
    }

    #[test]
    fn missing_inverse() {
        // column 1 of Z4 holds 0 only in row 3; overwrite it
        let g = groups::cyclic(4).with_cayley_entry(3, 1, 1).unwrap();
        assert_eq!(
            check_left_inverses(&g),
            AxiomStatus::Fail { witness: vec![1] }
        );
        assert!(matches!(inverse_of(&g, 1), Err(Error::NoInverse(1))));
        assert_eq!(
            check_gyrator_identity(&g),
            AxiomStatus::Fail { witness: vec![1] }
        );
        assert_eq!(inverse_of(&g, 0).unwrap(), 0);
    }

    #[test]
    fn sampled_mode_is_deterministic_and_finds_failures() {
        let g = groups::dihedral(4)
            .with_gyration(0, 0, Permutation::from_cycles(8, &[&[1, 2]]).unwrap())
            .unwrap();
        let opts = VerifyOptions {
            exhaustive_limit: 4,
            samples: 200_000,
            seed: 7,
        };
        let r1 = verify_with(&g, &opts);
        let r2 = verify_with(&g, &opts);
        assert_eq!(r1, r2);
        assert_eq!(
            r1.coverage,
            Coverage::Sampled {
                seed: 7,
                samples: 200_000
            }
        );
        let w = r1.status(Axiom::LeftGyroassociativity).witness().unwrap();
        let (a, b, c) = (w[0], w[1], w[2]);
        assert_ne!(g.op(a, g.op(b, c)), g.op(g.op(a, b), g.gyrate(a, b, c)));
        // exhaustive scan finds the smallest failing triple, which the
        // sample cannot beat
        let exhaustive = check_left_gyroassociativity(&g);
        assert!(exhaustive.witness().unwrap() <= w);
    }
}
