//! The gyrogroups `G₂(n)` of order `2ⁿ`, built on `ℤ_{2ⁿ}` split into a
//! lower half `P(n) = {0, .., m-1}` and an upper half `H(n) = P(n) + m`,
//! `m = 2^(n-1)`.
//!
//! The operation adds residues mod `m` and picks the half of the result from
//! the halves and parities of the operands. Even elements of `H(n)` shift
//! odd partners by an extra `m/2`. There are exactly two gyrations: the
//! identity and the involution `A`, which adds `m/2` (mod `m`) to odd
//! elements and fixes even ones.

use std::fmt;

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gyrogroup::FiniteGyrogroup;
use crate::perm::Permutation;

/// Largest `n` accepted by [`build_g2`]: `N = 4096`, a 16.7M-entry table.
pub const DEFAULT_MAX_N: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicParams {
    n: u32,
    m: usize,
}

impl CyclicParams {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: u32, cap: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall(n));
        }
        if n > cap || n >= usize::BITS - 1 {
            return Err(Error::OrderTooLarge { n, cap });
        }
        Ok(CyclicParams { n, m: 1 << (n - 1) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `2^(n-1)`, the order of `P(n)`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `2ⁿ`.
    pub fn order(&self) -> usize {
        2 * self.m
    }

    /// `m/2`; even because `n >= 3`.
    pub fn half(&self) -> usize {
        self.m / 2
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                element: i,
                order: self.order(),
            })
        }
    }

    pub fn classify(&self, i: usize) -> Result<ParityClass> {
        self.check(i)?;
        Ok(self.classify_unchecked(i))
    }

    pub fn oplus(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.oplus_unchecked(i, j))
    }

    pub fn a_map(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        Ok(self.a_map_unchecked(i))
    }

    pub fn gyr_selector(&self, a: usize, b: usize) -> Result<Gyration> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.gyr_selector_unchecked(a, b))
    }

    pub fn residues(&self, i: usize, j: usize) -> Result<ResidueWitness> {
        self.check(i)?;
        self.check(j)?;
        Ok(ResidueWitness::new(self, i, j))
    }

    /// Closed-form inverse: `-x mod m` on `P(n)`, `(-t mod m) + m` for
    /// `x = t + m` in `H(n)`.
    pub fn inverse(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        let m = self.m;
        let neg = |t: usize| (m - t % m) % m;
        Ok(if x < m { neg(x) } else { neg(x - m) + m })
    }

    #[inline]
    fn classify_unchecked(&self, i: usize) -> ParityClass {
        match (i < self.m, i % 2 == 1) {
            (true, true) => ParityClass::OddP,
            (true, false) => ParityClass::EvenP,
            (false, true) => ParityClass::OddH,
            (false, false) => ParityClass::EvenH,
        }
    }

    #[inline]
    fn oplus_unchecked(&self, i: usize, j: usize) -> usize {
        use ParityClass::*;
        let ResidueWitness { t, s, .. } = ResidueWitness::new(self, i, j);
        let (ci, cj) = (self.classify_unchecked(i), self.classify_unchecked(j));
        match (ci, cj) {
            (EvenH, OddH) => s,
            (EvenH, OddP) => s + self.m,
            _ if ci.in_p() == cj.in_p() => t,
            _ => t + self.m,
        }
    }

    #[inline]
    fn a_map_unchecked(&self, i: usize) -> usize {
        let r = (i + self.half()) % self.m;
        match self.classify_unchecked(i) {
            ParityClass::OddP => r,
            ParityClass::OddH => r + self.m,
            ParityClass::EvenP | ParityClass::EvenH => i,
        }
    }

    /// `A` iff `(a, b)` lies in
    /// `[O_P × H(n)] ∪ [O_H × (O_P ∪ E_H)] ∪ [E_H × (O_P ∪ O_H)]`.
    #[inline]
    #[allow(clippy::match_like_matches_macro)] // one arm per piece of M
    fn gyr_selector_unchecked(&self, a: usize, b: usize) -> Gyration {
        use ParityClass::*;
        let in_m = match (self.classify_unchecked(a), self.classify_unchecked(b)) {
            (OddP, OddH | EvenH) => true,
            (OddH, OddP | EvenH) => true,
            (EvenH, OddP | OddH) => true,
            _ => false,
        };
        if in_m {
            Gyration::A
        } else {
            Gyration::Identity
        }
    }

    /// `A` as a permutation of `0..N`.
    pub fn a_permutation(&self) -> Permutation {
        Permutation::from_images((0..self.order()).map(|i| self.a_map_unchecked(i)).collect())
            .expect("A is a bijection")
    }
}

/// Which quarter of `ℤ_{2ⁿ}` an element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    /// Odd, in `P(n)`.
    OddP,
    /// Even, in `P(n)`.
    EvenP,
    /// Odd, in `H(n)`.
    OddH,
    /// Even, in `H(n)`.
    EvenH,
}

impl ParityClass {
    pub fn in_p(self) -> bool {
        matches!(self, ParityClass::OddP | ParityClass::EvenP)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, ParityClass::OddP | ParityClass::OddH)
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::OddP => "O_P",
            ParityClass::EvenP => "E_P",
            ParityClass::OddH => "O_H",
            ParityClass::EvenH => "E_H",
        })
    }
}

/// The residues mod `m` that the operation and `A` are built from, each
/// reduced into `0..m`: `t ≡ i + j`, `s ≡ i + j + m/2`, `r ≡ i + m/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueWitness {
    pub t: usize,
    pub s: usize,
    pub r: usize,
}

impl ResidueWitness {
    #[inline]
    fn new(p: &CyclicParams, i: usize, j: usize) -> Self {
        let m = p.m;
        ResidueWitness {
            t: (i + j) % m,
            s: (i + j + p.half()) % m,
            r: (i + p.half()) % m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gyration {
    Identity,
    A,
}

/// `G₂(n)` in compact form: the Cayley table plus one bit per pair saying
/// whether the gyration is `A`.
#[derive(Clone, Debug)]
pub struct G2Tables {
    params: CyclicParams,
    cayley: Vec<u32>,
    gyr_is_a: BitVec,
}

impl G2Tables {
    pub fn build(params: CyclicParams) -> Self {
        let n = params.order();
        let rows: Vec<(Vec<u32>, BitVec)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let cayley = (0..n)
                    .map(|j| params.oplus_unchecked(i, j) as u32)
                    .collect();
                let bits = (0..n)
                    .map(|j| params.gyr_selector_unchecked(i, j) == Gyration::A)
                    .collect();
                (cayley, bits)
            })
            .collect();
        let mut cayley = Vec::with_capacity(n * n);
        let mut gyr_is_a = BitVec::with_capacity(n * n);
        for (row, bits) in rows {
            cayley.extend(row);
            gyr_is_a.extend_from_bitslice(&bits);
        }
        G2Tables {
            params,
            cayley,
            gyr_is_a,
        }
    }

    pub fn params(&self) -> CyclicParams {
        self.params
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.params.order() + j] as usize
    }

    pub fn gyration(&self, a: usize, b: usize) -> Gyration {
        if self.gyr_is_a[a * self.params.order() + b] {
            Gyration::A
        } else {
            Gyration::Identity
        }
    }

    /// Widens the gyration bits to indices into `[I, A]`.
    pub fn into_gyrogroup(self) -> FiniteGyrogroup {
        let n = self.params.order();
        let gyr = self.gyr_is_a.iter().map(|bit| u32::from(*bit)).collect();
        let perms = vec![Permutation::identity(n), self.params.a_permutation()];
        FiniteGyrogroup::from_flat(n, self.cayley, gyr, perms)
            .expect("G₂(n) tables are well formed")
    }
}

/// `G₂(n)` with the default cap on `n`.
pub fn build_g2(n: u32) -> Result<FiniteGyrogroup> {
    Ok(G2Tables::build(CyclicParams::new(n)?).into_gyrogroup())
}

pub fn build_g2_with_cap(n: u32, cap: u32) -> Result<FiniteGyrogroup> {
    Ok(G2Tables::build(CyclicParams::with_cap(n, cap)?).into_gyrogroup())
}
