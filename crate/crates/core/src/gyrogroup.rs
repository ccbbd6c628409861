//! Table-backed finite gyrogroups.
//!
//! Elements are the integers `0..N`. The operation is a full Cayley table and
//! the gyrations are a second `N x N` table of indices into a deduplicated
//! list of permutations, so two gyrations are equal exactly when their
//! indices are.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGyrogroup {
    order: usize,
    cayley: Vec<u32>,
    gyr: Vec<u32>,
    perms: Vec<Permutation>,
}

/// A repeated entry in a row or column of the Cayley table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatinViolation {
    /// `a ⊕ b1 = a ⊕ b2` with `b1 < b2`.
    Row { a: usize, b1: usize, b2: usize },
    /// `a1 ⊕ b = a2 ⊕ b` with `a1 < a2`.
    Column { b: usize, a1: usize, a2: usize },
}

impl FiniteGyrogroup {
    /// Builds a gyrogroup candidate from its tables, checking only shape:
    /// dimensions, element ranges, permutation degrees and gyration indices.
    ///
    /// The result may violate any axiom, including the latin-square property
    /// and the position of the identity; use [`FiniteGyrogroup::new`] for
    /// the checked constructor.
    pub fn from_raw_tables(
        cayley: Vec<Vec<usize>>,
        gyr: Vec<Vec<usize>>,
        perms: Vec<Permutation>,
    ) -> Result<Self> {
        let order = cayley.len();
        if order == 0 {
            return Err(Error::Malformed(
                "a gyrogroup needs at least one element".into(),
            ));
        }
        if gyr.len() != order {
            return Err(Error::Malformed(format!(
                "gyration table has {} rows, expected {order}",
                gyr.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in cayley.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Malformed(format!(
                    "Cayley row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::OutOfRange { element: x, order });
                }
                flat.push(x as u32);
            }
        }
        let mut gyr_flat = Vec::with_capacity(order * order);
        for (a, row) in gyr.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Malformed(format!(
                    "gyration row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &k in row {
                if k >= perms.len() {
                    return Err(Error::Malformed(format!(
                        "gyration row {a} references permutation {k}, only {} given",
                        perms.len()
                    )));
                }
                gyr_flat.push(k as u32);
            }
        }
        Self::from_flat(order, flat, gyr_flat, perms)
    }

    /// Checked constructor: on top of the shape checks the Cayley table must
    /// be a latin square with a left identity. The identity is moved to
    /// index 0 if it sits elsewhere.
    pub fn new(
        cayley: Vec<Vec<usize>>,
        gyr: Vec<Vec<usize>>,
        perms: Vec<Permutation>,
    ) -> Result<Self> {
        let g = Self::from_raw_tables(cayley, gyr, perms)?;
        if let Some(v) = g.latin_violation() {
            return Err(Error::Malformed(format!(
                "Cayley table is not a latin square: {v:?}"
            )));
        }
        match g.normalize_identity() {
            Some(g) => Ok(g),
            None => Err(Error::Malformed("Cayley table has no left identity".into())),
        }
    }

    /// A group given by its Cayley table, with every gyration the identity.
    pub fn from_group_table(cayley: Vec<Vec<usize>>) -> Result<Self> {
        let n = cayley.len();
        Self::new(cayley, vec![vec![0; n]; n], vec![Permutation::identity(n)])
    }

    /// Shared tail of every constructor. Deduplicates `perms`, drops the ones
    /// the table never references and orders the rest by first appearance in
    /// row-major order, so equal structures compare equal.
    pub(crate) fn from_flat(
        order: usize,
        cayley: Vec<u32>,
        gyr: Vec<u32>,
        perms: Vec<Permutation>,
    ) -> Result<Self> {
        debug_assert_eq!(cayley.len(), order * order);
        debug_assert_eq!(gyr.len(), order * order);
        if let Some(p) = perms.iter().find(|p| p.degree() != order) {
            return Err(Error::Malformed(format!(
                "permutation of degree {} in a table of order {order}",
                p.degree()
            )));
        }
        let mut canonical: Vec<Permutation> = Vec::new();
        let mut by_perm: HashMap<&Permutation, u32> = HashMap::new();
        let mut remap: Vec<Option<u32>> = vec![None; perms.len()];
        let mut new_gyr = Vec::with_capacity(gyr.len());
        for &k in &gyr {
            let slot = &mut remap[k as usize];
            let idx = match *slot {
                Some(idx) => idx,
                None => {
                    let p = &perms[k as usize];
                    let idx = *by_perm.entry(p).or_insert_with(|| {
                        canonical.push(p.clone());
                        canonical.len() as u32 - 1
                    });
                    *slot = Some(idx);
                    idx
                }
            };
            new_gyr.push(idx);
        }
        Ok(FiniteGyrogroup {
            order,
            cayley,
            gyr: new_gyr,
            perms: canonical,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element. Always 0 for structures built with
    /// [`FiniteGyrogroup::new`].
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.cayley[a * self.order..(a + 1) * self.order]
    }

    /// Index of `gyr[a, b]` in [`FiniteGyrogroup::perms`].
    #[inline]
    pub fn gyr_index(&self, a: usize, b: usize) -> usize {
        self.gyr[a * self.order + b] as usize
    }

    pub fn gyr(&self, a: usize, b: usize) -> &Permutation {
        &self.perms[self.gyr_index(a, b)]
    }

    /// `gyr[a, b] c`.
    #[inline]
    pub fn gyrate(&self, a: usize, b: usize, c: usize) -> usize {
        self.perms[self.gyr_index(a, b)].apply(c)
    }

    /// The distinct gyrations referenced by the gyration table.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn cayley_rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cayley.chunks(self.order)
    }

    pub fn gyr_rows(&self) -> impl Iterator<Item = &[u32]> {
        self.gyr.chunks(self.order)
    }

    /// The smallest `b` with `b ⊕ x = 0`, if any.
    pub fn left_inverse(&self, x: usize) -> Option<usize> {
        (0..self.order).find(|&b| self.op(b, x) == 0)
    }

    /// `⊖x` for every `x`, in one pass over the table.
    pub fn inverse_map(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.order];
        for b in (0..self.order).rev() {
            for (x, &v) in self.row(b).iter().enumerate() {
                if v == 0 {
                    inv[x] = Some(b);
                }
            }
        }
        inv
    }

    /// First repeated entry in a row, then in a column, if any.
    pub fn latin_violation(&self) -> Option<LatinViolation> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = self.op(a, b);
                if seen[v] != usize::MAX && seen[v] >= a * n {
                    return Some(LatinViolation::Row {
                        a,
                        b1: seen[v] - a * n,
                        b2: b,
                    });
                }
                seen[v] = a * n + b;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let v = self.op(a, b);
                if seen[v] != usize::MAX && seen[v] >= b * n {
                    return Some(LatinViolation::Column {
                        b,
                        a1: seen[v] - b * n,
                        a2: a,
                    });
                }
                seen[v] = b * n + a;
            }
        }
        None
    }

    /// Moves a left identity to index 0 by swapping labels. Returns `None`
    /// when no row of the table is the identity row.
    pub fn normalize_identity(self) -> Option<Self> {
        let n = self.order;
        let e = (0..n).find(|&e| {
            self.row(e)
                .iter()
                .enumerate()
                .all(|(x, &v)| x == v as usize)
        })?;
        if e == 0 {
            return Some(self);
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(0, e);
        let sigma = Permutation::from_images(images).expect("transposition");
        Some(self.relabel(&sigma))
    }

    /// The isomorphic copy in which element `x` is renamed `sigma(x)`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        assert_eq!(
            sigma.degree(),
            self.order,
            "relabelling has the wrong degree"
        );
        let n = self.order;
        let mut cayley = vec![0u32; n * n];
        let mut gyr = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let (sa, sb) = (sigma.apply(a), sigma.apply(b));
                cayley[sa * n + sb] = sigma.apply(self.op(a, b)) as u32;
                gyr[sa * n + sb] = self.gyr[a * n + b];
            }
        }
        let perms = self.perms.iter().map(|p| p.relabel(sigma)).collect();
        Self::from_flat(n, cayley, gyr, perms).expect("relabelling preserves shape")
    }

    /// The structure induced on `subset` (which must contain 0 and be closed
    /// under the operation and the internal gyrations), relabelled to
    /// `0..k` in increasing order of the original elements.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut elements = subset.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::Malformed(
                "a restriction must contain the identity".into(),
            ));
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            if x >= self.order {
                return Err(Error::OutOfRange {
                    element: x,
                    order: self.order,
                });
            }
            position[x] = i;
        }
        let closed = |x: usize, what: &str| -> Result<usize> {
            match position[x] {
                usize::MAX => Err(Error::Malformed(format!(
                    "subset is not closed: {what} gives {x}"
                ))),
                i => Ok(i),
            }
        };
        let k = elements.len();
        let mut cayley = Vec::with_capacity(k * k);
        let mut gyr = Vec::with_capacity(k * k);
        let mut perms = Vec::new();
        let mut perm_index: HashMap<Vec<usize>, usize> = HashMap::new();
        for &a in &elements {
            for &b in &elements {
                cayley.push(closed(self.op(a, b), "⊕")?);
                let images = elements
                    .iter()
                    .map(|&c| closed(self.gyrate(a, b, c), "a gyration"))
                    .collect::<Result<Vec<_>>>()?;
                let next = perm_index.len();
                let idx = *perm_index.entry(images.clone()).or_insert(next);
                if idx == perms.len() {
                    perms.push(Permutation::from_images(images)?);
                }
                gyr.push(idx);
            }
        }
        let cayley = cayley.chunks(k).map(<[usize]>::to_vec).collect();
        let gyr = gyr.chunks(k).map(<[usize]>::to_vec).collect();
        Self::from_raw_tables(cayley, gyr, perms)
    }

    /// Copy with one Cayley entry overwritten. No axioms are re-checked.
    pub fn with_cayley_entry(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        self.check_element(a)?;
        self.check_element(b)?;
        self.check_element(value)?;
        let mut cayley = self.cayley.clone();
        cayley[a * self.order + b] = value as u32;
        Self::from_flat(self.order, cayley, self.gyr.clone(), self.perms.clone())
    }

    /// Copy with `gyr[a, b]` replaced. No axioms are re-checked.
    pub fn with_gyration(&self, a: usize, b: usize, perm: Permutation) -> Result<Self> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut perms = self.perms.clone();
        let idx = match perms.iter().position(|p| *p == perm) {
            Some(i) => i,
            None => {
                perms.push(perm);
                perms.len() - 1
            }
        };
        let mut gyr = self.gyr.clone();
        gyr[a * self.order + b] = idx as u32;
        Self::from_flat(self.order, self.cayley.clone(), gyr, perms)
    }

    /// Same operation, every gyration replaced by the identity.
    pub fn with_trivial_gyrations(&self) -> Self {
        let n = self.order;
        Self::from_flat(
            n,
            self.cayley.clone(),
            vec![0; n * n],
            vec![Permutation::identity(n)],
        )
        .expect("shape unchanged")
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                element: x,
                order: self.order,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGyrogroup {
        FiniteGyrogroup::from_group_table(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn duplicate_and_unused_perms_are_dropped() {
        let n = 3;
        let id = Permutation::identity(n);
        let swap = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
        let cayley = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let g = FiniteGyrogroup::from_raw_tables(
            cayley,
            vec![vec![1, 2, 1], vec![1, 1, 1], vec![2, 1, 2]],
            vec![swap, id.clone(), id.clone()],
        )
        .unwrap();
        assert_eq!(g.perms(), &[id]);
        assert!(g.gyr_rows().flatten().all(|&k| k == 0));
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // Z3 with the labels of 0 and 2 swapped: element 2 is the identity.
        let g =
            FiniteGyrogroup::from_group_table(vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]])
                .unwrap();
        assert_eq!(g, z(3));
    }

    #[test]
    fn latin_violations_are_reported() {
        let g = z(4).with_cayley_entry(1, 2, 0).unwrap();
        assert_eq!(
            g.latin_violation(),
            Some(LatinViolation::Row { a: 1, b1: 2, b2: 3 })
        );
        assert!(FiniteGyrogroup::new(
            g.cayley_rows()
                .map(|r| r.iter().map(|&x| x as usize).collect())
                .collect(),
            vec![vec![0; 4]; 4],
            vec![Permutation::identity(4)],
        )
        .is_err());
    }

    #[test]
    fn shape_errors() {
        let r = FiniteGyrogroup::from_raw_tables(
            vec![vec![0, 1], vec![1]],
            vec![vec![0; 2]; 2],
            vec![Permutation::identity(2)],
        );
        assert!(matches!(r, Err(Error::Malformed(_))));
        let r = FiniteGyrogroup::from_raw_tables(
            vec![vec![0, 2], vec![1, 0]],
            vec![vec![0; 2]; 2],
            vec![Permutation::identity(2)],
        );
        assert!(matches!(
            r,
            Err(Error::OutOfRange {
                element: 2,
                order: 2
            })
        ));
        let r = FiniteGyrogroup::from_raw_tables(
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 1], vec![0, 0]],
            vec![Permutation::identity(2)],
        );
        assert!(matches!(r, Err(Error::Malformed(_))));
    }

    #[test]
    fn inverses_of_cyclic_group() {
        let g = z(8);
        let inv = g.inverse_map();
        for (x, &i) in inv.iter().enumerate() {
            assert_eq!(i, Some((8 - x) % 8));
            assert_eq!(g.left_inverse(x), i);
        }
    }

    #[test]
    fn restriction_relabels_in_order() {
        let g = z(8);
        let h = g.restrict(&[0, 2, 4, 6]).unwrap();
        assert_eq!(h, z(4));
        assert!(g.restrict(&[0, 3]).is_err());
    }
}
