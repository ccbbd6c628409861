//! The gyroholomorph: the gyrosemidirect product of a gyrogroup with its
//! gyroautomorphism group, on pairs `(x, X)` with
//!
//! ```text
//! (x, X)(y, Y) = (x ⊕ X(y), gyr[x, X(y)] ∘ X ∘ Y)
//! ```
//!
//! plus the invariants used to identify the resulting group.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::gyroaut::{gyroautomorphism_group, PermutationGroup};
use crate::error::{Error, Result};
use crate::groups::{cyclic_by_two_table, cyclic_table, direct_product_table, GroupTable};
use crate::gyrogroup::FiniteGyrogroup;

#[derive(Clone, Debug)]
pub struct GyroholomorphGroup {
    /// `(x, X)` is element `x * |Γ| + k` where `X` is `Γ[k]`.
    pub gamma: PermutationGroup,
    pub cayley: GroupTable,
    pub element_order_multiset: BTreeMap<usize, usize>,
}

impl GyroholomorphGroup {
    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn invariants(&self) -> GroupInvariants {
        GroupInvariants::of(&self.cayley)
    }
}

/// Builds the product table and checks the group axioms exhaustively.
pub fn gyroholomorph(g: &FiniteGyrogroup) -> Result<GyroholomorphGroup> {
    let gamma = gyroautomorphism_group(g);
    let k = gamma.order();
    let index: HashMap<_, usize> = gamma
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let size = g.order() * k;
    let mut cayley = vec![vec![0usize; size]; size];
    for (u, row) in cayley.iter_mut().enumerate() {
        let (x, big_x) = (u / k, &gamma.elements()[u % k]);
        for (v, entry) in row.iter_mut().enumerate() {
            let (y, big_y) = (v / k, &gamma.elements()[v % k]);
            let xy = big_x.apply(y);
            let auto = g.gyr(x, xy).compose(&big_x.compose(big_y));
            let slot = index.get(&auto).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "gyr[{x}, {xy}] ∘ X ∘ Y left the gyroautomorphism group"
                ))
            })?;
            *entry = g.op(x, xy) * k + slot;
        }
    }
    check_group(&cayley)?;
    let element_order_multiset = GroupInvariants::of(&cayley).element_orders;
    Ok(GyroholomorphGroup {
        gamma,
        cayley,
        element_order_multiset,
    })
}

/// Identity at 0, two-sided inverses, associativity.
fn check_group(t: &GroupTable) -> Result<()> {
    let n = t.len();
    if let Some(x) = (0..n).find(|&x| t[0][x] != x || t[x][0] != x) {
        return Err(Error::NotAGroup {
            axiom: "identity",
            witness: vec![x],
        });
    }
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| t[y][x] == 0 && t[x][y] == 0)) {
        return Err(Error::NotAGroup {
            axiom: "inverse",
            witness: vec![x],
        });
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            if let Some(c) = (0..n).find(|&c| t[ab][c] != t[a][t[b][c]]) {
                return Err(Error::NotAGroup {
                    axiom: "associativity",
                    witness: vec![a, b, c],
                });
            }
        }
    }
    Ok(())
}

/// Isomorphism invariants of a finite group given by a Cayley table with
/// identity 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub abelian: bool,
    /// element order -> number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    pub center_size: usize,
    pub derived_subgroup_size: usize,
}

impl GroupInvariants {
    pub fn of(t: &GroupTable) -> Self {
        let n = t.len();
        let inverse: Vec<usize> = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| t[x][y] == 0)
                    .expect("group element has an inverse")
            })
            .collect();
        let mut element_orders = BTreeMap::new();
        for (x, row) in t.iter().enumerate() {
            let (mut y, mut k) = (x, 1);
            while y != 0 {
                y = row[y];
                k += 1;
            }
            *element_orders.entry(k).or_insert(0) += 1;
        }
        let central = |a: usize| (0..n).all(|b| t[a][b] == t[b][a]);
        let center_size = (0..n).filter(|&a| central(a)).count();

        // commutators a⁻¹b⁻¹ab, then the subgroup they generate
        let mut derived = vec![false; n];
        let mut members = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = t[t[inverse[a]][inverse[b]]][t[a][b]];
                if !std::mem::replace(&mut derived[c], true) {
                    members.push(c);
                }
            }
        }
        let mut i = 0;
        while i < members.len() {
            for j in 0..=i {
                for c in [t[members[i]][members[j]], t[members[j]][members[i]]] {
                    if !std::mem::replace(&mut derived[c], true) {
                        members.push(c);
                    }
                }
            }
            i += 1;
        }

        GroupInvariants {
            order: n,
            abelian: center_size == n,
            element_orders,
            center_size,
            derived_subgroup_size: members.len(),
        }
    }
}

/// The action of `ℤ₂` on `ℤ_m` in `ℤ_m ⋊ ℤ₂`, by multiplication with an
/// involutive unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicAction {
    /// `a -> -a`
    Dihedral,
    /// `a -> (m/2 - 1)a`
    Semidihedral,
    /// `a -> (m/2 + 1)a`
    Modular,
}

impl CyclicAction {
    pub const ALL: [CyclicAction; 3] = [
        CyclicAction::Dihedral,
        CyclicAction::Semidihedral,
        CyclicAction::Modular,
    ];

    pub fn multiplier(self, m: usize) -> usize {
        match self {
            CyclicAction::Dihedral => m - 1,
            CyclicAction::Semidihedral => m / 2 - 1,
            CyclicAction::Modular => m / 2 + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CyclicAction::Dihedral => "dihedral",
            CyclicAction::Semidihedral => "semidihedral",
            CyclicAction::Modular => "modular",
        }
    }
}

/// A reference group `ℤ₂ × (ℤ_m ⋊_r ℤ₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub m: usize,
    pub action: CyclicAction,
    pub multiplier: usize,
    pub invariants: GroupInvariants,
}

impl Candidate {
    pub fn describe(&self) -> String {
        format!(
            "Z2 x (Z{} x| Z2), generator acting by a -> {}a ({})",
            self.m,
            self.multiplier,
            self.action.name()
        )
    }
}

/// The nonabelian candidates `ℤ₂ × (ℤ_m ⋊ ℤ₂)`, one per distinct
/// nontrivial action; for `m = 4` the three coincide.
pub fn product_candidates(m: usize) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = Vec::new();
    for action in CyclicAction::ALL {
        let r = action.multiplier(m);
        if r % m == 1 || out.iter().any(|c| c.multiplier == r) {
            continue;
        }
        let table = direct_product_table(&cyclic_table(2), &cyclic_by_two_table(m, r));
        out.push(Candidate {
            m,
            action,
            multiplier: r,
            invariants: GroupInvariants::of(&table),
        });
    }
    out
}

/// The candidates whose invariant vector equals `inv`.
pub fn matching_candidates(inv: &GroupInvariants, m: usize) -> Vec<Candidate> {
    product_candidates(m)
        .into_iter()
        .filter(|c| c.invariants == *inv)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn group_with_trivial_gyrations_gives_a_copy() {
        let g = groups::dihedral(4);
        let h = gyroholomorph(&g).unwrap();
        assert_eq!(h.order(), 8);
        let direct = GroupInvariants::of(&groups::cyclic_by_two_table(4, 3));
        assert_eq!(h.invariants(), direct);
    }

    #[test]
    fn invariants_of_small_groups() {
        let inv = GroupInvariants::of(&groups::cyclic_by_two_table(4, 3));
        assert_eq!(inv.order, 8);
        assert!(!inv.abelian);
        assert_eq!(inv.center_size, 2);
        assert_eq!(inv.derived_subgroup_size, 2);
        assert_eq!(inv.element_orders, BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        let inv = GroupInvariants::of(&groups::cyclic_table(6));
        assert!(inv.abelian);
        assert_eq!(inv.derived_subgroup_size, 1);
    }

    #[test]
    fn candidates_are_distinguishable_for_m8() {
        let c = product_candidates(8);
        assert_eq!(c.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                assert_ne!(c[i].invariants, c[j].invariants);
            }
        }
        assert_eq!(product_candidates(4).len(), 1);
    }

    #[test]
    fn non_group_products_are_rejected() {
        let bad = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]];
        assert!(matches!(
            check_group(&bad),
            Err(Error::NotAGroup {
                axiom: "inverse",
                ..
            })
        ));
    }
}
