use std::collections::HashSet;

use crate::gyrogroup::FiniteGyrogroup;
use crate::perm::Permutation;

/// A finite group of permutations, identity first, remaining elements in
/// the order breadth-first generation found them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn generate(degree: usize, generators: &[Permutation]) -> Self {
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity];
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let next = g.compose(&elements[i]);
                if seen.insert(next.clone()) {
                    elements.push(next);
                }
            }
            i += 1;
        }
        PermutationGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|p| p.order() == self.order())
    }
}

/// The group generated under composition by every gyration in the table.
pub fn gyroautomorphism_group(g: &FiniteGyrogroup) -> PermutationGroup {
    let generators: Vec<Permutation> = g
        .perms()
        .iter()
        .filter(|p| !p.is_identity())
        .cloned()
        .collect();
    PermutationGroup::generate(g.order(), &generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_g2;
    use crate::groups;

    #[test]
    fn g2_has_a_single_involution() {
        let gamma = gyroautomorphism_group(&build_g2(3).unwrap());
        assert_eq!(gamma.order(), 2);
        assert!(gamma.is_cyclic());
        assert_eq!(
            gamma.elements()[1],
            Permutation::from_cycles(8, &[&[1, 3], &[5, 7]]).unwrap()
        );
        assert_eq!(gamma.elements()[1].order(), 2);
    }

    #[test]
    fn groups_have_trivial_gyroautomorphisms() {
        assert_eq!(gyroautomorphism_group(&groups::dihedral(4)).order(), 1);
    }

    #[test]
    fn generation_closes_under_composition() {
        let r = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        let d4 = PermutationGroup::generate(4, &[r, s]);
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_cyclic());
    }
}
