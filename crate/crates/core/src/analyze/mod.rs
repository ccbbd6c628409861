//! Structure of a finite gyrogroup: subgyrogroups, gyroautomorphisms, the
//! gyroholomorph and isomorphism testing.

pub mod gyroaut;
pub mod holomorph;
pub mod iso;
pub mod subgyro;

pub use gyroaut::{gyroautomorphism_group, PermutationGroup};
pub use holomorph::{
    gyroholomorph, matching_candidates, product_candidates, Candidate, CyclicAction,
    GroupInvariants, GyroholomorphGroup,
};
pub use iso::{is_degenerate_group, isomorphic};
pub use subgyro::{
    classify_subgyrogroups, closure, enumerate_subgyrogroups, ClosedForm, Subgyrogroup,
    SubgyrogroupLattice,
};
