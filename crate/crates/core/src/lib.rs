//! Finite gyrogroups of order `2ⁿ` built from the cyclic group `ℤ_{2ⁿ}`.
//!
//! - [`gyrogroup`] and [`verify`]: a table-backed finite gyrogroup and an
//!   exhaustive checker for the gyrogroup axioms.
//! - [`construct`]: the closed-form construction of `G₂(n)`.
//! - [`analyze`]: subgyrogroups and their lattice, the gyroautomorphism
//!   group, the gyroholomorph and brute-force isomorphism testing.
//! - [`io`]: table, lattice and report formats used by the command line tool.

pub mod analyze;
pub mod construct;
pub mod error;
pub mod groups;
pub mod gyrogroup;
pub mod io;
pub mod perm;
pub mod verify;

pub use construct::{build_g2, CyclicParams, Gyration, ParityClass};
pub use error::{Error, Result};
pub use gyrogroup::FiniteGyrogroup;
pub use perm::Permutation;
pub use verify::{verify, Axiom, AxiomStatus, VerificationReport};
