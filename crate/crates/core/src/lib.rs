//! Exact arithmetic around the fourth dynatomic polynomial of `x² + c`.
//!
//! The crate builds `Φ₄(t, x)`, factors its specializations over ℚ and over
//! prime fields, decides which of the four generic Galois-group cases a
//! rational parameter falls into, computes the matching root densities from
//! explicit permutation groups, and checks all of it independently by direct
//! factorization, Frobenius sampling and p-adic local solvability.

pub mod classifier;
pub mod dynatomic;
pub mod frobenius;
pub mod factorizer;
pub mod imagesets;
pub mod padic_local;
pub mod permgroup;
pub mod polyring;
pub mod serde_rat;

pub use polyring::{BPoly, Poly, Rat, Ring, UPoly, ZPoly};
pub use classifier::{classify, classify_quadratic, consistency_check, Case, ClassificationReport};
pub use factorizer::{DegreeMultiset, FpPoly};
pub use frobenius::{degree_multiset_mod_p, sample_density, SampleReport};
pub use imagesets::{ImageFn, MembershipWitness};
pub use padic_local::CurveModel;
pub use permgroup::{CaseGroup, Perm, PermGroup};
