//! Semiintersecting set families and cliques in the Xor product of Kneser
//! graphs.
//!
//! A family of `2k`-subsets of `A ∪ B` (`|A| = |B| = N`) is semiintersecting
//! when each member has `k` points on each side and any two members meet on
//! exactly one side. `f(k, N)` is the largest size of such a family, which
//! equals the clique number of `KG(N,k) xor KG(N,k)`.
//!
//! The crate provides finite fields and affine planes, the algebraic
//! constructions built on them, the Latin square correspondence, upper
//! bounds, and an exact clique solver for small parameters.

pub mod affine_plane;
pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod gf_field;
pub mod latin_squares;
pub mod set_family;
pub mod solver;

pub use bitset::BitSet;
pub use bounds::{report, BoundReport, LowerEntry, ReportOptions, UpperEntry};
pub use constructions::{
    affine_construction, best_known_lower, big_n_construction, stacked_affine,
    weighted_pk_construction, Branch, LowerBound,
};
pub use error::{Error, Result};
pub use gf_field::{Field, FieldElement};
pub use set_family::{
    verify_semiintersecting, FamilyParams, MemberSet, SetFamily, VerificationReport, Violation,
    WeightFunction,
};
pub use solver::{
    max_clique, solve_f, CliqueResult, SolveOptions, SolveOutcome, SolveStatus, SolverOptions,
};
