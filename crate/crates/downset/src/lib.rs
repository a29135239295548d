//! Down-sets of a finite ground set, represented by their maximal faces
//! (facets) or minimal non-faces (blockers), with exact face-counting
//! invariants and monotone dualization.
//!
//! A down-set `Δ ⊆ 2^[n]` (an abstract simplicial complex) is closed under
//! taking subsets. This crate stores one compactly as either of two
//! antichains — the facets `F` or the blockers `M` — and computes, in exact
//! arbitrary-precision arithmetic:
//!
//! - face-count vectors by brute force or by inclusion–exclusion over `F` or
//!   `M` ([`counts_bruteforce`], [`counts_from_facets`],
//!   [`counts_from_blockers`]);
//! - the f- and K-polynomials and Hilbert-function values of the associated
//!   monomial quotient ring ([`f_polynomial`], [`k_polynomial_from_counts`],
//!   [`k_polynomial_from_blockers`], [`hilbert_dimension`]);
//! - the reduced Euler characteristic by three independent routes;
//! - Alexander duals, minimal transversals (Berge multiplication), the
//!   facet/blocker conversions, and the dual-pair decision with certificates
//!   ([`min_transversals`], [`is_dual_pair`]);
//! - the union-bound and joint-size inequalities and the exact deviation
//!   identity in dyadic arithmetic ([`union_bound_check`],
//!   [`joint_size_inequality`], [`deviation_identity`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything is safe to share across threads.

pub mod binom;
pub mod bounds;
pub mod budget;
pub mod duality;
pub mod dyadic;
pub mod error;
pub mod facecount;
pub mod family_file;
mod incl_excl;
pub mod poly;
pub mod setfam;

pub use bounds::{deviation_identity, joint_size_inequality, joint_size_sums, union_bound_check};
pub use budget::Budget;
pub use duality::{
    alexander_dual, blockers_from_facets, check_prop2, complement_family, facets_from_blockers,
    find_witness, is_dual_pair, min_transversals, DualPair, DualityVerdict, NonDualEvidence,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use facecount::{
    counts_bruteforce, counts_from_blockers, counts_from_facets, euler_bruteforce,
    euler_from_blockers, euler_from_facets, f_polynomial, hilbert_dimension,
    hilbert_from_k_polynomial, k_polynomial_from_blockers, k_polynomial_from_counts,
    FaceCountVector,
};
pub use family_file::{parse_family, write_family, ParseOutcome};
pub use poly::IntPolynomial;
pub use setfam::{
    enumerate_downset, enumerate_downset_from_blockers, eval_monotone_dnf, member_by_blockers,
    member_by_facets, Antichain, Face, GroundSize, SetFamily, N_MAX,
};
