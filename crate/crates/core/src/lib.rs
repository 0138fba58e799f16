//! Exact computer algebra for splitting algebras of monic polynomials over
//! finite commutative rings.
//!
//! The base ring is a finite product of residue rings `Z/m`. For a monic
//! polynomial `f` of degree `n` over such a ring, the splitting algebra
//! `A_f` adjoins universal roots `τ_1, …, τ_n` so that
//! `f(t) = (t − τ_1)⋯(t − τ_n)`, and is a free module of rank `n!` over the
//! base. The symmetric group `S_n` acts by permuting the roots.
//!
//! This crate constructs `A_f` exactly, computes the `S_n`-action and
//! modules of invariant elements (via Howell normal forms over `Z/m`),
//! decides whether the only invariants are the base-ring constants — which
//! happens exactly when `Ann(2) ∩ Ann(D_f) = 0` for the root-pair product
//! `D_f = ∏_{i<j}(τ_i + τ_j)` — and, when that condition fails, constructs
//! and verifies an explicit non-constant invariant element.
//!
//! Modules:
//! - [`ring`]: products of `Z/m`, elements, annihilator ideals.
//! - [`modlinalg`]: Howell normal form, kernels, and row-span membership
//!   over `Z/m`.
//! - [`splitalg`]: the splitting algebra, its normal form, multiplication,
//!   the `S_n`-action, orbit sums, and evaluation at concrete roots.
//! - [`invariants`]: invariant modules, the n = 2 closed form, triviality
//!   tests, and the annihilator condition.
//! - [`witness`]: the constructive pipeline producing a verified
//!   non-constant invariant when the condition fails.

pub mod error;
pub mod invariants;
pub mod modlinalg;
pub mod ring;
pub mod splitalg;
pub mod witness;

mod arith;

pub use error::Error;
pub use invariants::{
    condition_star, invariant_module, s2_closed_form, stability_products, trivial_invariant_test,
    trivial_transposition_test, ConditionReport, InvariantModule, StabilityReport, TrivialityCache,
};
pub use modlinalg::{howell_form, in_row_span, kernel, HowellBasis, MatrixOverFactor};
pub use ring::{Ideal, Ring, RingElem};
pub use splitalg::{coset_reps_pair_stabilizer, AlgElem, ExpVec, Perm, SplitAlg};
pub use witness::{
    annihilator_descent, build_witness, extract_sigma_invariant, lift_to_full_invariant,
    verify_witness, Descent, DescentStep, SigmaExtraction, VerificationRecord, WitnessReport,
};
