//! Exact computer algebra for constacyclic codes of length p^s over the
//! chain ring F_{p^m} + uF_{p^m} with u^2 = 0.
//!
//! The crate classifies the ideals of `R[x]/<x^{p^s} - lambda>` (the
//! lambda-constacyclic codes), computes their twisted duals under any ring
//! automorphism in closed form, decides self-orthogonality and self-duality,
//! and cross-checks every closed-form answer against an independent
//! brute-force linear-algebra oracle. All arithmetic is exact over F_p.
//!
//! Every value is immutable after construction and every operation is pure,
//! so contexts and codes can be shared across threads freely; parameter
//! sweeps partition with no shared mutable state.
//!
//! The crate is `no_std` (it allocates but does no IO); the companion CLI
//! crate carries file formats and commands.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

#[cfg(test)]
extern crate proptest;

pub mod chain_ring;
pub mod codes;
pub mod duality;
pub mod error;
pub mod gf;
mod linalg;
pub mod oracle;
pub mod polyquot;
pub mod sweep;

pub use chain_ring::{all_automorphisms, dual_constant, RingAut, RingElement};
pub use codes::{
    flatten, span_basis, torsion_exponent, unflatten, validate, CodeKind, CodeSpec, FieldSpan,
    SpanBasis, ValidatedSpec,
};
pub use duality::{
    dual_h, is_sigma_self_dual, is_sigma_self_orthogonal, nil_divides, sigma_dual, DualResult,
    Verdict,
};
pub use error::{Error, Result, Violation};
pub use gf::{builtin_modulus, nilpotent_base, FieldAut, FieldCtx, FieldElement};
pub use polyquot::{
    field_nil_coeffs, nil_collect, nil_expand, nilpotent_power, reciprocal, sigma_inner,
    NilExpansion, QuotientPoly,
};
