//! Brute-force verification layer, independent of every closed form.
//!
//! Everything here is plain linear algebra over F_p on flattened
//! coordinates: duals are kernels of inner-product constraint systems,
//! self-orthogonality is pairwise products over a basis, annihilators are
//! kernels of multiplication maps, and minimum distance is full enumeration.
//! None of it consults the closed-form dual formulas, which is the point:
//! the two paths meet only in the differential sweep.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chain_ring::{RingAut, RingElement};
use crate::codes::{flatten, unflatten, SpanBasis};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polyquot::{sigma_inner, QuotientPoly};

/// Hard bound on the flattened dimension `2mn` of a brute-force system.
pub const DIM_LIMIT: usize = 64;

/// One verification outcome, ready for a line-delimited structured log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub spec_id: String,
    pub sigma_id: String,
    pub check: &'static str,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

fn check_dims(code: &SpanBasis) -> Result<()> {
    if code.dimension() > DIM_LIMIT {
        return Err(Error::MatrixTooLarge {
            dims: code.dimension(),
            limit: DIM_LIMIT,
        });
    }
    Ok(())
}

/// The F_p-basis elements of R^n in flat-coordinate order: position-major,
/// field-basis powers then their u-multiples.
fn ambient_basis(code: &SpanBasis) -> Result<Vec<Vec<RingElement>>> {
    let ctx = code.ctx();
    let dim = code.dimension();
    let mut out = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut flat = alloc::vec![0u64; dim];
        flat[k] = 1;
        out.push(unflatten(ctx, &flat)?);
    }
    Ok(out)
}

/// The twisted dual as the exact kernel of the stacked constraint system:
/// every basis codeword contributes the `2m` F_p-linear equations carried by
/// its R-valued inner product.
pub fn brute_dual(code: &SpanBasis, sigma: &RingAut) -> Result<SpanBasis> {
    check_dims(code)?;
    let ctx = code.ctx();
    let dim = code.dimension();
    let basis = ambient_basis(code)?;
    let mut constraints: Vec<Vec<u64>> = Vec::new();
    for row in code.rows_as_vectors()? {
        let mut block = alloc::vec![alloc::vec![0u64; dim]; 2 * ctx.m()];
        for (k, e) in basis.iter().enumerate() {
            let value = sigma_inner(&row, e, sigma)?;
            let coords = flatten(core::slice::from_ref(&value));
            for (comp, &c) in coords.iter().enumerate() {
                block[comp][k] = c;
            }
        }
        constraints.extend(block);
    }
    let kernel = linalg::kernel(&constraints, dim, ctx.p());
    Ok(SpanBasis::from_rref_rows(ctx, code.n(), kernel))
}

/// Pairwise inner products over an F_p-basis decide containment in the dual,
/// by bilinearity.
pub fn brute_self_orthogonal(code: &SpanBasis, sigma: &RingAut) -> Result<bool> {
    check_dims(code)?;
    let rows = code.rows_as_vectors()?;
    for x in &rows {
        for y in &rows {
            if !sigma_inner(x, y, sigma)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The annihilator `{g : f g = 0 for all f in the code}` inside
/// `R[x]/<x^n - lambda>`, as a kernel of multiplication maps.
pub fn brute_annihilator(code: &SpanBasis, lambda: &RingElement) -> Result<SpanBasis> {
    check_dims(code)?;
    let ctx = code.ctx();
    let n = code.n();
    let dim = code.dimension();
    let basis = ambient_basis(code)?;
    let mut constraints: Vec<Vec<u64>> = Vec::new();
    for row in code.rows_as_vectors()? {
        let f = QuotientPoly::from_coeffs(lambda, n, row)?;
        let mut block = alloc::vec![alloc::vec![0u64; dim]; dim];
        for (k, e) in basis.iter().enumerate() {
            let g = QuotientPoly::from_coeffs(lambda, n, e.clone())?;
            let product = flatten(f.mul(&g)?.coeffs());
            for (comp, &c) in product.iter().enumerate() {
                block[comp][k] = c;
            }
        }
        constraints.extend(block);
    }
    let kernel = linalg::kernel(&constraints, dim, ctx.p());
    Ok(SpanBasis::from_rref_rows(ctx, n, kernel))
}

/// Minimum Hamming weight over the nonzero codewords, by full enumeration.
pub fn min_distance(code: &SpanBasis, cap: u128) -> Result<usize> {
    let m = code.ctx().m();
    let mut best: Option<usize> = None;
    for word in code.enumerate_flat(cap)? {
        let w = crate::codes::flat_weight(&word, m);
        if w > 0 {
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    best.ok_or(Error::NoNonzeroCodeword)
}

/// Whether the span is invariant under the twisted shift
/// `(x_0, ..., x_{n-1}) -> (lambda x_{n-1}, x_0, ..., x_{n-2})`.
pub fn ideal_check(code: &SpanBasis, lambda: &RingElement) -> Result<bool> {
    for row in code.rows_as_vectors()? {
        let mut shifted = Vec::with_capacity(row.len());
        shifted.push(row[row.len() - 1].mul(lambda)?);
        shifted.extend_from_slice(&row[..row.len() - 1]);
        if !code.contains(&shifted)? {
            return Ok(false);
        }
    }
    Ok(true)
}
