//! Closed-form twisted duals and the self-orthogonality and self-duality
//! decision procedures.
//!
//! Throughout, `(theta, eps)` are the parameters of the INVERSE of the
//! automorphism defining the inner product: the dual of a lambda-constacyclic
//! code is `sigma^-1(lambda^-1)`-constacyclic, and every generator formula
//! below is written over that constant with the mirrored nilpotent base
//! `theta(base^-1)`.
//!
//! For the monic kinds with a unit `h` the dual generator carries a mirrored
//! sum, and the decision procedures compare `h` against the comparison
//! polynomial `h'` it induces:
//!
//! ```text
//! S(x)  = sum_j eps theta(h_j) (b x - 1)^j (-b x)^(i-j-t),   b = theta(g^-1)
//! h'(x) = -S(x) expanded in the (g x - 1) basis
//! ```
//!
//! The code is self-orthogonal in the borderline window exactly when
//! `(g x - 1)^(p^s - i - t)` divides `h - h'`.
//!
//! The shape of `S` comes from pushing the annihilator of the code through
//! the reciprocal map and the inverse automorphism: in the nilpotent
//! coordinate `z = g x - 1` the annihilator generators are immediate, and
//! the reciprocal sends `z^k` to a unit times `x^(n-1-k) (-g)^k z'^k` over
//! the inverse constant, which is where the `(-b x)` power originates.
//! Simpler variants that drop the base factor, or the automorphism action,
//! are exposed as well so the differential sweep can score them against the
//! brute-force oracle.

use alloc::vec::Vec;

use crate::chain_ring::{dual_constant, RingAut, RingElement};
use crate::codes::{validate, CodeKind, CodeSpec, ValidatedSpec};
use crate::error::{Error, Result};
use crate::gf::{FieldAut, FieldElement};
use crate::polyquot::{nil_expand, nilpotent_power, NilExpansion, QuotientPoly};

/// A decided predicate together with the clause of the decision tree that
/// fired, as a stable machine-readable identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub clause: &'static str,
}

impl Verdict {
    fn new(holds: bool, clause: &'static str) -> Verdict {
        Verdict { holds, clause }
    }
}

/// The closed-form dual of a validated spec: its constant, its canonical
/// classification record, and the generator polynomials exactly as the
/// closed form prints them.
#[derive(Debug, Clone)]
pub struct DualResult {
    pub dual_lambda: RingElement,
    pub dual_spec: ValidatedSpec,
    pub witnesses: Vec<QuotientPoly>,
    pub clause: &'static str,
}

fn u_times(f: QuotientPoly) -> Result<QuotientPoly> {
    let u = RingElement::u(f.ctx());
    f.scale(&u)
}

// `sum_j coeff(j, h_j) (binom_base x - 1)^j x^(i-j-t)` for a pluggable
// coefficient rule; every exponent `i - j - t` is at least 1 on the
// admissible parameter ranges.
#[allow(clippy::too_many_arguments)]
fn mirrored_sum_with(
    binom_base: &FieldElement,
    lambda: &RingElement,
    n: usize,
    i: u64,
    t: u64,
    h: &[FieldElement],
    coeff: &mut dyn FnMut(u64, &FieldElement) -> Result<FieldElement>,
) -> Result<QuotientPoly> {
    let mut acc = QuotientPoly::zero(lambda, n);
    for (j, hj) in h.iter().enumerate() {
        if hj.is_zero() {
            continue;
        }
        let ju = j as u64;
        let term = nilpotent_power(binom_base, ju, lambda, n)?
            .mul(&QuotientPoly::x_power(lambda, n, i - ju - t)?)?
            .scale(&RingElement::from_field(coeff(ju, hj)?))?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The mirrored sum of the dual generator:
/// `sum_j eps theta(h_j) (-b)^(i-t-j) (b x - 1)^j x^(i-j-t)` with
/// `b = theta(base^-1)`.
#[allow(clippy::too_many_arguments)]
fn mirrored_sum(
    b: &FieldElement,
    lambda: &RingElement,
    n: usize,
    i: u64,
    t: u64,
    h: &[FieldElement],
    theta: FieldAut,
    eps: &FieldElement,
) -> Result<QuotientPoly> {
    let neg_b = b.neg();
    mirrored_sum_with(b, lambda, n, i, t, h, &mut |j, hj| {
        hj.frobenius(theta)
            .mul(eps)?
            .mul(&neg_b.pow((i - t - j) as i64)?)
    })
}

// Parity-only sign, i.e. the mirrored sum without the base power.
fn plain_sign_coeff(
    i: u64,
    t: u64,
    theta: FieldAut,
    eps: &FieldElement,
) -> impl FnMut(u64, &FieldElement) -> Result<FieldElement> + '_ {
    move |j, hj| {
        let mut c = hj.frobenius(theta).mul(eps)?;
        if (j + t + i) % 2 == 1 {
            c = c.neg();
        }
        Ok(c)
    }
}

fn unit_h_params(v: &ValidatedSpec) -> Result<(u64, u64, &[FieldElement])> {
    match v.kind() {
        CodeKind::Type3 { i, t, h } | CodeKind::Type4 { i, t, h, .. } => {
            if h.is_empty() {
                Err(Error::ZeroPolynomial)
            } else {
                Ok((*i, *t, h))
            }
        }
        _ => Err(Error::ZeroPolynomial),
    }
}

/// The mirrored base `theta(base^-1)`; the decision procedures require it to
/// equal the base itself.
fn mirrored_base(v: &ValidatedSpec, theta: FieldAut) -> Result<FieldElement> {
    Ok(v.base().inv()?.frobenius(theta))
}

fn require_fixed_base(v: &ValidatedSpec, theta: FieldAut) -> Result<()> {
    if &mirrored_base(v, theta)? == v.base() {
        Ok(())
    } else {
        Err(Error::DualBaseNotFixed)
    }
}

/// The comparison polynomial `h'` in the `(base x - 1)` basis.
///
/// Defined for monic or nonprincipal kinds with a unit `h`, and only when
/// the inverse automorphism fixes the nilpotent base. For the monic kind in
/// the regime `2i > p^s + t` the expansion is truncated to the indices below
/// `p^s - i`, matching the representative degree of `h` there.
pub fn dual_h(v: &ValidatedSpec, sigma: &RingAut) -> Result<NilExpansion> {
    let (i, t, h) = unit_h_params(v)?;
    let inv = sigma.invert();
    require_fixed_base(v, inv.theta())?;
    let sum = mirrored_sum(
        v.base(),
        v.lambda(),
        v.n(),
        i,
        t,
        h,
        inv.theta(),
        inv.epsilon(),
    )?;
    finish_dual_h(v, sum, i, t)
}

/// Variant of [`dual_h`] with a parity-only sign and no base power (the
/// shape `eps theta(h_j) (-1)^(j+t-i) (g x - 1)^j x^(i-j-t)`). Exposed for
/// differential scoring only.
pub fn dual_h_plain_sign(v: &ValidatedSpec, sigma: &RingAut) -> Result<NilExpansion> {
    let (i, t, h) = unit_h_params(v)?;
    let inv = sigma.invert();
    require_fixed_base(v, inv.theta())?;
    let mut coeff = plain_sign_coeff(i, t, inv.theta(), inv.epsilon());
    let sum = mirrored_sum_with(v.base(), v.lambda(), v.n(), i, t, h, &mut coeff)?;
    finish_dual_h(v, sum, i, t)
}

/// Variant of [`dual_h`] that additionally uses unscaled `(x - 1)^j` powers
/// inside the sum. Exposed for differential scoring only.
pub fn dual_h_unscaled_base(v: &ValidatedSpec, sigma: &RingAut) -> Result<NilExpansion> {
    let (i, t, h) = unit_h_params(v)?;
    let inv = sigma.invert();
    require_fixed_base(v, inv.theta())?;
    let one = v.ctx().one();
    let mut coeff = plain_sign_coeff(i, t, inv.theta(), inv.epsilon());
    let sum = mirrored_sum_with(&one, v.lambda(), v.n(), i, t, h, &mut coeff)?;
    finish_dual_h(v, sum, i, t)
}

fn finish_dual_h(
    v: &ValidatedSpec,
    sum: QuotientPoly,
    i: u64,
    t: u64,
) -> Result<NilExpansion> {
    let expansion = nil_expand(&sum.neg(), v.base())?;
    if matches!(v.kind(), CodeKind::Type3 { .. }) && 2 * i > v.n() as u64 + t {
        Ok(expansion.truncated((v.n() as u64 - i) as usize))
    } else {
        Ok(expansion)
    }
}

/// Variant of [`dual_h`] for the nonprincipal kind with coefficients
/// `h_j (-gamma)^(i-t+j)` in place of the automorphism-twisted rule.
/// Exposed for differential scoring only.
pub fn dual_h_negated_constant(v: &ValidatedSpec, sigma: &RingAut) -> Result<NilExpansion> {
    let (i, t, h) = unit_h_params(v)?;
    let inv = sigma.invert();
    require_fixed_base(v, inv.theta())?;
    let neg_gamma = v.lambda().field_part().neg();
    let sum = mirrored_sum_with(v.base(), v.lambda(), v.n(), i, t, h, &mut |j, hj| {
        hj.mul(&neg_gamma.pow((i - t + j) as i64)?)
    })?;
    nil_expand(&sum.neg(), v.base())
}

/// Whether `(base x - 1)^k` divides the expanded polynomial, i.e. whether
/// its first `k` coefficients vanish.
pub fn nil_divides(k: u64, e: &NilExpansion) -> bool {
    e.coeffs()
        .iter()
        .take(k.min(e.coeffs().len() as u64) as usize)
        .all(RingElement::is_zero)
}

fn h_difference(v: &ValidatedSpec, sigma: &RingAut) -> Result<NilExpansion> {
    let (_, _, h) = unit_h_params(v)?;
    let h_exp = NilExpansion::from_field_coeffs(v.base(), v.lambda(), v.n(), h)?;
    h_exp.sub(&dual_h(v, sigma)?)
}

/// The twisted dual in closed form, dispatching on the classification.
pub fn sigma_dual(v: &ValidatedSpec, sigma: &RingAut) -> Result<DualResult> {
    let n = v.n();
    let nu = n as u64;
    let ctx = v.ctx();
    let inv = sigma.invert();
    let theta = inv.theta();
    let eps = inv.epsilon().clone();
    let dual_lambda = dual_constant(v.lambda(), sigma)?;
    let dual_base = mirrored_base(v, theta)?;
    let np = |k: u64| nilpotent_power(&dual_base, k, &dual_lambda, n);

    let (witnesses, dual_kind, clause): (Vec<QuotientPoly>, CodeKind, &'static str) =
        match v.kind() {
            CodeKind::Chain { i } => (
                alloc::vec![np(2 * nu - i)?],
                CodeKind::Chain { i: 2 * nu - i },
                "chain",
            ),
            CodeKind::Type1Zero => (
                alloc::vec![QuotientPoly::one(&dual_lambda, n)],
                CodeKind::Type1Whole,
                "zero_to_whole",
            ),
            CodeKind::Type1Whole => (alloc::vec![], CodeKind::Type1Zero, "whole_to_zero"),
            CodeKind::Type2 { i } => {
                let witnesses = alloc::vec![
                    np(nu - i)?,
                    u_times(QuotientPoly::one(&dual_lambda, n))?,
                ];
                let kind = if *i == 0 {
                    CodeKind::Type2 { i: 0 }
                } else {
                    CodeKind::Type4 {
                        i: nu - i,
                        t: 0,
                        h: Vec::new(),
                        omega: 0,
                    }
                };
                (witnesses, kind, "nonmonic")
            }
            CodeKind::Type3 { i, t, h } if h.is_empty() => (
                alloc::vec![np(nu - i)?],
                CodeKind::Type3 {
                    i: nu - i,
                    t: 0,
                    h: Vec::new(),
                },
                "monic_plain",
            ),
            CodeKind::Type3 { i, t, h } => {
                let sum = mirrored_sum(&dual_base, &dual_lambda, n, *i, *t, h, theta, &eps)?;
                let mirrored = nil_expand(&sum.neg(), &dual_base)?;
                if 2 * i <= nu + t {
                    // Dual stays principal: one generator of monic degree
                    // n - i with u-part shifted by n + t - 2i.
                    let a = np(nu - i)?.sub(&u_times(np(nu + t - 2 * i)?.mul(&sum)?)?)?;
                    let hh = truncated_field_coeffs(&mirrored, (*i - *t) as usize);
                    (
                        alloc::vec![a],
                        CodeKind::Type3 {
                            i: nu - i,
                            t: nu + t - 2 * i,
                            h: hh,
                        },
                        "monic_unit_low",
                    )
                } else {
                    let b = np(i - t)?.sub(&u_times(sum.clone())?)?;
                    let second = u_times(np(nu - i)?)?;
                    let hh = truncated_field_coeffs(&mirrored, (nu - i) as usize);
                    let kind = if *t > 0 {
                        CodeKind::Type4 {
                            i: i - t,
                            t: 0,
                            h: hh,
                            omega: nu - i,
                        }
                    } else {
                        // The second generator is redundant at t = 0: the
                        // torsion exponent of the principal part is n - i.
                        CodeKind::Type3 {
                            i: *i,
                            t: 0,
                            h: hh,
                        }
                    };
                    (alloc::vec![b, second], kind, "monic_unit_high")
                }
            }
            CodeKind::Type4 { i, t, h, omega } if h.is_empty() => {
                let witnesses = alloc::vec![np(nu - omega)?, u_times(np(nu - i)?)?];
                let kind = if *omega == 0 {
                    CodeKind::Type2 { i: nu - i }
                } else {
                    CodeKind::Type4 {
                        i: nu - omega,
                        t: 0,
                        h: Vec::new(),
                        omega: nu - i,
                    }
                };
                let _ = t;
                (witnesses, kind, "nonprincipal_plain")
            }
            CodeKind::Type4 { i, t, h, omega } => {
                let sum = mirrored_sum(&dual_base, &dual_lambda, n, *i, *t, h, theta, &eps)?;
                let mirrored = nil_expand(&sum.neg(), &dual_base)?;
                // omega < T <= n - i + t keeps this exponent positive, but
                // only when t is added before the subtractions.
                let shift = nu + t - i - omega;
                let d = np(nu - omega)?.sub(&u_times(np(shift)?.mul(&sum)?)?)?;
                let second = u_times(np(nu - i)?)?;
                let kind = if *t > 0 {
                    CodeKind::Type4 {
                        i: nu - omega,
                        t: shift,
                        h: truncated_field_coeffs(&mirrored, (omega - t) as usize),
                        omega: nu - i,
                    }
                } else {
                    CodeKind::Type3 {
                        i: nu - omega,
                        t: nu - i - omega,
                        h: truncated_field_coeffs(&mirrored, *omega as usize),
                    }
                };
                (alloc::vec![d, second], kind, "nonprincipal_unit")
            }
        };

    let dual_spec = validate(&CodeSpec {
        ctx: ctx.clone(),
        s: v.spec().s,
        lambda: dual_lambda.clone(),
        kind: dual_kind,
    })?;
    Ok(DualResult {
        dual_lambda,
        dual_spec,
        witnesses,
        clause,
    })
}

fn truncated_field_coeffs(e: &NilExpansion, len: usize) -> Vec<FieldElement> {
    let mut coeffs = e
        .truncated(len)
        .field_coeffs()
        .expect("mirrored sums stay inside the base field");
    coeffs.truncate(len);
    while coeffs.last().is_some_and(FieldElement::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Decides `C` being contained in its twisted dual, naming the clause that
/// fired.
pub fn is_sigma_self_orthogonal(v: &ValidatedSpec, sigma: &RingAut) -> Result<Verdict> {
    let nu = v.n() as u64;
    let theta = sigma.invert().theta();
    match v.kind() {
        CodeKind::Chain { i } => Ok(if *i >= nu {
            Verdict::new(true, "chain_power_at_least_length")
        } else {
            Verdict::new(false, "chain_power_below_length")
        }),
        CodeKind::Type1Zero => Ok(Verdict::new(true, "zero_code")),
        CodeKind::Type1Whole => Ok(Verdict::new(false, "unit_ideal")),
        CodeKind::Type2 { .. } => Ok(Verdict::new(true, "u_multiple")),
        CodeKind::Type3 { i, t, h } => {
            if &mirrored_base(v, theta)? != v.base() {
                return Ok(Verdict::new(false, "base_not_fixed"));
            }
            if h.is_empty() {
                return Ok(if 2 * i >= nu {
                    Verdict::new(true, "power_at_least_half_length")
                } else {
                    Verdict::new(false, "power_below_half_length")
                });
            }
            if nu <= i + t {
                return Ok(Verdict::new(true, "monic_exponents_cover_length"));
            }
            if 2 * i <= nu + t && nu > 2 * i {
                return Ok(Verdict::new(false, "length_exceeds_window"));
            }
            let divisible = nil_divides(nu - i - t, &h_difference(v, sigma)?);
            Ok(if divisible {
                Verdict::new(true, "difference_divisible")
            } else {
                Verdict::new(false, "difference_not_divisible")
            })
        }
        CodeKind::Type4 { i, t, h, omega } => {
            if &mirrored_base(v, theta)? != v.base() {
                return Ok(Verdict::new(false, "base_not_fixed"));
            }
            if h.is_empty() {
                return Ok(if i + omega >= nu {
                    Verdict::new(true, "exponents_cover_length")
                } else {
                    Verdict::new(false, "exponents_below_length")
                });
            }
            if nu <= i + t {
                return Ok(Verdict::new(true, "monic_exponents_cover_length"));
            }
            if nu > i + omega {
                return Ok(Verdict::new(false, "length_exceeds_window"));
            }
            let divisible = nil_divides(nu - i - t, &h_difference(v, sigma)?);
            Ok(if divisible {
                Verdict::new(true, "difference_divisible")
            } else {
                Verdict::new(false, "difference_not_divisible")
            })
        }
    }
}

/// Decides `C` equal to its twisted dual, naming the clause that fired.
///
/// The chain ring has exactly one self-dual code (the middle power, which is
/// the ideal generated by `u`), and nonmonic principal codes are self-dual
/// only for `i = 0`. A monic principal code can be self-dual only in the
/// regime `t = 0`, `2i > p^s`, where the code and its dual have equal size
/// and self-duality reduces to `h' = h`; everywhere else the sizes differ or
/// the dual is nonprincipal.
pub fn is_sigma_self_dual(v: &ValidatedSpec, sigma: &RingAut) -> Result<Verdict> {
    let nu = v.n() as u64;
    let theta = sigma.invert().theta();
    match v.kind() {
        CodeKind::Chain { i } => Ok(if *i == nu {
            Verdict::new(true, "unique_middle_power")
        } else {
            Verdict::new(false, "chain_size_imbalance")
        }),
        CodeKind::Type1Zero | CodeKind::Type1Whole => {
            Ok(Verdict::new(false, "trivial_ideal"))
        }
        CodeKind::Type2 { i } => Ok(if *i == 0 {
            Verdict::new(true, "full_u_ideal")
        } else {
            Verdict::new(false, "proper_u_power")
        }),
        CodeKind::Type3 { i, t, h } => {
            if h.is_empty() || *t > 0 || 2 * i <= nu {
                return Ok(Verdict::new(false, "monic_size_imbalance"));
            }
            if &mirrored_base(v, theta)? != v.base() {
                return Ok(Verdict::new(false, "base_not_fixed"));
            }
            let divisible = nil_divides(nu - i, &h_difference(v, sigma)?);
            Ok(if divisible {
                Verdict::new(true, "self_mirrored_h")
            } else {
                Verdict::new(false, "difference_not_divisible")
            })
        }
        CodeKind::Type4 { i, t, h, omega } => {
            if i + omega != nu {
                return Ok(Verdict::new(false, "exponent_sum_mismatch"));
            }
            if &mirrored_base(v, theta)? != v.base() {
                return Ok(Verdict::new(false, "base_not_fixed"));
            }
            if h.is_empty() {
                return Ok(Verdict::new(true, "complementary_exponents"));
            }
            let divisible = nil_divides(nu - i - t, &h_difference(v, sigma)?);
            Ok(if divisible {
                Verdict::new(true, "complementary_exponents_and_difference_divisible")
            } else {
                Verdict::new(false, "difference_not_divisible")
            })
        }
    }
}
