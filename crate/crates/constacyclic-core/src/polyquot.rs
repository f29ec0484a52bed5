//! Polynomial arithmetic in `R[x]/<x^n - lambda>` and the (g x - 1)-adic basis.
//!
//! Codewords of length `n` are identified with their degree-below-`n`
//! polynomial representatives, so a [`QuotientPoly`] is simply a length-`n`
//! coefficient vector over R tagged with the constant `lambda` that the
//! reduction `x^n -> lambda` uses. Polynomials are dense; at the sizes this
//! crate handles (n <= 25) nothing sparser is worth having.
//!
//! The second half of the module changes basis between the monomial basis and
//! powers of the nilpotent binomial `g x - 1` (for a unit `g` of the base
//! field). The expansion is computed by iterated synthetic division by
//! `g x - 1`, which is exact and costs O(n^2) ring operations; no binomial
//! coefficients appear anywhere.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::chain_ring::{RingAut, RingElement};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};

/// An element of `R[x]/<x^n - lambda>`, stored as exactly `n` coefficients,
/// low degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientPoly {
    lambda: RingElement,
    coeffs: Vec<RingElement>,
}

impl QuotientPoly {
    pub fn zero(lambda: &RingElement, n: usize) -> QuotientPoly {
        let ctx = lambda.ctx();
        QuotientPoly {
            lambda: lambda.clone(),
            coeffs: (0..n).map(|_| RingElement::zero(ctx)).collect(),
        }
    }

    pub fn one(lambda: &RingElement, n: usize) -> QuotientPoly {
        let mut f = Self::zero(lambda, n);
        f.coeffs[0] = RingElement::one(lambda.ctx());
        f
    }

    /// The monomial `x^k`, reduced.
    pub fn x_power(lambda: &RingElement, n: usize, k: u64) -> Result<QuotientPoly> {
        let mut f = Self::zero(lambda, n);
        let q = k / n as u64;
        let r = (k % n as u64) as usize;
        let mut scale = RingElement::one(lambda.ctx());
        for _ in 0..q {
            scale = scale.mul(lambda)?;
        }
        f.coeffs[r] = scale;
        Ok(f)
    }

    /// Builds a representative from at most `n` coefficients, padding with
    /// zeros. Longer inputs are reduced by `x^n = lambda`.
    pub fn from_coeffs(
        lambda: &RingElement,
        n: usize,
        coeffs: Vec<RingElement>,
    ) -> Result<QuotientPoly> {
        let ctx = lambda.ctx();
        let mut out: Vec<RingElement> = (0..n).map(|_| RingElement::zero(ctx)).collect();
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
            let mut c = c;
            let mut pos = k;
            while pos >= n {
                pos -= n;
                c = c.mul(lambda)?;
            }
            out[pos] = out[pos].add(&c)?;
        }
        Ok(QuotientPoly {
            lambda: lambda.clone(),
            coeffs: out,
        })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.lambda.ctx()
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn same_quotient(&self, other: &QuotientPoly) -> Result<()> {
        if self.n() == other.n() && self.lambda == other.lambda {
            Ok(())
        } else {
            Err(Error::QuotientMismatch)
        }
    }

    pub fn add(&self, other: &QuotientPoly) -> Result<QuotientPoly> {
        self.same_quotient(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(QuotientPoly {
            lambda: self.lambda.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &QuotientPoly) -> Result<QuotientPoly> {
        self.same_quotient(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(QuotientPoly {
            lambda: self.lambda.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> QuotientPoly {
        QuotientPoly {
            lambda: self.lambda.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &RingElement) -> Result<QuotientPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.mul(c))
            .collect::<Result<_>>()?;
        Ok(QuotientPoly {
            lambda: self.lambda.clone(),
            coeffs,
        })
    }

    /// Schoolbook product reduced by `x^n = lambda`.
    pub fn mul(&self, other: &QuotientPoly) -> Result<QuotientPoly> {
        self.same_quotient(other)?;
        let n = self.n();
        let ctx = self.ctx();
        let mut out: Vec<RingElement> = (0..n).map(|_| RingElement::zero(ctx)).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut term = a.mul(b)?;
                let mut pos = i + j;
                if pos >= n {
                    pos -= n;
                    term = term.mul(&self.lambda)?;
                }
                out[pos] = out[pos].add(&term)?;
            }
        }
        Ok(QuotientPoly {
            lambda: self.lambda.clone(),
            coeffs: out,
        })
    }

    pub fn pow(&self, e: u64) -> Result<QuotientPoly> {
        let mut acc = QuotientPoly::one(&self.lambda, self.n());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The substitution `x -> c x`, which carries the quotient by
    /// `x^n - lambda` isomorphically onto the quotient by
    /// `x^n - lambda * c^-n`. With `lambda = 1` and `c` the nilpotent base of
    /// a unit constant this is the classical cyclic-to-constacyclic bridge.
    pub fn twist(&self, c: &FieldElement) -> Result<QuotientPoly> {
        let n = self.n();
        let target = self
            .lambda
            .mul_field(&c.pow(-(n as i64))?)?;
        let mut coeffs = Vec::with_capacity(n);
        let mut ck = c.ctx().one();
        for coeff in &self.coeffs {
            coeffs.push(coeff.mul_field(&ck)?);
            ck = ck.mul(c)?;
        }
        Ok(QuotientPoly {
            lambda: target,
            coeffs,
        })
    }

    /// Coefficientwise application of a ring automorphism. The image lives
    /// over the modulus constant `sigma(lambda)`.
    pub fn sigma_map(&self, sigma: &RingAut) -> QuotientPoly {
        QuotientPoly {
            lambda: sigma.apply(&self.lambda),
            coeffs: self.coeffs.iter().map(|c| sigma.apply(c)).collect(),
        }
    }
}

impl fmt::Debug for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] mod x^{} - {}", self.n(), self.lambda)
    }
}

/// `(base * x - 1)^k` reduced in `R[x]/<x^n - lambda>`, for `0 <= k <= 2n`.
///
/// Over a field constant the binomial is nilpotent of index `n`; over a
/// constant with nonzero u-part its `n`-th power is a unit multiple of `u`
/// and its `2n`-th power vanishes.
pub fn nilpotent_power(
    base: &FieldElement,
    k: u64,
    lambda: &RingElement,
    n: usize,
) -> Result<QuotientPoly> {
    if k > 2 * n as u64 {
        return Err(Error::PowerOutOfRange {
            k,
            max: 2 * n as u64,
        });
    }
    let ctx = base.ctx();
    let one = QuotientPoly::one(lambda, n);
    let mut binomial = QuotientPoly::zero(lambda, n);
    binomial.coeffs[0] = RingElement::one(ctx).neg();
    binomial.coeffs[1] = RingElement::from_field(base.clone());
    let mut acc = one;
    for _ in 0..k {
        acc = acc.mul(&binomial)?;
    }
    Ok(acc)
}

/// Coefficients of a quotient representative in the basis
/// `{(base * x - 1)^j : 0 <= j < n}`.
///
/// The basis change is triangular (degree-preserving), so `n` coefficients
/// always suffice and [`nil_expand`]/[`nil_collect`] are exact mutual
/// inverses. Coefficients are ring elements so the same path serves both
/// pure-field polynomials and general ideal elements.
#[derive(Clone, PartialEq, Eq)]
pub struct NilExpansion {
    base: FieldElement,
    lambda: RingElement,
    coeffs: Vec<RingElement>,
}

impl NilExpansion {
    pub fn base(&self) -> &FieldElement {
        &self.base
    }

    pub fn lambda(&self) -> &RingElement {
        &self.lambda
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Builds an expansion directly from field coefficients `c_j`, meaning
    /// the polynomial `sum_j c_j (base * x - 1)^j`.
    pub fn from_field_coeffs(
        base: &FieldElement,
        lambda: &RingElement,
        n: usize,
        coeffs: &[FieldElement],
    ) -> Result<NilExpansion> {
        if coeffs.len() > n {
            return Err(Error::LengthMismatch {
                left: coeffs.len(),
                right: n,
            });
        }
        let ctx = base.ctx();
        let mut out: Vec<RingElement> = (0..n).map(|_| RingElement::zero(ctx)).collect();
        for (j, c) in coeffs.iter().enumerate() {
            if c.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
            out[j] = RingElement::from_field(c.clone());
        }
        Ok(NilExpansion {
            base: base.clone(),
            lambda: lambda.clone(),
            coeffs: out,
        })
    }

    pub fn sub(&self, other: &NilExpansion) -> Result<NilExpansion> {
        if self.base != other.base || self.coeffs.len() != other.coeffs.len() {
            return Err(Error::QuotientMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(NilExpansion {
            base: self.base.clone(),
            lambda: self.lambda.clone(),
            coeffs,
        })
    }

    /// Zeroes every coefficient with index `>= len`.
    pub fn truncated(&self, len: usize) -> NilExpansion {
        let ctx = self.base.ctx();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j < len {
                    c.clone()
                } else {
                    RingElement::zero(ctx)
                }
            })
            .collect();
        NilExpansion {
            base: self.base.clone(),
            lambda: self.lambda.clone(),
            coeffs,
        }
    }

    /// The coefficients as field elements; `None` if any u-part is nonzero.
    pub fn field_coeffs(&self) -> Option<Vec<FieldElement>> {
        if self.coeffs.iter().any(|c| !c.is_field()) {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.field_part().clone()).collect())
    }
}

impl fmt::Debug for NilExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nil(base={})[", self.base)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Expands `f` in the `(base * x - 1)` basis by iterated synthetic division.
///
/// Each round divides by `x - base^-1` (Horner), then rescales the quotient
/// by `base^-1` because `base * x - 1 = base * (x - base^-1)`.
pub fn nil_expand(f: &QuotientPoly, base: &FieldElement) -> Result<NilExpansion> {
    if base.is_zero() {
        return Err(Error::NotAUnit);
    }
    let n = f.n();
    let ctx = f.ctx();
    if base.ctx() != ctx {
        return Err(Error::MixedContexts);
    }
    let root = RingElement::from_field(base.inv()?);
    let base_inv = base.inv()?;
    let mut work: Vec<RingElement> = f.coeffs().to_vec();
    let mut out: Vec<RingElement> = Vec::with_capacity(n);
    for _ in 0..n {
        // Synthetic division of `work` by (x - root): remainder = work(root).
        let mut quot: Vec<RingElement> = (0..work.len().saturating_sub(1))
            .map(|_| RingElement::zero(ctx))
            .collect();
        let mut carry = RingElement::zero(ctx);
        for (k, c) in work.iter().enumerate().rev() {
            let value = c.add(&carry.mul(&root)?)?;
            if k == 0 {
                out.push(value.clone());
            } else {
                quot[k - 1] = value.clone();
            }
            carry = value;
        }
        // (base x - 1) q = (x - root) (base q).
        work = quot
            .iter()
            .map(|c| c.mul_field(&base_inv))
            .collect::<Result<_>>()?;
        if work.is_empty() {
            break;
        }
    }
    while out.len() < n {
        out.push(RingElement::zero(ctx));
    }
    Ok(NilExpansion {
        base: base.clone(),
        lambda: f.lambda().clone(),
        coeffs: out,
    })
}

/// Evaluates an expansion back into the monomial basis (Horner in the
/// binomial `base * x - 1`).
pub fn nil_collect(e: &NilExpansion) -> Result<QuotientPoly> {
    let n = e.coeffs.len();
    let lambda = &e.lambda;
    let ctx = e.base.ctx();
    let mut binomial = QuotientPoly::zero(lambda, n);
    binomial.coeffs[0] = RingElement::one(ctx).neg();
    binomial.coeffs[1] = RingElement::from_field(e.base.clone());
    let mut acc = QuotientPoly::zero(lambda, n);
    for c in e.coeffs.iter().rev() {
        let mut shifted = acc.mul(&binomial)?;
        shifted.coeffs[0] = shifted.coeffs[0].add(c)?;
        acc = shifted;
    }
    Ok(acc)
}

/// Nil-basis coefficients of a monomial-basis field polynomial with fewer
/// than `n` terms. Degrees below `n` never touch the modulus, so no quotient
/// constant is involved.
pub fn field_nil_coeffs(
    base: &FieldElement,
    coeffs: &[FieldElement],
    n: usize,
) -> Result<Vec<FieldElement>> {
    if coeffs.len() > n {
        return Err(Error::LengthMismatch {
            left: coeffs.len(),
            right: n,
        });
    }
    let one = RingElement::one(base.ctx());
    let poly = QuotientPoly::from_coeffs(
        &one,
        n,
        coeffs
            .iter()
            .map(|c| RingElement::from_field(c.clone()))
            .collect(),
    )?;
    let expansion = nil_expand(&poly, base)?;
    Ok(expansion
        .field_coeffs()
        .expect("field input stays in the field"))
}

/// The reciprocal `a_r + a_{r-1} x + ... + a_0 x^r` of a nonzero plain
/// polynomial of true degree `r`. Defined on explicit coefficient slices,
/// not on quotient representatives, because the true degree matters.
pub fn reciprocal(coeffs: &[RingElement]) -> Result<Vec<RingElement>> {
    let last = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroPolynomial)?;
    Ok(coeffs[..=last].iter().rev().cloned().collect())
}

/// The twisted inner product `sum_i x_i sigma(y_i)`, which is F_p-bilinear.
pub fn sigma_inner(
    x: &[RingElement],
    y: &[RingElement],
    sigma: &RingAut,
) -> Result<RingElement> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::LengthMismatch { left: 0, right: 0 });
    }
    let mut acc = RingElement::zero(x[0].ctx());
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(&sigma.apply(b))?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{nilpotent_base, FieldAut, FieldCtx};
    use alloc::vec;

    fn f9() -> Arc<FieldCtx> {
        FieldCtx::with_builtin_modulus(3, 2).unwrap()
    }

    fn f3() -> Arc<FieldCtx> {
        FieldCtx::with_builtin_modulus(3, 1).unwrap()
    }

    #[test]
    fn reduction_rule() {
        let ctx = f9();
        let w = RingElement::from_field(ctx.element(&[0, 1]).unwrap());
        let n = 9;
        let xk = QuotientPoly::x_power(&w, n, 8).unwrap();
        let x1 = QuotientPoly::x_power(&w, n, 1).unwrap();
        let prod = xk.mul(&x1).unwrap();
        let mut expect = QuotientPoly::zero(&w, n);
        expect.coeffs[0] = w.clone();
        assert_eq!(prod, expect);

        let f = QuotientPoly::from_coeffs(
            &w,
            n,
            vec![RingElement::one(&ctx), RingElement::u(&ctx)],
        )
        .unwrap();
        assert_eq!(f.mul(&QuotientPoly::one(&w, n)).unwrap(), f);
    }

    #[test]
    fn quotient_mismatch_rejected() {
        let ctx = f9();
        let one = RingElement::one(&ctx);
        let w = RingElement::from_field(ctx.element(&[0, 1]).unwrap());
        let f = QuotientPoly::one(&one, 9);
        let g = QuotientPoly::one(&w, 9);
        assert_eq!(f.mul(&g).unwrap_err(), Error::QuotientMismatch);
        let h = QuotientPoly::one(&one, 3);
        assert_eq!(f.add(&h).unwrap_err(), Error::QuotientMismatch);
    }

    #[test]
    fn nilpotency_over_field_constants() {
        // (g x - 1)^n = 0 for every unit constant, at three parameter sets.
        for (p, m, s) in [(3u64, 1usize, 1u32), (3, 2, 2), (5, 2, 1)] {
            let ctx = FieldCtx::with_builtin_modulus(p, m).unwrap();
            let n = p.pow(s) as usize;
            for gamma in ctx.units() {
                let g = nilpotent_base(&gamma, s).unwrap();
                let lambda = RingElement::from_field(gamma.clone());
                let power = nilpotent_power(&g, n as u64, &lambda, n).unwrap();
                assert!(power.is_zero(), "gamma = {gamma}");
                let below = nilpotent_power(&g, n as u64 - 1, &lambda, n).unwrap();
                assert!(!below.is_zero(), "gamma = {gamma}");
            }
        }
    }

    #[test]
    fn nilpotency_over_mixed_constants() {
        // Over lambda = alpha + u beta the n-th power is the unit multiple
        // u * beta / alpha of u and the 2n-th power vanishes.
        for (p, m, s) in [(3u64, 1usize, 1u32), (3, 1, 2), (5, 1, 1)] {
            let ctx = FieldCtx::with_builtin_modulus(p, m).unwrap();
            let n = p.pow(s) as usize;
            for alpha in ctx.units() {
                for beta in ctx.units() {
                    let lambda = RingElement::new(alpha.clone(), beta.clone()).unwrap();
                    let a0 = nilpotent_base(&alpha, s).unwrap();
                    let power = nilpotent_power(&a0, n as u64, &lambda, n).unwrap();
                    let scalar = beta.mul(&alpha.inv().unwrap()).unwrap();
                    let mut expect = QuotientPoly::zero(&lambda, n);
                    expect.coeffs[0] =
                        RingElement::new(ctx.zero(), scalar).unwrap();
                    assert_eq!(power, expect);
                    let square = nilpotent_power(&a0, 2 * n as u64, &lambda, n).unwrap();
                    assert!(square.is_zero());
                }
            }
        }
        let ctx = f3();
        let lambda = RingElement::one(&ctx);
        assert!(nilpotent_power(&ctx.one(), 0, &lambda, 3).unwrap() == QuotientPoly::one(&lambda, 3));
        assert_eq!(
            nilpotent_power(&ctx.one(), 7, &lambda, 3).unwrap_err(),
            Error::PowerOutOfRange { k: 7, max: 6 }
        );
    }

    #[test]
    fn nil_expansion_basics() {
        let ctx = f9();
        let gamma = ctx.element(&[0, 1]).unwrap();
        let lambda = RingElement::from_field(gamma.clone());
        let n = 9;
        let g = nilpotent_base(&gamma, 2).unwrap();

        // (g x - 1)^2 expands to the unit vector at index 2.
        let sq = nilpotent_power(&g, 2, &lambda, n).unwrap();
        let e = nil_expand(&sq, &g).unwrap();
        for (j, c) in e.coeffs().iter().enumerate() {
            assert_eq!(c.is_one(), j == 2);
            assert_eq!(c.is_zero(), j != 2);
        }

        // x = g^-1 ((g x - 1) + 1).
        let x = QuotientPoly::x_power(&lambda, n, 1).unwrap();
        let e = nil_expand(&x, &g).unwrap();
        let gi = RingElement::from_field(g.inv().unwrap());
        assert_eq!(e.coeffs()[0], gi);
        assert_eq!(e.coeffs()[1], gi);
        assert!(e.coeffs()[2..].iter().all(|c| c.is_zero()));

        assert_eq!(nil_collect(&e).unwrap(), x);

        // Monomial-basis field input converts through the same path.
        let coeffs = field_nil_coeffs(&g, &[ctx.zero(), ctx.one()], n).unwrap();
        assert_eq!(coeffs[0], g.inv().unwrap());
        assert_eq!(coeffs[1], g.inv().unwrap());
        assert!(coeffs[2..].iter().all(FieldElement::is_zero));

        // Zero expansion collects to the zero polynomial; the unit vector at
        // index 0 collects to the constant 1.
        let zero =
            NilExpansion::from_field_coeffs(&g, &lambda, n, &[]).unwrap();
        assert!(nil_collect(&zero).unwrap().is_zero());
        let unit =
            NilExpansion::from_field_coeffs(&g, &lambda, n, &[ctx.one()]).unwrap();
        assert_eq!(nil_collect(&unit).unwrap(), QuotientPoly::one(&lambda, n));
    }

    #[test]
    fn reciprocal_rows() {
        let ctx = f3();
        let c2 = RingElement::from_field(ctx.from_int(2));
        let one = RingElement::one(&ctx);
        assert_eq!(reciprocal(std::slice::from_ref(&c2)).unwrap(), vec![c2.clone()]);
        // 1 + 2x -> 2 + x.
        assert_eq!(
            reciprocal(&[one.clone(), c2.clone()]).unwrap(),
            vec![c2.clone(), one.clone()]
        );
        let zero = RingElement::zero(&ctx);
        assert_eq!(reciprocal(&[zero]).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn sigma_map_and_inner_product() {
        let ctx = f9();
        let one = RingElement::one(&ctx);
        let u = RingElement::u(&ctx);
        let id = RingAut::identity(&ctx);
        let n = 3;

        let f = QuotientPoly::from_coeffs(&one, n, vec![one.clone(), u.clone()]).unwrap();
        assert_eq!(f.sigma_map(&id), f);

        let eps = ctx.from_int(2);
        let aut = RingAut::new(FieldAut { h: 1 }, eps.clone()).unwrap();
        // sigma(u f) = u eps sigma(f).
        let uf = f.scale(&u).unwrap();
        let lhs = uf.sigma_map(&aut);
        let rhs = f
            .sigma_map(&aut)
            .scale(&RingElement::u(&ctx).mul_field(&eps).unwrap())
            .unwrap();
        assert_eq!(lhs.coeffs(), rhs.coeffs());

        // Inner product rows.
        let e0 = [one.clone(), RingElement::zero(&ctx)];
        let e1 = [RingElement::zero(&ctx), one.clone()];
        assert!(sigma_inner(&e0, &e1, &id).unwrap().is_zero());
        assert!(sigma_inner(std::slice::from_ref(&u), std::slice::from_ref(&u), &aut).unwrap().is_zero());
        let x = [one.add(&u).unwrap()];
        let y = [one.clone()];
        assert_eq!(sigma_inner(&x, &y, &id).unwrap(), one.add(&u).unwrap());
        assert_eq!(
            sigma_inner(&e0, std::slice::from_ref(&one), &id).unwrap_err(),
            Error::LengthMismatch { left: 2, right: 1 }
        );
    }

    #[test]
    fn inner_product_equals_euclidean_after_map() {
        let ctx = f9();
        let one = RingElement::one(&ctx);
        let n = 3;
        let mut lcg: u64 = 7;
        let mut next = || {
            lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            lcg >> 33
        };
        let rand_e = |k: u64| {
            let a = ctx.element(&[k % 3, (k / 3) % 3]).unwrap();
            let b = ctx.element(&[(k / 9) % 3, (k / 27) % 3]).unwrap();
            RingElement::new(a, b).unwrap()
        };
        for sigma in crate::chain_ring::all_automorphisms(&ctx) {
            for _ in 0..20 {
                let x: Vec<_> = (0..n).map(|_| rand_e(next())).collect();
                let y: Vec<_> = (0..n).map(|_| rand_e(next())).collect();
                let direct = sigma_inner(&x, &y, &sigma).unwrap();
                let mapped = QuotientPoly::from_coeffs(&one, n, y.clone())
                    .unwrap()
                    .sigma_map(&sigma);
                let id = RingAut::identity(&ctx);
                let euclid = sigma_inner(&x, mapped.coeffs(), &id).unwrap();
                assert_eq!(direct, euclid);
            }
        }
    }

    #[test]
    fn quotient_ring_axioms_sampled() {
        // 500 random triples at p = 3, m = 1, s = 1.
        let ctx = f3();
        let lambda = RingElement::one(&ctx);
        let n = 3;
        let mut state: u64 = 0x243f6a8885a308d3;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut rand_poly = || {
            let coeffs: Vec<RingElement> = (0..n)
                .map(|_| {
                    let k = next();
                    RingElement::new(
                        ctx.from_int((k % 3) as i64),
                        ctx.from_int(((k / 3) % 3) as i64),
                    )
                    .unwrap()
                })
                .collect();
            QuotientPoly::from_coeffs(&lambda, n, coeffs).unwrap()
        };
        for _ in 0..500 {
            let f = rand_poly();
            let g = rand_poly();
            let h = rand_poly();
            assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            assert_eq!(
                f.mul(&g.mul(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().mul(&h).unwrap()
            );
            assert_eq!(
                f.add(&g.add(&h).unwrap()).unwrap(),
                f.add(&g).unwrap().add(&h).unwrap()
            );
            assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn twist_is_ring_isomorphism() {
        // f -> f(g x) from the cyclic quotient to the gamma-constacyclic one:
        // additive, multiplicative, bijective (checked via the inverse twist).
        let ctx = f9();
        let gamma = ctx.element(&[0, 1]).unwrap();
        let g = nilpotent_base(&gamma, 2).unwrap();
        let one = RingElement::one(&ctx);
        let n = 9;

        let mut lcg: u64 = 99;
        let mut next = || {
            lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            lcg >> 33
        };
        let rand_poly = |seed: &mut dyn FnMut() -> u64| {
            let coeffs: Vec<RingElement> = (0..n)
                .map(|_| {
                    let k = seed();
                    let a = ctx.element(&[k % 3, (k / 3) % 3]).unwrap();
                    let b = ctx.element(&[(k / 9) % 3, (k / 27) % 3]).unwrap();
                    RingElement::new(a, b).unwrap()
                })
                .collect();
            QuotientPoly::from_coeffs(&one, n, coeffs).unwrap()
        };

        for _ in 0..100 {
            let f = rand_poly(&mut next);
            let h = rand_poly(&mut next);
            let tf = f.twist(&g).unwrap();
            let th = h.twist(&g).unwrap();
            assert_eq!(
                tf.lambda(),
                &RingElement::from_field(gamma.clone()),
                "target constant"
            );
            assert_eq!(f.add(&h).unwrap().twist(&g).unwrap(), tf.add(&th).unwrap());
            assert_eq!(f.mul(&h).unwrap().twist(&g).unwrap(), tf.mul(&th).unwrap());
            // Injective on samples: invert by twisting with g^-1.
            let back = tf.twist(&g.inv().unwrap()).unwrap();
            assert_eq!(back, f);
        }
    }

    proptest::proptest! {
        #[test]
        fn nil_expand_collect_roundtrip(seed in 0u64..5000) {
            let ctx = f9();
            let gamma = ctx.element(&[0, 1]).unwrap();
            let g = nilpotent_base(&gamma, 2).unwrap();
            let lambda = RingElement::from_field(gamma);
            let n = 9;
            let mut k = seed;
            let coeffs: Vec<RingElement> = (0..n)
                .map(|_| {
                    k = k.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                    let v = k >> 20;
                    let a = ctx.element(&[v % 3, (v / 3) % 3]).unwrap();
                    let b = ctx.element(&[(v / 9) % 3, (v / 27) % 3]).unwrap();
                    RingElement::new(a, b).unwrap()
                })
                .collect();
            let f = QuotientPoly::from_coeffs(&lambda, n, coeffs).unwrap();
            let e = nil_expand(&f, &g).unwrap();
            proptest::prop_assert_eq!(nil_collect(&e).unwrap(), f);
        }

        #[test]
        fn reciprocal_involution(seed in 0u64..5000) {
            // (f*)* = f whenever f(0) != 0.
            let ctx = f3();
            let mut k = seed;
            let mut coeffs: Vec<RingElement> = (0..5)
                .map(|_| {
                    k = k.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                    let v = k >> 20;
                    RingElement::new(ctx.from_int((v % 3) as i64), ctx.from_int(((v / 3) % 3) as i64))
                        .unwrap()
                })
                .collect();
            coeffs[0] = RingElement::one(&ctx);
            let twice = reciprocal(&reciprocal(&coeffs).unwrap()).unwrap();
            let trimmed = coeffs[..=coeffs.iter().rposition(|c| !c.is_zero()).unwrap()].to_vec();
            proptest::prop_assert_eq!(twice, trimmed);
        }
    }
}
