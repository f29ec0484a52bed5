//! Exact arithmetic in F_p and F_{p^m}.
//!
//! A [`FieldCtx`] fixes an odd prime `p`, an extension degree `m`, and a monic
//! irreducible modulus of degree `m` over F_p. Elements are canonical
//! coefficient vectors of length `m` with respect to that modulus, so equality
//! is coefficient-wise. Besides the field operations the module provides
//! Frobenius powers, the Euler squareness test, and the extraction of the
//! nilpotent base `g` with `g^{p^s} * c = 1` that underlies the constacyclic
//! classification.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest `p^m` (and `p^s`) the crate accepts. Everything here is built for
/// exhaustive desk-scale verification, not cryptographic sizes.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// A fixed base field `F_{p^m} = F_p[y] / (modulus)`.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    /// Monic irreducible modulus, coefficients low-to-high, length `m + 1`.
    modulus: Vec<u64>,
}

/// An element of F_{p^m}: a length-`m` coefficient vector over F_p.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<u64>,
}

/// A field automorphism `a -> a^{p^h}` of F_{p^m}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldAut {
    pub h: usize,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The modulus this crate ships for the handful of fields its fixtures use:
/// `x` for prime fields, `x^2 + 1` over F_3 and `x^2 + 3` over F_5.
pub fn builtin_modulus(p: u64, m: usize) -> Option<Vec<u64>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        (5, 2) => Some(vec![3, 0, 1]),
        _ => None,
    }
}

impl FieldCtx {
    /// Builds a field context, checking that `p` is an odd prime and that the
    /// modulus is monic of degree `m` and irreducible over F_p (by exhaustive
    /// trial division, which is cheap at this scale).
    pub fn new(p: u64, m: usize, modulus: Vec<u64>) -> Result<Arc<FieldCtx>> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime { p });
        }
        if m == 0 {
            return Err(Error::BadModulus {
                reason: "degree must be positive",
            });
        }
        let mut order: u64 = 1;
        for _ in 0..m {
            order = order.checked_mul(p).ok_or(Error::FieldTooLarge)?;
            if order > MAX_FIELD_ORDER {
                return Err(Error::FieldTooLarge);
            }
        }
        if modulus.len() != m + 1 {
            return Err(Error::BadModulus {
                reason: "length must be m + 1",
            });
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus {
                reason: "coefficient out of range",
            });
        }
        if modulus[m] != 1 {
            return Err(Error::BadModulus {
                reason: "leading coefficient must be 1",
            });
        }
        let ctx = FieldCtx { p, m, modulus };
        if !ctx.modulus_is_irreducible() {
            return Err(Error::ReducibleModulus);
        }
        Ok(Arc::new(ctx))
    }

    /// Convenience constructor using [`builtin_modulus`].
    pub fn with_builtin_modulus(p: u64, m: usize) -> Result<Arc<FieldCtx>> {
        let modulus = builtin_modulus(p, m).ok_or(Error::BadModulus {
            reason: "no built-in modulus for this (p, m)",
        })?;
        Self::new(p, m, modulus)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^m`, the number of field elements.
    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    // Trial division against every monic polynomial of degree 1..=m/2.
    fn modulus_is_irreducible(&self) -> bool {
        for d in 1..=(self.m / 2) {
            let count = self.p.pow(d as u32);
            for k in 0..count {
                // Monic divisor candidate: low coefficients from base-p digits of k.
                let mut div = Vec::with_capacity(d + 1);
                let mut v = k;
                for _ in 0..d {
                    div.push(v % self.p);
                    v /= self.p;
                }
                div.push(1);
                if self.poly_rem_is_zero(&self.modulus, &div) {
                    return false;
                }
            }
        }
        true
    }

    fn poly_rem_is_zero(&self, num: &[u64], div: &[u64]) -> bool {
        let p = self.p;
        let d = div.len() - 1;
        let mut rem: Vec<u64> = num.to_vec();
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let top = rem.len() - 1;
            if lead != 0 {
                // div is monic, so the quotient coefficient is just `lead`.
                for (r, &dv) in rem[top - d..].iter_mut().zip(div) {
                    *r = (*r + p - lead * dv % p) % p;
                }
            }
            rem.pop();
        }
        rem.iter().all(|&c| c == 0)
    }

    /// Canonical element from a coefficient vector of any length; coefficients
    /// beyond degree `m - 1` are reduced against the modulus. Entries must
    /// already lie in `[0, p)`.
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        for (index, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::CoefficientOutOfRange { index });
            }
        }
        let mut work = coeffs.to_vec();
        // Reduce from the top: y^m = -(low part of modulus).
        while work.len() > self.m {
            let lead = work.pop().unwrap();
            if lead != 0 {
                let top = work.len() - self.m;
                for j in 0..self.m {
                    let sub = lead * self.modulus[j] % self.p;
                    work[top + j] = (work[top + j] + self.p - sub) % self.p;
                }
            }
        }
        work.resize(self.m, 0);
        Ok(FieldElement {
            ctx: Arc::clone(self),
            coeffs: work,
        })
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            ctx: Arc::clone(self),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = 1;
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    /// Element from an integer, i.e. the image of `k` in the prime subfield.
    pub fn from_int(self: &Arc<Self>, k: i64) -> FieldElement {
        let r = k.rem_euclid(self.p as i64) as u64;
        let mut coeffs = vec![0; self.m];
        coeffs[0] = r;
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    /// All `p^m` elements in a fixed order: the element with index `k` has
    /// coefficients given by the base-`p` digits of `k`, least significant
    /// digit first.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let ctx = Arc::clone(self);
        (0..self.order()).map(move |k| ctx.element_by_index(k))
    }

    /// All nonzero elements, in the same order as [`FieldCtx::elements`].
    pub fn units(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements().filter(|e| !e.is_zero())
    }

    fn element_by_index(self: &Arc<Self>, k: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        let mut v = k;
        for c in coeffs.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        FieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }
}

impl FieldElement {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Position of this element in the [`FieldCtx::elements`] order.
    pub fn index(&self) -> u64 {
        let mut k = 0;
        for &c in self.coeffs.iter().rev() {
            k = k * self.ctx.p + c;
        }
        k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn same_ctx(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::MixedContexts)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_ctx(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.ctx.p;
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_ctx(other)?;
        let p = self.ctx.p;
        let m = self.ctx.m;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        self.ctx.element(&prod)
    }

    /// `self^-1`; errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::NotAUnit);
        }
        // a^(q - 2) = a^-1 by Lagrange on the unit group.
        self.pow(self.ctx.order() as i64 - 2)
    }

    /// Integer power; negative exponents invert via the unit-group order.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if self.is_zero() {
            return match e {
                0 => Ok(self.ctx.one()),
                _ if e < 0 => Err(Error::NotAUnit),
                _ => Ok(self.ctx.zero()),
            };
        }
        let group = self.ctx.order() as i64 - 1;
        let mut exp = e.rem_euclid(group) as u64;
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Frobenius power `self^{p^h}`.
    pub fn frobenius(&self, aut: FieldAut) -> FieldElement {
        let h = aut.h % self.ctx.m;
        let mut out = self.clone();
        for _ in 0..h {
            out = out.pow(self.ctx.p as i64).expect("nonnegative power");
        }
        out
    }

    /// Euler criterion: a nonzero `a` is a square iff `a^{(q-1)/2} = 1`.
    pub fn is_square(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::NotAUnit);
        }
        let half = (self.ctx.order() - 1) / 2;
        Ok(self.pow(half as i64)?.is_one())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FieldAut {
    pub fn identity() -> FieldAut {
        FieldAut { h: 0 }
    }

    /// The inverse automorphism in Aut(F_{p^m}), which is cyclic of order `m`.
    pub fn invert(&self, m: usize) -> FieldAut {
        FieldAut {
            h: (m - self.h % m) % m,
        }
    }
}

/// The base `g = c^{-p^{m - (s mod m)}}` satisfying `g^{p^s} = c^{-1}`.
///
/// With `n = p^s` this makes `g x - 1` nilpotent in the quotient by
/// `x^n - c` (index `n`) and in the quotient by `x^n - (c + u*d)` with
/// `d != 0` (index `2n`), which is what the whole classification hangs on.
pub fn nilpotent_base(c: &FieldElement, s: u32) -> Result<FieldElement> {
    if c.is_zero() {
        return Err(Error::NotAUnit);
    }
    let m = c.ctx().m();
    let r = (s as usize) % m;
    let exp = c.ctx().p().pow((m - r) as u32);
    c.pow(-(exp as i64))
}
