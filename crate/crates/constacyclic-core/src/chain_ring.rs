//! The chain ring R = F_{p^m} + uF_{p^m} with u^2 = 0, and its automorphisms.
//!
//! Elements are pairs `a + u b` of field elements. `a + u b` is a unit exactly
//! when `a != 0`, and then `(a + u b)^-1 = a^-1 - u a^-2 b`. Every ring
//! automorphism has the shape `a + u b -> theta(a) + u e theta(b)` for a field
//! automorphism `theta` and a nonzero scalar `e`; [`RingAut`] stores that
//! `(theta, e)` pair.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldAut, FieldCtx, FieldElement};

/// An element `a + u b` of R.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    a: FieldElement,
    b: FieldElement,
}

impl RingElement {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<RingElement> {
        if a.ctx() != b.ctx() {
            return Err(Error::MixedContexts);
        }
        Ok(RingElement { a, b })
    }

    pub fn from_field(a: FieldElement) -> RingElement {
        let b = a.ctx().zero();
        RingElement { a, b }
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> RingElement {
        RingElement {
            a: ctx.zero(),
            b: ctx.zero(),
        }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> RingElement {
        RingElement {
            a: ctx.one(),
            b: ctx.zero(),
        }
    }

    /// The generator `u` of the maximal ideal.
    pub fn u(ctx: &Arc<FieldCtx>) -> RingElement {
        RingElement {
            a: ctx.zero(),
            b: ctx.one(),
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    pub fn field_part(&self) -> &FieldElement {
        &self.a
    }

    pub fn u_part(&self) -> &FieldElement {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }

    /// Whether the element lies in the base field (zero u-part).
    pub fn is_field(&self) -> bool {
        self.b.is_zero()
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        Ok(RingElement {
            a: self.a.add(&other.a)?,
            b: self.b.add(&other.b)?,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        Ok(RingElement {
            a: self.a.sub(&other.a)?,
            b: self.b.sub(&other.b)?,
        })
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)` since `u^2 = 0`.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        let a = self.a.mul(&other.a)?;
        let b = self.a.mul(&other.b)?.add(&self.b.mul(&other.a)?)?;
        Ok(RingElement { a, b })
    }

    pub fn mul_field(&self, scalar: &FieldElement) -> Result<RingElement> {
        Ok(RingElement {
            a: self.a.mul(scalar)?,
            b: self.b.mul(scalar)?,
        })
    }

    /// Multiplication by `u`: `u(a + ub) = ua`.
    pub fn mul_u(&self) -> RingElement {
        RingElement {
            a: self.a.ctx().zero(),
            b: self.a.clone(),
        }
    }

    /// `(a + ub)^-1 = a^-1 - u a^-2 b`; errors when `a = 0`.
    pub fn inv(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let ai = self.a.inv()?;
        let b = ai.mul(&ai)?.mul(&self.b)?.neg();
        Ok(RingElement { a: ai, b })
    }

    pub fn pow(&self, e: u64) -> Result<RingElement> {
        let mut acc = RingElement::one(self.ctx());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+u{}", self.a, self.b)
    }
}

/// A ring automorphism `a + u b -> theta(a) + u e theta(b)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingAut {
    theta: FieldAut,
    epsilon: FieldElement,
}

impl RingAut {
    pub fn new(theta: FieldAut, epsilon: FieldElement) -> Result<RingAut> {
        if epsilon.is_zero() {
            return Err(Error::NotAUnit);
        }
        let m = epsilon.ctx().m();
        Ok(RingAut {
            theta: FieldAut { h: theta.h % m },
            epsilon,
        })
    }

    pub fn identity(ctx: &Arc<FieldCtx>) -> RingAut {
        RingAut {
            theta: FieldAut::identity(),
            epsilon: ctx.one(),
        }
    }

    pub fn theta(&self) -> FieldAut {
        self.theta
    }

    pub fn epsilon(&self) -> &FieldElement {
        &self.epsilon
    }

    pub fn is_identity(&self) -> bool {
        self.theta.h == 0 && self.epsilon.is_one()
    }

    pub fn apply(&self, x: &RingElement) -> RingElement {
        let a = x.field_part().frobenius(self.theta);
        let b = x
            .u_part()
            .frobenius(self.theta)
            .mul(&self.epsilon)
            .expect("epsilon shares the element context");
        RingElement { a, b }
    }

    pub fn apply_field(&self, x: &FieldElement) -> FieldElement {
        x.frobenius(self.theta)
    }

    /// The inverse automorphism `(theta^-1, theta^-1(e^-1))`, verified by
    /// exhaustive composition in the tests.
    pub fn invert(&self) -> RingAut {
        let m = self.epsilon.ctx().m();
        let theta_inv = self.theta.invert(m);
        let epsilon = self
            .epsilon
            .inv()
            .expect("epsilon is a unit")
            .frobenius(theta_inv);
        RingAut {
            theta: theta_inv,
            epsilon,
        }
    }
}

impl fmt::Debug for RingAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h={};eps={}", self.theta.h, self.epsilon)
    }
}

/// Every automorphism of R, ordered by `h` then by the unit scalar.
/// There are `m * (p^m - 1)` of them.
pub fn all_automorphisms(ctx: &Arc<FieldCtx>) -> Vec<RingAut> {
    let mut out = Vec::new();
    for h in 0..ctx.m() {
        for epsilon in ctx.units() {
            out.push(RingAut {
                theta: FieldAut { h },
                epsilon,
            });
        }
    }
    out
}

/// The constant of the ambient ring of the twisted dual: `sigma^-1(lambda^-1)`.
///
/// For `lambda = alpha + u beta` with both parts nonzero this has the closed
/// form `theta(alpha^-1) - u e theta(beta alpha^-2)` where `(theta, e)` are
/// the parameters of `sigma^-1`.
pub fn dual_constant(lambda: &RingElement, sigma: &RingAut) -> Result<RingElement> {
    if !lambda.is_unit() {
        return Err(Error::NotAUnit);
    }
    Ok(sigma.invert().apply(&lambda.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use alloc::vec;

    fn f9() -> Arc<FieldCtx> {
        FieldCtx::with_builtin_modulus(3, 2).unwrap()
    }

    fn f5() -> Arc<FieldCtx> {
        FieldCtx::with_builtin_modulus(5, 1).unwrap()
    }

    fn all_ring_elements(ctx: &Arc<FieldCtx>) -> Vec<RingElement> {
        let mut out = Vec::new();
        for a in ctx.elements() {
            for b in ctx.elements() {
                out.push(RingElement::new(a.clone(), b).unwrap());
            }
        }
        out
    }

    #[test]
    fn u_squares_to_zero() {
        let ctx = f9();
        let u = RingElement::u(&ctx);
        assert!(u.mul(&u).unwrap().is_zero());
    }

    #[test]
    fn unit_times_inverse() {
        let ctx = f9();
        let one_plus_u = RingElement::new(ctx.one(), ctx.one()).unwrap();
        let one_minus_u = RingElement::new(ctx.one(), ctx.from_int(-1)).unwrap();
        assert!(one_plus_u.mul(&one_minus_u).unwrap().is_one());
        assert_eq!(one_plus_u.inv().unwrap(), one_minus_u);

        // A field element embeds with its field inverse.
        let a = RingElement::from_field(ctx.from_int(2));
        assert_eq!(a.inv().unwrap(), RingElement::from_field(ctx.from_int(2)));

        assert_eq!(RingElement::u(&ctx).inv().unwrap_err(), Error::NotAUnit);

        // Exhaustive: x * x^-1 = 1 for every unit of the 81-element ring.
        for x in all_ring_elements(&ctx) {
            if x.is_unit() {
                assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn product_rule_hand_expansion() {
        // (2 + 3u)(4 + u) over F_5: ac = 8 = 3, ad + bc = 2 + 12 = 14 = 4.
        let ctx = f5();
        let x = RingElement::new(ctx.from_int(2), ctx.from_int(3)).unwrap();
        let y = RingElement::new(ctx.from_int(4), ctx.from_int(1)).unwrap();
        let expect = RingElement::new(ctx.from_int(3), ctx.from_int(4)).unwrap();
        assert_eq!(x.mul(&y).unwrap(), expect);
    }

    #[test]
    fn ring_axioms_exhaustive() {
        // Triples over every ring with at most 625 elements; the two larger
        // rings are checked through index tables built from the ring ops so
        // the triple loop stays fast.
        for ctx in [
            FieldCtx::with_builtin_modulus(3, 1).unwrap(),
            f5(),
            f9(),
            FieldCtx::with_builtin_modulus(5, 2).unwrap(),
        ] {
            let all = all_ring_elements(&ctx);
            let k = all.len();
            let idx = |e: &RingElement| -> usize {
                (e.field_part().index() * ctx.order() + e.u_part().index()) as usize
            };
            let mut mul = vec![0u16; k * k];
            let mut add = vec![0u16; k * k];
            for (i, x) in all.iter().enumerate() {
                for (j, y) in all.iter().enumerate() {
                    mul[i * k + j] = idx(&x.mul(y).unwrap()) as u16;
                    add[i * k + j] = idx(&x.add(y).unwrap()) as u16;
                }
            }
            for i in 0..k {
                for j in 0..k {
                    assert_eq!(mul[i * k + j], mul[j * k + i]);
                    assert_eq!(add[i * k + j], add[j * k + i]);
                    for l in 0..k {
                        let ij_l = mul[mul[i * k + j] as usize * k + l];
                        let i_jl = mul[i * k + mul[j * k + l] as usize];
                        assert_eq!(ij_l, i_jl);
                        let distl = mul[i * k + add[j * k + l] as usize];
                        let distr = add[mul[i * k + j] as usize * k + mul[i * k + l] as usize];
                        assert_eq!(distl, distr);
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_application() {
        let ctx = f9();
        let w = ctx.element(&[0, 1]).unwrap();
        let x = RingElement::new(w.clone(), w.clone()).unwrap();

        let id = RingAut::identity(&ctx);
        assert_eq!(id.apply(&x), x);

        // Componentwise Frobenius oracle: w -> w^3 = 2w.
        let frob = RingAut::new(FieldAut { h: 1 }, ctx.one()).unwrap();
        let w3 = w.mul(&w).unwrap().mul(&w).unwrap();
        let expect = RingElement::new(w3.clone(), w3).unwrap();
        assert_eq!(frob.apply(&x), expect);

        // sigma(u) = u * epsilon by definition.
        let eps = ctx.element(&[1, 1]).unwrap();
        let aut = RingAut::new(FieldAut { h: 0 }, eps.clone()).unwrap();
        let image = aut.apply(&RingElement::u(&ctx));
        assert_eq!(image, RingElement::new(ctx.zero(), eps).unwrap());
    }

    #[test]
    fn automorphisms_are_multiplicative_and_additive() {
        let ctx = f9();
        let all = all_ring_elements(&ctx);
        for aut in all_automorphisms(&ctx) {
            for x in &all {
                for y in &all {
                    assert_eq!(
                        aut.apply(&x.mul(y).unwrap()),
                        aut.apply(x).mul(&aut.apply(y)).unwrap()
                    );
                    assert_eq!(
                        aut.apply(&x.add(y).unwrap()),
                        aut.apply(x).add(&aut.apply(y)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_automorphism_composition() {
        let ctx = f9();
        assert!(RingAut::identity(&ctx).invert().is_identity());

        let frob = RingAut::new(FieldAut { h: 1 }, ctx.one()).unwrap();
        let frob_inv = frob.invert();
        assert_eq!(frob_inv.theta().h, 1);
        assert!(frob_inv.epsilon().is_one());

        let ctx5 = f5();
        let aut = RingAut::new(FieldAut { h: 0 }, ctx5.from_int(2)).unwrap();
        let inv = aut.invert();
        assert_eq!(inv.epsilon(), &ctx5.from_int(3));
        assert!(aut.epsilon().mul(inv.epsilon()).unwrap().is_one());

        // Two-sided inverse on all 81 elements for all 16 automorphisms.
        let autos = all_automorphisms(&ctx);
        assert_eq!(autos.len(), 16);
        let all = all_ring_elements(&ctx);
        for aut in &autos {
            let inv = aut.invert();
            for x in &all {
                assert_eq!(inv.apply(&aut.apply(x)), *x);
                assert_eq!(aut.apply(&inv.apply(x)), *x);
            }
        }
    }

    #[test]
    fn dual_constant_closed_form() {
        let ctx = f9();
        let id = RingAut::identity(&ctx);
        assert!(dual_constant(&RingElement::one(&ctx), &id).unwrap().is_one());

        // lambda = w, sigma = Frobenius with e = 1: the dual constant is
        // Frob(w^-1) = (2w)^3 = w.
        let w = ctx.element(&[0, 1]).unwrap();
        let frob = RingAut::new(FieldAut { h: 1 }, ctx.one()).unwrap();
        let d = dual_constant(&RingElement::from_field(w.clone()), &frob).unwrap();
        assert_eq!(d, RingElement::from_field(w));

        assert_eq!(
            dual_constant(&RingElement::u(&ctx), &id).unwrap_err(),
            Error::NotAUnit
        );

        // Closed form theta(a^-1) - u e theta(b a^-2) against the generic
        // path, for every unit lambda and every automorphism.
        for sigma in all_automorphisms(&ctx) {
            let inv = sigma.invert();
            for lambda in all_ring_elements(&ctx).iter().filter(|x| x.is_unit()) {
                let generic = dual_constant(lambda, &sigma).unwrap();
                let ai = lambda.field_part().inv().unwrap();
                let a = inv.apply_field(&ai);
                let b = inv
                    .apply_field(&lambda.u_part().mul(&ai).unwrap().mul(&ai).unwrap())
                    .mul(inv.epsilon())
                    .unwrap()
                    .neg();
                assert_eq!(generic, RingElement::new(a, b).unwrap());
            }
        }
    }

    #[test]
    fn double_dual_constant_closes() {
        let ctx = f9();
        for sigma in all_automorphisms(&ctx) {
            for lambda in all_ring_elements(&ctx).iter().filter(|x| x.is_unit()) {
                let d = dual_constant(lambda, &sigma).unwrap();
                assert_eq!(&sigma.apply(&d.inv().unwrap()), lambda);
            }
        }
    }
}
