//! Classification records for the ideals of `R[x]/<x^n - lambda>` with
//! n = p^s, and the exact F_p-linear span machinery behind them.
//!
//! For `lambda = alpha + u beta` with both parts nonzero the quotient is a
//! chain ring and every ideal is a power of the nilpotent binomial
//! ([`CodeKind::Chain`]). For `lambda` a unit of the base field the quotient
//! is local but not a chain ring and the ideals split into the trivial pair,
//! principal ideals with nonmonic generators, principal ideals with monic
//! generators, and nonprincipal ideals ([`CodeKind::Type2`] through
//! [`CodeKind::Type4`]).
//!
//! A [`CodeSpec`] is an untrusted record; [`validate`] checks every
//! classification constraint by name, canonicalizes the representative, and
//! caches the derived quantities (the nilpotent base and the torsion
//! exponent `T`) in a [`ValidatedSpec`].

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain_ring::RingElement;
use crate::error::{Error, Result, Violation};
use crate::gf::{nilpotent_base, FieldCtx, FieldElement};
use crate::linalg;
use crate::polyquot::{nil_collect, nilpotent_power, NilExpansion, QuotientPoly};

/// Which ideal of the classification a spec denotes.
///
/// `h` is stored as its coefficients in the `(base * x - 1)` basis, low index
/// first, with trailing zeros trimmed; an empty vector is the zero
/// polynomial. A nonzero `h` must be a unit, i.e. have `h[0] != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeKind {
    /// `<(a0 x - 1)^i>` in the chain ring, `0 <= i <= 2 p^s`.
    Chain { i: u64 },
    /// The zero ideal.
    Type1Zero,
    /// The whole ring.
    Type1Whole,
    /// `<u (g x - 1)^i>`, `0 <= i <= p^s - 1`.
    Type2 { i: u64 },
    /// `<(g x - 1)^i + u (g x - 1)^t h(x)>`, `1 <= i <= p^s - 1`.
    Type3 { i: u64, t: u64, h: Vec<FieldElement> },
    /// `<(g x - 1)^i + u (g x - 1)^t h(x), u (g x - 1)^omega>`, with
    /// `omega < T`.
    Type4 {
        i: u64,
        t: u64,
        h: Vec<FieldElement>,
        omega: u64,
    },
}

impl CodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            CodeKind::Chain { .. } => "chain",
            CodeKind::Type1Zero => "type1_zero",
            CodeKind::Type1Whole => "type1_whole",
            CodeKind::Type2 { .. } => "type2",
            CodeKind::Type3 { .. } => "type3",
            CodeKind::Type4 { .. } => "type4",
        }
    }
}

/// An untrusted classification record: ambient field, length exponent `s`,
/// the constant `lambda`, and the claimed ideal shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub ctx: Arc<FieldCtx>,
    pub s: u32,
    pub lambda: RingElement,
    pub kind: CodeKind,
}

/// The smallest `T` with `u (g x - 1)^T` inside the principal ideal
/// `<(g x - 1)^i + u (g x - 1)^t h(x)>`: `i` when `h = 0`, otherwise
/// `min(i, p^s - i + t)`.
pub fn torsion_exponent(i: u64, t: u64, h_is_zero: bool, n: u64) -> u64 {
    if h_is_zero {
        i
    } else {
        i.min(n - i + t)
    }
}

/// A spec whose constraints all hold, with the nilpotent base and torsion
/// exponent precomputed.
#[derive(Debug, Clone)]
pub struct ValidatedSpec {
    spec: CodeSpec,
    n: usize,
    base: FieldElement,
    torsion_exp: Option<u64>,
}

fn trim_trailing_zeros(h: &mut Vec<FieldElement>) {
    while h.last().is_some_and(FieldElement::is_zero) {
        h.pop();
    }
}

/// Checks every classification constraint, reporting each violation by name,
/// and canonicalizes the representative: trailing zeros of `h` are trimmed,
/// `t` is normalized to 0 when `h = 0`, and a Type3 `h` is truncated to the
/// `T - t` coefficients that determine the ideal.
pub fn validate(spec: &CodeSpec) -> Result<ValidatedSpec> {
    let p = spec.ctx.p();
    let mut violations = Vec::new();
    if spec.s < 1 {
        return Err(Error::InvalidSpec(vec![Violation::SOutOfRange]));
    }
    let mut n: u64 = 1;
    for _ in 0..spec.s {
        n = n.checked_mul(p).ok_or(Error::FieldTooLarge)?;
        if n > crate::gf::MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge);
        }
    }
    if spec.lambda.ctx() != &spec.ctx {
        return Err(Error::MixedContexts);
    }

    let is_chain = matches!(spec.kind, CodeKind::Chain { .. });
    if spec.lambda.field_part().is_zero() {
        violations.push(Violation::LambdaFieldPartZero);
    }
    if is_chain {
        if spec.lambda.u_part().is_zero() {
            violations.push(Violation::LambdaUPartZero);
        }
    } else if !spec.lambda.u_part().is_zero() {
        violations.push(Violation::LambdaUPartNonzero);
    }

    let mut kind = spec.kind.clone();
    let mut torsion_exp = None;
    match &mut kind {
        CodeKind::Chain { i } => {
            if *i > 2 * n {
                violations.push(Violation::IOutOfRange { lo: 0, hi: 2 * n });
            }
        }
        CodeKind::Type1Zero | CodeKind::Type1Whole => {}
        CodeKind::Type2 { i } => {
            if *i > n - 1 {
                violations.push(Violation::IOutOfRange { lo: 0, hi: n - 1 });
            }
        }
        CodeKind::Type3 { i, t, h } => {
            trim_trailing_zeros(h);
            if *i < 1 || *i > n - 1 {
                violations.push(Violation::IOutOfRange { lo: 1, hi: n - 1 });
            } else if h.is_empty() {
                *t = 0;
                torsion_exp = Some(torsion_exponent(*i, 0, true, n));
            } else {
                if h[0].is_zero() {
                    violations.push(Violation::HConstantZero);
                }
                if *t >= *i {
                    violations.push(Violation::TOutOfRange { hi: *i - 1 });
                } else if (h.len() as u64) > *i - *t {
                    violations.push(Violation::HDegreeTooLarge { max: *i - *t - 1 });
                } else {
                    // The ideal only sees h modulo (g x - 1)^(T - t).
                    let big_t = torsion_exponent(*i, *t, false, n);
                    h.truncate((big_t - *t) as usize);
                    trim_trailing_zeros(h);
                    if h.is_empty() {
                        // Cannot happen: h[0] != 0 survives the truncation.
                        *t = 0;
                    }
                    torsion_exp =
                        Some(torsion_exponent(*i, *t, h.is_empty(), n));
                }
            }
        }
        CodeKind::Type4 { i, t, h, omega } => {
            trim_trailing_zeros(h);
            if *i < 1 || *i > n - 1 {
                violations.push(Violation::IOutOfRange { lo: 1, hi: n - 1 });
            } else if h.is_empty() {
                *t = 0;
                let big_t = torsion_exponent(*i, 0, true, n);
                torsion_exp = Some(big_t);
                if *omega >= big_t {
                    violations.push(Violation::OmegaNotBelowTorsionExponent);
                }
            } else {
                if h[0].is_zero() {
                    violations.push(Violation::HConstantZero);
                }
                if *t >= *i {
                    violations.push(Violation::TOutOfRange { hi: *i - 1 });
                } else {
                    let big_t = torsion_exponent(*i, *t, false, n);
                    torsion_exp = Some(big_t);
                    if *omega >= big_t {
                        violations.push(Violation::OmegaNotBelowTorsionExponent);
                    }
                    if *omega <= *t {
                        violations.push(Violation::OmegaTooSmallForH);
                    } else if (h.len() as u64) > *omega - *t {
                        violations.push(Violation::HDegreeTooLarge {
                            max: *omega - *t - 1,
                        });
                    }
                }
            }
        }
    }

    for h in kind_h(&kind) {
        if h.ctx() != &spec.ctx {
            return Err(Error::MixedContexts);
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidSpec(violations));
    }

    let base = nilpotent_base(spec.lambda.field_part(), spec.s)?;
    Ok(ValidatedSpec {
        spec: CodeSpec {
            ctx: Arc::clone(&spec.ctx),
            s: spec.s,
            lambda: spec.lambda.clone(),
            kind,
        },
        n: n as usize,
        base,
        torsion_exp,
    })
}

fn kind_h(kind: &CodeKind) -> &[FieldElement] {
    match kind {
        CodeKind::Type3 { h, .. } | CodeKind::Type4 { h, .. } => h,
        _ => &[],
    }
}

impl ValidatedSpec {
    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.spec.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &RingElement {
        &self.spec.lambda
    }

    pub fn kind(&self) -> &CodeKind {
        &self.spec.kind
    }

    /// The cached base `g` (often written `gamma_0` or `alpha_0`) with
    /// `g^{p^s} = lambda_field_part^{-1}`.
    pub fn base(&self) -> &FieldElement {
        &self.base
    }

    /// The cached torsion exponent `T` for Type3/Type4 specs.
    pub fn torsion_exp(&self) -> Option<u64> {
        self.torsion_exp
    }

    /// The literal generator polynomials of the classification: none for the
    /// zero ideal, one for principal kinds, two for Type4.
    pub fn generators(&self) -> Result<Vec<QuotientPoly>> {
        let n = self.n;
        let lambda = &self.spec.lambda;
        let ctx = &self.spec.ctx;
        let u = RingElement::u(ctx);
        match &self.spec.kind {
            CodeKind::Chain { i } => {
                Ok(vec![nilpotent_power(&self.base, *i, lambda, n)?])
            }
            CodeKind::Type1Zero => Ok(vec![]),
            CodeKind::Type1Whole => Ok(vec![QuotientPoly::one(lambda, n)]),
            CodeKind::Type2 { i } => {
                let g = nilpotent_power(&self.base, *i, lambda, n)?.scale(&u)?;
                Ok(vec![g])
            }
            CodeKind::Type3 { i, t, h } => {
                Ok(vec![self.monic_generator(*i, *t, h)?])
            }
            CodeKind::Type4 { i, t, h, omega } => {
                let second = nilpotent_power(&self.base, *omega, lambda, n)?.scale(&u)?;
                Ok(vec![self.monic_generator(*i, *t, h)?, second])
            }
        }
    }

    // (g x - 1)^i + u (g x - 1)^t h(x)
    fn monic_generator(&self, i: u64, t: u64, h: &[FieldElement]) -> Result<QuotientPoly> {
        let n = self.n;
        let lambda = &self.spec.lambda;
        let lead = nilpotent_power(&self.base, i, lambda, n)?;
        if h.is_empty() {
            return Ok(lead);
        }
        let h_poly = nil_collect(&NilExpansion::from_field_coeffs(
            &self.base, lambda, n, h,
        )?)?;
        let tail = nilpotent_power(&self.base, t, lambda, n)?
            .mul(&h_poly)?
            .scale(&RingElement::u(&self.spec.ctx))?;
        lead.add(&tail)
    }

    /// `e` with `|C| = p^e`, by exact case analysis on the classification.
    pub fn size_exponent(&self) -> u64 {
        let n = self.n as u64;
        let m = self.spec.ctx.m() as u64;
        match &self.spec.kind {
            CodeKind::Chain { i } => m * (2 * n - i),
            CodeKind::Type1Zero => 0,
            CodeKind::Type1Whole => 2 * m * n,
            CodeKind::Type2 { i } => m * (n - i),
            CodeKind::Type3 { i, t, h } => {
                // Same count for h = 0 and for a unit h below the midpoint.
                if h.is_empty() || 2 * i <= n + t {
                    2 * m * (n - i)
                } else {
                    m * (n - t)
                }
            }
            CodeKind::Type4 { i, omega, .. } => m * (2 * n - i - omega),
        }
    }

    /// The F_p-linear span of the generators and their ideal closure.
    pub fn span(&self) -> Result<SpanBasis> {
        span_basis(&self.spec.ctx, self.lambda(), self.n, &self.generators()?)
    }
}

/// An F_p-basis, in reduced row echelon form, of a linear code in R^n.
///
/// Vectors flatten to `F_p^{2mn}` ordered position-major, with the `m` field
/// coefficients of the field part followed by the `m` coefficients of the
/// u-part at each position.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    ctx: Arc<FieldCtx>,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl PartialEq for SpanBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.n == other.n && self.rows == other.rows
    }
}

impl Eq for SpanBasis {}

/// Flattens a ring vector to its `2mn` F_p coordinates.
pub fn flatten(word: &[RingElement]) -> Vec<u64> {
    let mut flat = Vec::new();
    for c in word {
        flat.extend_from_slice(c.field_part().coeffs());
        flat.extend_from_slice(c.u_part().coeffs());
    }
    flat
}

/// Inverse of [`flatten`].
pub fn unflatten(ctx: &Arc<FieldCtx>, flat: &[u64]) -> Result<Vec<RingElement>> {
    let m = ctx.m();
    if !flat.len().is_multiple_of(2 * m) {
        return Err(Error::DimensionMismatch {
            expected: 2 * m,
            got: flat.len(),
        });
    }
    flat.chunks(2 * m)
        .map(|chunk| {
            let a = ctx.element(&chunk[..m])?;
            let b = ctx.element(&chunk[m..])?;
            RingElement::new(a, b)
        })
        .collect()
}

/// Builds the span of the ideal generated by `gens`: the F_p-row space of
/// every generator multiplied by `x^k` and by each element of a fixed
/// F_p-basis of R (the field-basis powers and their u-multiples).
pub fn span_basis(
    ctx: &Arc<FieldCtx>,
    lambda: &RingElement,
    n: usize,
    gens: &[QuotientPoly],
) -> Result<SpanBasis> {
    let m = ctx.m();
    // 1, y, ..., y^(m-1): an F_p-basis of the field part.
    let mut scalars = Vec::with_capacity(m);
    let mut y = ctx.one();
    let gen = if m > 1 {
        let mut coeffs = vec![0u64; m];
        coeffs[1] = 1;
        ctx.element(&coeffs)?
    } else {
        ctx.one()
    };
    for _ in 0..m {
        scalars.push(y.clone());
        y = y.mul(&gen)?;
    }

    let x = QuotientPoly::x_power(lambda, n, 1)?;
    let mut rows = Vec::new();
    for g in gens {
        if g.n() != n || g.lambda() != lambda {
            return Err(Error::QuotientMismatch);
        }
        let mut shifted = g.clone();
        for _ in 0..n {
            for scalar in &scalars {
                let scaled = shifted.scale(&RingElement::from_field(scalar.clone()))?;
                rows.push(flatten(scaled.coeffs()));
                let u_scaled: Vec<RingElement> =
                    scaled.coeffs().iter().map(RingElement::mul_u).collect();
                rows.push(flatten(&u_scaled));
            }
            shifted = shifted.mul(&x)?;
        }
    }
    if rows.is_empty() {
        rows.push(vec![0; 2 * m * n]);
    }
    linalg::rref(&mut rows, ctx.p());
    Ok(SpanBasis {
        ctx: Arc::clone(ctx),
        n,
        rows,
    })
}

impl SpanBasis {
    /// The span of explicit codewords (no ideal closure).
    pub fn from_words(
        ctx: &Arc<FieldCtx>,
        n: usize,
        words: &[Vec<RingElement>],
    ) -> Result<SpanBasis> {
        let mut rows = Vec::new();
        for w in words {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
            rows.push(flatten(w));
        }
        linalg::rref(&mut rows, ctx.p());
        Ok(SpanBasis {
            ctx: Arc::clone(ctx),
            n,
            rows,
        })
    }

    pub fn empty(ctx: &Arc<FieldCtx>, n: usize) -> SpanBasis {
        SpanBasis {
            ctx: Arc::clone(ctx),
            n,
            rows: Vec::new(),
        }
    }

    pub(crate) fn from_rref_rows(ctx: &Arc<FieldCtx>, n: usize, rows: Vec<Vec<u64>>) -> SpanBasis {
        SpanBasis {
            ctx: Arc::clone(ctx),
            n,
            rows,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dimension(&self) -> usize {
        2 * self.ctx.m() * self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn rows_as_vectors(&self) -> Result<Vec<Vec<RingElement>>> {
        self.rows.iter().map(|r| unflatten(&self.ctx, r)).collect()
    }

    pub fn contains_flat(&self, flat: &[u64]) -> Result<bool> {
        if flat.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: flat.len(),
            });
        }
        Ok(linalg::in_span(flat, &self.rows, self.ctx.p()))
    }

    /// Membership of a ring vector in the F_p-row space.
    pub fn contains(&self, word: &[RingElement]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: word.len(),
            });
        }
        self.contains_flat(&flatten(word))
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> Result<bool> {
        for row in &self.rows {
            if !other.contains_flat(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of codewords as a `u128`, or `None` on overflow.
    pub fn count(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..self.rows.len() {
            acc = acc.checked_mul(self.ctx.p() as u128)?;
        }
        Some(acc)
    }

    /// Iterates every codeword exactly once as flat coordinate vectors, in
    /// lexicographic order of the combination coefficients. Refuses when the
    /// code has more than `cap` words.
    pub fn enumerate_flat(&self, cap: u128) -> Result<CodewordIter<'_>> {
        let needed = self.count().ok_or(Error::CapExceeded {
            needed: u128::MAX,
            cap,
        })?;
        if needed > cap {
            return Err(Error::CapExceeded { needed, cap });
        }
        Ok(CodewordIter {
            basis: self,
            coeffs: vec![0; self.rows.len()],
            done: false,
        })
    }

    /// Like [`SpanBasis::enumerate_flat`] but yielding ring vectors.
    pub fn enumerate(
        &self,
        cap: u128,
    ) -> Result<impl Iterator<Item = Vec<RingElement>> + '_> {
        let iter = self.enumerate_flat(cap)?;
        Ok(iter.map(|flat| unflatten(&self.ctx, &flat).expect("basis rows are well-formed")))
    }

    /// The torsion code `{b : u b in C}` and residue code `{a : a + u b in C}`
    /// as F_p-spans of flattened F_{p^m}^n vectors (position-major).
    pub fn torsion_residue(&self) -> (FieldSpan, FieldSpan) {
        let m = self.ctx.m();
        let mn = m * self.n;
        let p = self.ctx.p();

        // Residue: project each basis row to its field parts.
        let mut res_rows: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|row| {
                let mut out = Vec::with_capacity(mn);
                for pos in 0..self.n {
                    out.extend_from_slice(&row[pos * 2 * m..pos * 2 * m + m]);
                }
                out
            })
            .collect();
        linalg::rref(&mut res_rows, p);

        // Torsion: reorder coordinates to (all field parts | all u-parts);
        // rows of the reordered RREF whose pivot lies in the u-block are
        // exactly u * Tor(C).
        let mut reordered: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![0u64; 2 * mn];
                for pos in 0..self.n {
                    for j in 0..m {
                        out[pos * m + j] = row[pos * 2 * m + j];
                        out[mn + pos * m + j] = row[pos * 2 * m + m + j];
                    }
                }
                out
            })
            .collect();
        linalg::rref(&mut reordered, p);
        let mut tor_rows: Vec<Vec<u64>> = reordered
            .iter()
            .filter(|row| row[..mn].iter().all(|&c| c == 0))
            .map(|row| row[mn..].to_vec())
            .collect();
        linalg::rref(&mut tor_rows, p);

        (
            FieldSpan {
                p,
                cols: mn,
                rows: tor_rows,
            },
            FieldSpan {
                p,
                cols: mn,
                rows: res_rows,
            },
        )
    }
}

/// An F_p-span of vectors over F_{p^m}^n, flattened position-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpan {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl FieldSpan {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn contains(&self, flat: &[u64]) -> Result<bool> {
        if flat.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: flat.len(),
            });
        }
        Ok(linalg::in_span(flat, &self.rows, self.p))
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }
}

#[derive(Debug)]
pub struct CodewordIter<'a> {
    basis: &'a SpanBasis,
    coeffs: Vec<u64>,
    done: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let p = self.basis.ctx.p();
        let dim = self.basis.dimension();
        let mut word = vec![0u64; dim];
        for (c, row) in self.coeffs.iter().zip(&self.basis.rows) {
            if *c != 0 {
                for (w, r) in word.iter_mut().zip(row) {
                    *w = (*w + *c * *r) % p;
                }
            }
        }
        // Odometer: last coefficient moves fastest, so the coefficient
        // tuples come out in lexicographic order.
        let mut idx = self.coeffs.len();
        loop {
            if idx == 0 {
                self.done = true;
                break;
            }
            idx -= 1;
            self.coeffs[idx] += 1;
            if self.coeffs[idx] < p {
                break;
            }
            self.coeffs[idx] = 0;
        }
        Some(word)
    }
}

/// Hamming weight of a flat vector: the number of positions whose `2m`
/// coordinates are not all zero.
pub fn flat_weight(flat: &[u64], m: usize) -> usize {
    flat.chunks(2 * m)
        .filter(|chunk| chunk.iter().any(|&c| c != 0))
        .count()
}
