//! The three worked generator matrices, stored literally, and the analysis
//! that rebuilds each code from its rows.
//!
//! Each fixture carries the matrix, the constant the source text claims, a
//! list of candidate constants to test the rows against (the claimed one is
//! not always the one the rows satisfy), the automorphism under which the
//! code is claimed twisted-self-orthogonal, and candidate classification
//! records to match the span against. The analysis never corrects the rows;
//! it reports what they actually generate.

use std::fmt;
use std::sync::Arc;

use constacyclic_core::{
    oracle, span_basis, validate, CodeKind, CodeSpec, FieldAut, FieldCtx, QuotientPoly, RingAut,
    RingElement, SpanBasis, ValidatedSpec,
};

use crate::CliError;

pub struct Fixture {
    pub which: u8,
    pub ctx: Arc<FieldCtx>,
    pub s: u32,
    pub rows: Vec<Vec<RingElement>>,
    /// The constant the source text states.
    pub stated_lambda: RingElement,
    /// Constants to test the rows against, stated one first.
    pub candidate_lambdas: Vec<RingElement>,
    /// The twist under which the code is claimed self-orthogonal.
    pub sigma: RingAut,
    /// Classification records the span is compared against (over the
    /// candidate constants).
    pub spec_candidates: Vec<CodeSpec>,
    /// Fixture 2 only: the literally printed parameters, kept invalid.
    pub printed_invalid: Option<CodeSpec>,
    /// Fixture 2 only: the second generator exactly as printed, with the
    /// plus sign.
    pub printed_plus_generator: bool,
    /// Whether to run the distance enumeration.
    pub wants_distance: bool,
}

fn ring(ctx: &Arc<FieldCtx>, a: &[u64], b: &[u64]) -> RingElement {
    RingElement::new(ctx.element(a).unwrap(), ctx.element(b).unwrap()).unwrap()
}

fn field_row(ctx: &Arc<FieldCtx>, entries: &[[u64; 2]]) -> Vec<RingElement> {
    entries
        .iter()
        .map(|[a0, a1]| ring(ctx, &[*a0, *a1], &[0, 0]))
        .collect()
}

fn u_row(ctx: &Arc<FieldCtx>, entries: &[[u64; 2]]) -> Vec<RingElement> {
    entries
        .iter()
        .map(|[b0, b1]| ring(ctx, &[0, 0], &[*b0, *b1]))
        .collect()
}

pub fn fixture(which: u8) -> Result<Fixture, CliError> {
    match which {
        1 => fixture_1(),
        2 => fixture_2(),
        3 => fixture_3(),
        other => Err(CliError::Parse(format!("no example {other}; pick 1, 2 or 3"))),
    }
}

// Length 9 over F_9, nonprincipal kind: two unit rows and two u-rows.
fn fixture_1() -> Result<Fixture, CliError> {
    let ctx = FieldCtx::with_builtin_modulus(3, 2)?;
    let w = ctx.element(&[0, 1]).unwrap();
    let rows = vec![
        field_row(
            &ctx,
            &[[1, 0], [0, 0], [1, 0], [0, 1], [0, 0], [0, 1], [2, 0], [0, 0], [2, 0]],
        ),
        field_row(
            &ctx,
            &[[0, 0], [1, 0], [0, 1], [0, 0], [0, 1], [2, 0], [0, 0], [2, 0], [0, 2]],
        ),
        u_row(
            &ctx,
            &[[0, 0], [0, 0], [1, 0], [0, 0], [0, 0], [0, 1], [0, 0], [0, 0], [2, 0]],
        ),
        u_row(
            &ctx,
            &[[0, 0], [0, 0], [0, 0], [1, 0], [0, 2], [2, 0], [0, 2], [2, 0], [0, 1]],
        ),
    ];
    let lambda = RingElement::from_field(w);
    let spec = CodeSpec {
        ctx: Arc::clone(&ctx),
        s: 2,
        lambda: lambda.clone(),
        kind: CodeKind::Type4 {
            i: 7,
            t: 0,
            h: vec![],
            omega: 5,
        },
    };
    Ok(Fixture {
        which: 1,
        sigma: frobenius_twist(&ctx),
        ctx,
        s: 2,
        rows,
        stated_lambda: lambda.clone(),
        candidate_lambdas: vec![lambda],
        spec_candidates: vec![spec],
        printed_invalid: None,
        printed_plus_generator: false,
        wants_distance: false,
    })
}

// Length 5 over F_25. The printed parameters (i, t, omega) = (4, 2, 3)
// violate omega < T; the span is compared against the principal collapse.
fn fixture_2() -> Result<Fixture, CliError> {
    let ctx = FieldCtx::with_builtin_modulus(5, 2)?;
    let rows = vec![
        vec![
            ring(&ctx, &[1, 0], &[0, 0]),
            ring(&ctx, &[2, 2], &[0, 0]),
            ring(&ctx, &[2, 3], &[2, 3]),
            ring(&ctx, &[1, 0], &[3, 0]),
            ring(&ctx, &[2, 2], &[2, 2]),
        ],
        vec![
            ring(&ctx, &[0, 0], &[0, 0]),
            ring(&ctx, &[0, 0], &[1, 0]),
            ring(&ctx, &[0, 0], &[4, 4]),
            ring(&ctx, &[0, 0], &[1, 4]),
            ring(&ctx, &[0, 0], &[4, 0]),
        ],
    ];
    let lambda = RingElement::from_field(ctx.element(&[2, 2]).unwrap());
    let one = ctx.one();
    let collapsed = CodeSpec {
        ctx: Arc::clone(&ctx),
        s: 1,
        lambda: lambda.clone(),
        kind: CodeKind::Type3 {
            i: 4,
            t: 2,
            h: vec![one.clone()],
        },
    };
    let printed = CodeSpec {
        ctx: Arc::clone(&ctx),
        s: 1,
        lambda: lambda.clone(),
        kind: CodeKind::Type4 {
            i: 4,
            t: 2,
            h: vec![one],
            omega: 3,
        },
    };
    Ok(Fixture {
        which: 2,
        sigma: frobenius_twist(&ctx),
        ctx,
        s: 1,
        rows,
        stated_lambda: lambda.clone(),
        candidate_lambdas: vec![lambda],
        spec_candidates: vec![collapsed],
        printed_invalid: Some(printed),
        printed_plus_generator: true,
        wants_distance: false,
    })
}

// Length 9 over F_9, a single unit row. The stated constant and the row
// disagree: the candidates are the stated constant, the printed ambient
// constant 1, and its inverse.
fn fixture_3() -> Result<Fixture, CliError> {
    let ctx = FieldCtx::with_builtin_modulus(3, 2)?;
    let rows = vec![field_row(
        &ctx,
        &[[1, 0], [0, 1], [2, 0], [0, 2], [1, 0], [0, 1], [2, 0], [0, 2], [1, 0]],
    )];
    let w = ctx.element(&[0, 1]).unwrap();
    let stated = RingElement::from_field(w.clone());
    let one = RingElement::one(&ctx);
    let w_inv = RingElement::from_field(w.inv().unwrap());
    let spec_candidates = [&stated, &one, &w_inv]
        .iter()
        .map(|lambda| CodeSpec {
            ctx: Arc::clone(&ctx),
            s: 2,
            lambda: (*lambda).clone(),
            kind: CodeKind::Type3 {
                i: 8,
                t: 0,
                h: vec![],
            },
        })
        .collect();
    Ok(Fixture {
        which: 3,
        sigma: frobenius_twist(&ctx),
        ctx,
        s: 2,
        rows,
        stated_lambda: stated.clone(),
        candidate_lambdas: vec![stated, one, w_inv],
        spec_candidates,
        printed_invalid: None,
        printed_plus_generator: false,
        wants_distance: true,
    })
}

/// The twist `a + u b -> a^p + u b^p` every worked example uses.
pub fn frobenius_twist(ctx: &Arc<FieldCtx>) -> RingAut {
    RingAut::new(FieldAut { h: 1 }, ctx.one()).unwrap()
}

pub struct LambdaReading {
    pub lambda: RingElement,
    pub closure_rank: usize,
    pub shift_invariant: bool,
}

pub struct SpecMatch {
    pub spec: ValidatedSpec,
    pub matches: bool,
}

pub struct PredicatePair {
    pub closed: constacyclic_core::Verdict,
    pub oracle: bool,
}

pub struct ExampleReport {
    pub which: u8,
    pub ctx: Arc<FieldCtx>,
    pub sigma: RingAut,
    pub stated_lambda: RingElement,
    pub row_span_rank: usize,
    pub readings: Vec<LambdaReading>,
    /// The constant whose shift fixes the row span, when there is one.
    pub consistent_lambda: Option<RingElement>,
    pub span: SpanBasis,
    pub spec_matches: Vec<SpecMatch>,
    pub printed_invalid: Option<String>,
    pub printed_plus_span_rank: Option<usize>,
    pub self_orthogonal_sigma: PredicatePair,
    pub self_orthogonal_identity: PredicatePair,
    pub self_dual_sigma: PredicatePair,
    pub min_distance: Option<usize>,
    pub mds: Option<bool>,
}

/// Builds the code from the fixture rows (span plus shift closure under each
/// candidate constant), reports which reading the rows actually satisfy, and
/// runs both the closed-form and oracle predicates on the result.
pub fn analyze(fx: &Fixture) -> Result<ExampleReport, CliError> {
    let n = fx.rows[0].len();
    let row_span = SpanBasis::from_words(&fx.ctx, n, &full_scalar_rows(&fx.ctx, &fx.rows))?;

    let mut readings = Vec::new();
    let mut consistent: Option<RingElement> = None;
    for lambda in &fx.candidate_lambdas {
        let closure = closure_span(&fx.ctx, lambda, n, &fx.rows)?;
        let shift_invariant = closure.rank() == row_span.rank();
        if shift_invariant && consistent.is_none() {
            consistent = Some(lambda.clone());
        }
        readings.push(LambdaReading {
            lambda: lambda.clone(),
            closure_rank: closure.rank(),
            shift_invariant,
        });
    }

    // The code under analysis: the closure under the consistent constant
    // (equal to the plain row span), or under the stated constant otherwise.
    let working_lambda = consistent.clone().unwrap_or_else(|| fx.stated_lambda.clone());
    let span = closure_span(&fx.ctx, &working_lambda, n, &fx.rows)?;

    let mut spec_matches = Vec::new();
    for spec in &fx.spec_candidates {
        let v = validate(spec)?;
        let matches = v.span()? == span;
        spec_matches.push(SpecMatch { spec: v, matches });
    }

    let printed_invalid = fx.printed_invalid.as_ref().map(|spec| {
        match validate(spec) {
            Ok(_) => "unexpectedly valid".to_string(),
            Err(e) => format!("{e}"),
        }
    });

    let printed_plus_span_rank = if fx.printed_plus_generator {
        Some(printed_plus_span(fx)?.rank())
    } else {
        None
    };

    let identity = RingAut::identity(&fx.ctx);
    let matched = spec_matches
        .iter()
        .find(|m| m.matches)
        .map(|m| m.spec.clone())
        .ok_or_else(|| CliError::Parse("no spec candidate matches the span".into()))?;

    let self_orthogonal_sigma = PredicatePair {
        closed: constacyclic_core::is_sigma_self_orthogonal(&matched, &fx.sigma)?,
        oracle: oracle::brute_self_orthogonal(&span, &fx.sigma)?,
    };
    let self_orthogonal_identity = PredicatePair {
        closed: constacyclic_core::is_sigma_self_orthogonal(&matched, &identity)?,
        oracle: oracle::brute_self_orthogonal(&span, &identity)?,
    };
    let self_dual_sigma = PredicatePair {
        closed: constacyclic_core::is_sigma_self_dual(&matched, &fx.sigma)?,
        oracle: span == oracle::brute_dual(&span, &fx.sigma)?,
    };
    let min_distance = if fx.wants_distance {
        Some(oracle::min_distance(&span, 1 << 20)?)
    } else {
        None
    };
    // |C| = |R|^(n - d + 1) compared through exponents of p.
    let mds = min_distance
        .map(|d| span.rank() as u64 == 2 * (fx.ctx.m() as u64) * (n as u64 - d as u64 + 1));
    Ok(ExampleReport {
        which: fx.which,
        ctx: Arc::clone(&fx.ctx),
        sigma: fx.sigma.clone(),
        stated_lambda: fx.stated_lambda.clone(),
        row_span_rank: row_span.rank(),
        readings,
        consistent_lambda: consistent,
        spec_matches,
        printed_invalid,
        printed_plus_span_rank,
        self_orthogonal_sigma,
        self_orthogonal_identity,
        self_dual_sigma,
        min_distance,
        mds,
        span,
    })
}

// The F_p-rows of the R-span of the fixture rows: every field-basis scaling
// and u-multiple, no shifts.
fn full_scalar_rows(ctx: &Arc<FieldCtx>, rows: &[Vec<RingElement>]) -> Vec<Vec<RingElement>> {
    let m = ctx.m();
    let mut scalars = Vec::with_capacity(m);
    let mut y = ctx.one();
    let gen = if m > 1 {
        let mut coeffs = vec![0u64; m];
        coeffs[1] = 1;
        ctx.element(&coeffs).unwrap()
    } else {
        ctx.one()
    };
    for _ in 0..m {
        scalars.push(y.clone());
        y = y.mul(&gen).unwrap();
    }
    let mut out = Vec::new();
    for row in rows {
        for scalar in &scalars {
            let scaled: Vec<RingElement> = row
                .iter()
                .map(|c| c.mul_field(scalar).unwrap())
                .collect();
            out.push(scaled.iter().map(RingElement::mul_u).collect());
            out.push(scaled);
        }
    }
    out
}

// Span of the rows closed under the twisted shift for `lambda`.
fn closure_span(
    ctx: &Arc<FieldCtx>,
    lambda: &RingElement,
    n: usize,
    rows: &[Vec<RingElement>],
) -> Result<SpanBasis, CliError> {
    let polys: Vec<QuotientPoly> = rows
        .iter()
        .map(|row| QuotientPoly::from_coeffs(lambda, n, row.clone()))
        .collect::<Result<_, _>>()?;
    Ok(span_basis(ctx, lambda, n, &polys)?)
}

// Fixture 2's generators exactly as printed, with the plus sign in the
// second one: (g x - 1)^4 + u (g x - 1)^2 and u (g x + 1)^3.
fn printed_plus_span(fx: &Fixture) -> Result<SpanBasis, CliError> {
    let n = 5;
    let lambda = &fx.stated_lambda;
    let g = constacyclic_core::nilpotent_base(lambda.field_part(), fx.s)?;
    let first = constacyclic_core::nilpotent_power(&g, 4, lambda, n)?.add(
        &constacyclic_core::nilpotent_power(&g, 2, lambda, n)?
            .scale(&RingElement::u(&fx.ctx))?,
    )?;
    // (g x + 1)^3 = -((-g) x - 1)^3.
    let plus = constacyclic_core::nilpotent_power(&g.neg(), 3, lambda, n)?
        .neg()
        .scale(&RingElement::u(&fx.ctx))?;
    Ok(span_basis(&fx.ctx, lambda, n, &[first, plus])?)
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "example {}", self.which)?;
        let modulus: Vec<String> = self.ctx.modulus().iter().map(u64::to_string).collect();
        writeln!(
            f,
            "ambient: p={} m={} modulus=[{}]",
            self.ctx.p(),
            self.ctx.m(),
            modulus.join(",")
        )?;
        writeln!(f, "sigma: {}", self.sigma)?;
        writeln!(f, "stated lambda: {}", self.stated_lambda)?;
        writeln!(
            f,
            "row span: rank {} (size {}^{})",
            self.row_span_rank,
            self.ctx.p(),
            self.row_span_rank
        )?;
        for reading in &self.readings {
            writeln!(
                f,
                "reading lambda={}: closure rank {}, shift-invariant {}",
                reading.lambda, reading.closure_rank, reading.shift_invariant
            )?;
        }
        match &self.consistent_lambda {
            Some(lambda) => writeln!(f, "consistent lambda: {lambda}")?,
            None => writeln!(f, "consistent lambda: none of the candidates")?,
        }
        for m in &self.spec_matches {
            writeln!(
                f,
                "spec candidate {} over lambda={}: span match {}",
                constacyclic_core::sweep::spec_id(m.spec.spec()),
                m.spec.lambda(),
                m.matches
            )?;
        }
        if let Some(reason) = &self.printed_invalid {
            writeln!(f, "printed parameters rejected: {reason}")?;
        }
        if let Some(rank) = self.printed_plus_span_rank {
            writeln!(
                f,
                "printed plus-sign generators span rank {} (fixture rank {}): differ {}",
                rank,
                self.span.rank(),
                rank != self.span.rank()
            )?;
        }
        writeln!(f, "size: {}^{}", self.ctx.p(), self.span.rank())?;
        writeln!(
            f,
            "self-orthogonal under sigma: closed {} [{}], oracle {}",
            self.self_orthogonal_sigma.closed.holds,
            self.self_orthogonal_sigma.closed.clause,
            self.self_orthogonal_sigma.oracle
        )?;
        writeln!(
            f,
            "self-orthogonal under identity: closed {} [{}], oracle {}",
            self.self_orthogonal_identity.closed.holds,
            self.self_orthogonal_identity.closed.clause,
            self.self_orthogonal_identity.oracle
        )?;
        writeln!(
            f,
            "self-dual under sigma: closed {} [{}], oracle {}",
            self.self_dual_sigma.closed.holds,
            self.self_dual_sigma.closed.clause,
            self.self_dual_sigma.oracle
        )?;
        if let Some(d) = self.min_distance {
            writeln!(f, "min distance: {d}")?;
        }
        if let Some(mds) = self.mds {
            writeln!(f, "distance meets the size bound exactly (MDS): {mds}")?;
        }
        Ok(())
    }
}
