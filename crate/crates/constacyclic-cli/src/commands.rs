//! The six commands. Each returns its full report text and an exit code;
//! the binary just prints and exits. All output is deterministic for a
//! given input.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use constacyclic_core::{
    all_automorphisms, oracle, span_basis, sweep, validate, CodeKind, CodeSpec, FieldCtx,
    QuotientPoly, RingAut, RingElement, ValidatedSpec,
};

use crate::fixtures;
use crate::schema::{
    AutJson, CodeSpecJson, DualResultJson, LambdaSelect, RecordJson, SigmaSelect,
    SweepConfigJson,
};
use crate::{CliError, CommandOutput};

pub const DEFAULT_ENUM_CAP: u128 = 1_000_000;
pub const DEFAULT_SWEEP_CAP: u128 = 1_000_000;

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn load_spec(path: &Path) -> Result<CodeSpec, CliError> {
    let text = read_file(path)?;
    let json: CodeSpecJson =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{e}")))?;
    json.to_spec()
}

/// Parses the `--sigma h=<int>,eps=<coeffs>` flag; the epsilon coefficients
/// are comma-separated, low-to-high.
pub fn parse_sigma(text: &str, ctx: &Arc<FieldCtx>) -> Result<RingAut, CliError> {
    let rest = text
        .strip_prefix("h=")
        .ok_or_else(|| CliError::Parse(format!("sigma must look like h=1,eps=1,0; got {text}")))?;
    let (h_text, eps_text) = rest
        .split_once(",eps=")
        .ok_or_else(|| CliError::Parse(format!("sigma is missing \",eps=\": {text}")))?;
    let h: usize = h_text
        .parse()
        .map_err(|_| CliError::Parse(format!("bad h in sigma: {h_text}")))?;
    let coeffs: Vec<u64> = eps_text
        .split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad epsilon coefficient: {c}")))
        })
        .collect::<Result<_, _>>()?;
    AutJson { h, epsilon: coeffs }.to_aut(ctx)
}

fn kind_lines(v: &ValidatedSpec, out: &mut String) {
    let spec = v.spec();
    let _ = writeln!(out, "kind: {}", spec.kind.name());
    match &spec.kind {
        CodeKind::Chain { i } | CodeKind::Type2 { i } => {
            let _ = writeln!(out, "i: {i}");
        }
        CodeKind::Type1Zero | CodeKind::Type1Whole => {}
        CodeKind::Type3 { i, t, h } => {
            let _ = writeln!(out, "i: {i}");
            let _ = writeln!(out, "t: {t}");
            let _ = writeln!(out, "h: {}", h_display(h));
        }
        CodeKind::Type4 { i, t, h, omega } => {
            let _ = writeln!(out, "i: {i}");
            let _ = writeln!(out, "t: {t}");
            let _ = writeln!(out, "h: {}", h_display(h));
            let _ = writeln!(out, "omega: {omega}");
        }
    }
}

fn h_display(h: &[constacyclic_core::FieldElement]) -> String {
    if h.is_empty() {
        "0".to_string()
    } else {
        h.iter()
            .map(|c| format!("{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn poly_display(p: &QuotientPoly) -> String {
    p.coeffs()
        .iter()
        .map(|c| format!("{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `classify --spec <path>`: validated kind, normalized parameters, the
/// nilpotent base, the torsion exponent, the exact size, and the literal
/// generators.
pub fn cmd_classify(spec_path: &Path) -> Result<CommandOutput, CliError> {
    let spec = load_spec(spec_path)?;
    let v = validate(&spec)?;
    let mut out = String::new();
    kind_lines(&v, &mut out);
    let _ = writeln!(out, "lambda: {}", v.lambda());
    let _ = writeln!(out, "base: {}", v.base());
    if let Some(t) = v.torsion_exp() {
        let _ = writeln!(out, "T: {t}");
    }
    let _ = writeln!(out, "size: {}^{}", spec.ctx.p(), v.size_exponent());
    for g in v.generators()? {
        let _ = writeln!(out, "generator: {}", poly_display(&g));
    }
    Ok(CommandOutput { text: out, exit: 0 })
}

/// `dual --spec <path> --sigma ... [--verify] [--out <path>]`.
pub fn cmd_dual(
    spec_path: &Path,
    sigma_text: &str,
    verify: bool,
    out_path: Option<&Path>,
) -> Result<CommandOutput, CliError> {
    let spec = load_spec(spec_path)?;
    let sigma = parse_sigma(sigma_text, &spec.ctx)?;
    let v = validate(&spec)?;
    let dual = constacyclic_core::sigma_dual(&v, &sigma)?;
    let mut out = String::new();
    let _ = writeln!(out, "dual lambda: {}", dual.dual_lambda);
    let _ = writeln!(out, "clause: {}", dual.clause);
    kind_lines(&dual.dual_spec, &mut out);
    let _ = writeln!(
        out,
        "dual size: {}^{}",
        spec.ctx.p(),
        dual.dual_spec.size_exponent()
    );
    for w in &dual.witnesses {
        let _ = writeln!(out, "witness: {}", poly_display(w));
    }
    let mut exit = 0;
    if verify {
        let span = v.span()?;
        let brute = oracle::brute_dual(&span, &sigma)?;
        let witness_span = span_basis(&spec.ctx, &dual.dual_lambda, v.n(), &dual.witnesses)?;
        let record_span = dual.dual_spec.span()?;
        if witness_span == brute && record_span == brute {
            let _ = writeln!(out, "verify: MATCH");
        } else {
            let _ = writeln!(out, "verify: MISMATCH");
            exit = 3;
        }
    }
    if let Some(path) = out_path {
        let json = serde_json::to_string_pretty(&DualResultJson::from_result(&dual))
            .map_err(|e| CliError::Parse(format!("{e}")))?;
        std::fs::write(path, json)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let _ = writeln!(out, "wrote: {}", path.display());
    }
    Ok(CommandOutput { text: out, exit })
}

pub enum CheckMode {
    SelfOrthogonal,
    SelfDual,
}

/// `check --spec <path> --sigma ... --self-orthogonal | --self-dual`.
pub fn cmd_check(
    spec_path: &Path,
    sigma_text: &str,
    mode: CheckMode,
) -> Result<CommandOutput, CliError> {
    let spec = load_spec(spec_path)?;
    let sigma = parse_sigma(sigma_text, &spec.ctx)?;
    let v = validate(&spec)?;
    let verdict = match mode {
        CheckMode::SelfOrthogonal => constacyclic_core::is_sigma_self_orthogonal(&v, &sigma)?,
        CheckMode::SelfDual => constacyclic_core::is_sigma_self_dual(&v, &sigma)?,
    };
    let text = format!("{} [{}]\n", verdict.holds, verdict.clause);
    Ok(CommandOutput {
        text,
        exit: if verdict.holds { 0 } else { 1 },
    })
}

/// `enumerate --spec <path> [--cap <int>]`: every codeword, one JSON array
/// per line, in the deterministic combination order, then the count.
pub fn cmd_enumerate(spec_path: &Path, cap: Option<u128>) -> Result<CommandOutput, CliError> {
    let spec = load_spec(spec_path)?;
    let v = validate(&spec)?;
    let span = v.span()?;
    let cap = cap.unwrap_or(DEFAULT_ENUM_CAP);
    let mut out = String::new();
    let mut count: u128 = 0;
    for word in span.enumerate(cap)? {
        let json: Vec<crate::schema::RingElementJson> = word
            .iter()
            .map(crate::schema::RingElementJson::from_element)
            .collect();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&json).map_err(|e| CliError::Parse(format!("{e}")))?
        );
        count += 1;
    }
    let _ = writeln!(out, "count: {count}");
    Ok(CommandOutput { text: out, exit: 0 })
}

/// `example <1|2|3>`: rebuilds a worked fixture from its literal matrix.
pub fn cmd_example(which: u8) -> Result<CommandOutput, CliError> {
    let fx = fixtures::fixture(which)?;
    let report = fixtures::analyze(&fx)?;
    Ok(CommandOutput {
        text: format!("{report}"),
        exit: 0,
    })
}

struct SweepPlan {
    cases: Vec<(CodeSpec, RingAut)>,
}

fn plan_sweep(config: &SweepConfigJson) -> Result<SweepPlan, CliError> {
    let mut cases = Vec::new();
    for target in &config.targets {
        let ctx = target.to_ctx()?;
        let sigmas: Vec<RingAut> = match &config.sigma {
            SigmaSelect::Keyword(k) if k == "all" => all_automorphisms(&ctx),
            SigmaSelect::Keyword(k) => {
                return Err(CliError::Parse(format!("unknown sigma selection \"{k}\"")));
            }
            SigmaSelect::List(list) => list
                .iter()
                .map(|a| a.to_aut(&ctx))
                .collect::<Result<_, _>>()?,
        };
        let lambdas: Vec<RingElement> = match &config.lambda {
            LambdaSelect::Keyword(k) if k == "all-units" => {
                let mut all = Vec::new();
                for gamma in ctx.units() {
                    all.push(RingElement::from_field(gamma));
                }
                for alpha in ctx.units() {
                    for beta in ctx.units() {
                        all.push(RingElement::new(alpha.clone(), beta)?);
                    }
                }
                all
            }
            LambdaSelect::Keyword(k) => {
                return Err(CliError::Parse(format!("unknown lambda selection \"{k}\"")));
            }
            LambdaSelect::List(list) => list
                .iter()
                .map(|l| l.to_element(&ctx))
                .collect::<Result<_, _>>()?,
        };
        for lambda in &lambdas {
            if !lambda.is_unit() {
                return Err(CliError::Core(constacyclic_core::Error::NotAUnit));
            }
            let specs = if lambda.is_field() {
                sweep::gamma_specs(&ctx, target.s, lambda.field_part())?
            } else {
                sweep::chain_specs(&ctx, target.s, lambda.field_part(), lambda.u_part())?
            };
            for spec in specs {
                if let Some(bound) = config.h_bound {
                    let too_long = match &spec.kind {
                        CodeKind::Type3 { h, .. } | CodeKind::Type4 { h, .. } => {
                            h.len() as u64 > bound
                        }
                        _ => false,
                    };
                    if too_long {
                        continue;
                    }
                }
                for sigma in &sigmas {
                    cases.push((spec.clone(), sigma.clone()));
                }
            }
        }
    }
    Ok(SweepPlan { cases })
}

/// `sweep --config <path> [--cap <int>] [--out <path>]`: precounts the
/// cases, refuses above the cap, runs every closed-form-versus-oracle check,
/// writes the line-delimited record log, and summarizes. Exit 3 on any
/// mismatch.
pub fn cmd_sweep(
    config_path: &Path,
    cap_override: Option<u128>,
    out_override: Option<&Path>,
) -> Result<CommandOutput, CliError> {
    let text = read_file(config_path)?;
    let config: SweepConfigJson =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{e}")))?;
    let plan = plan_sweep(&config)?;
    let cap = cap_override.or(config.cap).unwrap_or(DEFAULT_SWEEP_CAP);
    let mut out = String::new();
    let _ = writeln!(out, "cases: {}", plan.cases.len());
    if plan.cases.len() as u128 > cap {
        let _ = writeln!(out, "refused: case count {} exceeds cap {cap}", plan.cases.len());
        return Ok(CommandOutput { text: out, exit: 2 });
    }

    let mut records: Vec<RecordJson> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut checks = 0usize;
    let mut mismatches = 0usize;
    for (spec, sigma) in &plan.cases {
        let report = sweep::check_case(spec, sigma)?;
        checks += report.records.len();
        mismatches += report.mismatches();
        for r in &report.records {
            if !r.pass {
                let _ = writeln!(
                    out,
                    "MISMATCH {} | {} | {}: expected {}, got {}",
                    r.spec_id, r.sigma_id, r.check, r.expected, r.got
                );
            }
            records.push(RecordJson {
                spec: r.spec_id.clone(),
                sigma: r.sigma_id.clone(),
                check: r.check.to_string(),
                expected: r.expected.clone(),
                got: r.got.clone(),
                pass: r.pass,
            });
        }
        notes.extend(report.notes);
    }

    let out_path = out_override
        .map(|p| p.to_path_buf())
        .or_else(|| config.out.as_ref().map(std::path::PathBuf::from));
    if let Some(path) = &out_path {
        let mut log = String::new();
        for r in &records {
            let _ = writeln!(
                log,
                "{}",
                serde_json::to_string(r).map_err(|e| CliError::Parse(format!("{e}")))?
            );
        }
        std::fs::write(path, log)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let _ = writeln!(out, "wrote: {}", path.display());
    }

    for note in &notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "checks: {checks}");
    let _ = writeln!(out, "variant notes: {}", notes.len());
    let _ = writeln!(out, "mismatches: {mismatches}");
    Ok(CommandOutput {
        text: out,
        exit: if mismatches == 0 { 0 } else { 3 },
    })
}
