//! JSON schemas for spec files, automorphisms, sweep configs, dual results,
//! and verification records, with conversions to the core types.
//!
//! Field elements are coefficient vectors low-to-high; ring elements are
//! `{"a": [...], "b": [...]}` pairs; polynomials are arrays of ring elements,
//! low degree first.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use constacyclic_core::{
    builtin_modulus, CodeKind, CodeSpec, DualResult, FieldAut, FieldCtx, FieldElement, RingAut,
    RingElement,
};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldCtxJson {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
}

impl FieldCtxJson {
    pub fn to_ctx(&self) -> Result<Arc<FieldCtx>, CliError> {
        FieldCtx::new(self.p, self.m, self.modulus.clone()).map_err(CliError::from)
    }

    pub fn from_ctx(ctx: &FieldCtx) -> FieldCtxJson {
        FieldCtxJson {
            p: ctx.p(),
            m: ctx.m(),
            modulus: ctx.modulus().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingElementJson {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl RingElementJson {
    pub fn to_element(&self, ctx: &Arc<FieldCtx>) -> Result<RingElement, CliError> {
        let a = ctx.element(&self.a)?;
        let b = ctx.element(&self.b)?;
        RingElement::new(a, b).map_err(CliError::from)
    }

    pub fn from_element(x: &RingElement) -> RingElementJson {
        RingElementJson {
            a: x.field_part().coeffs().to_vec(),
            b: x.u_part().coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutJson {
    pub h: usize,
    pub epsilon: Vec<u64>,
}

impl AutJson {
    pub fn to_aut(&self, ctx: &Arc<FieldCtx>) -> Result<RingAut, CliError> {
        let epsilon = ctx.element(&self.epsilon)?;
        RingAut::new(FieldAut { h: self.h }, epsilon).map_err(CliError::from)
    }

    pub fn from_aut(aut: &RingAut) -> AutJson {
        AutJson {
            h: aut.theta().h,
            epsilon: aut.epsilon().coeffs().to_vec(),
        }
    }
}

/// The on-disk spec record. `kind` is one of `chain`, `type1_zero`,
/// `type1_whole`, `type2`, `type3`, `type4`; `h` is a list of field-element
/// coefficient vectors in the `(g x - 1)` basis, index = power.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeSpecJson {
    pub field: FieldCtxJson,
    pub s: u32,
    pub lambda: RingElementJson,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<u64>,
}

impl CodeSpecJson {
    pub fn to_spec(&self) -> Result<CodeSpec, CliError> {
        let ctx = self.field.to_ctx()?;
        let lambda = self.lambda.to_element(&ctx)?;
        let need_i = || {
            self.i
                .ok_or_else(|| CliError::Parse(format!("kind {} requires \"i\"", self.kind)))
        };
        let h = self.to_h(&ctx)?;
        let kind = match self.kind.as_str() {
            "chain" => CodeKind::Chain { i: need_i()? },
            "type1_zero" => CodeKind::Type1Zero,
            "type1_whole" => CodeKind::Type1Whole,
            "type2" => CodeKind::Type2 { i: need_i()? },
            "type3" => CodeKind::Type3 {
                i: need_i()?,
                t: self.t.unwrap_or(0),
                h,
            },
            "type4" => CodeKind::Type4 {
                i: need_i()?,
                t: self.t.unwrap_or(0),
                h,
                omega: self.omega.ok_or_else(|| {
                    CliError::Parse("kind type4 requires \"omega\"".to_string())
                })?,
            },
            other => {
                return Err(CliError::Parse(format!("unknown kind \"{other}\"")));
            }
        };
        Ok(CodeSpec {
            ctx,
            s: self.s,
            lambda,
            kind,
        })
    }

    fn to_h(&self, ctx: &Arc<FieldCtx>) -> Result<Vec<FieldElement>, CliError> {
        match &self.h {
            None => Ok(Vec::new()),
            Some(rows) => rows
                .iter()
                .map(|coeffs| ctx.element(coeffs).map_err(CliError::from))
                .collect(),
        }
    }

    pub fn from_spec(spec: &CodeSpec) -> CodeSpecJson {
        let (i, t, h, omega) = match &spec.kind {
            CodeKind::Chain { i } | CodeKind::Type2 { i } => (Some(*i), None, None, None),
            CodeKind::Type1Zero | CodeKind::Type1Whole => (None, None, None, None),
            CodeKind::Type3 { i, t, h } => (Some(*i), Some(*t), Some(h_json(h)), None),
            CodeKind::Type4 { i, t, h, omega } => {
                (Some(*i), Some(*t), Some(h_json(h)), Some(*omega))
            }
        };
        CodeSpecJson {
            field: FieldCtxJson::from_ctx(&spec.ctx),
            s: spec.s,
            lambda: RingElementJson::from_element(&spec.lambda),
            kind: spec.kind.name().to_string(),
            i,
            t,
            h,
            omega,
        }
    }
}

fn h_json(h: &[FieldElement]) -> Vec<Vec<u64>> {
    h.iter().map(|c| c.coeffs().to_vec()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DualResultJson {
    pub dual_lambda: RingElementJson,
    pub dual_spec: CodeSpecJson,
    pub witnesses: Vec<Vec<RingElementJson>>,
    pub clause: String,
}

impl DualResultJson {
    pub fn from_result(result: &DualResult) -> DualResultJson {
        DualResultJson {
            dual_lambda: RingElementJson::from_element(&result.dual_lambda),
            dual_spec: CodeSpecJson::from_spec(result.dual_spec.spec()),
            witnesses: result
                .witnesses
                .iter()
                .map(|w| w.coeffs().iter().map(RingElementJson::from_element).collect())
                .collect(),
            clause: result.clause.to_string(),
        }
    }
}

/// One line of the structured verification log.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordJson {
    pub spec: String,
    pub sigma: String,
    pub check: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// One `(p, m, s)` sweep target; the modulus defaults to the built-in table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepTargetJson {
    pub p: u64,
    pub m: usize,
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl SweepTargetJson {
    pub fn to_ctx(&self) -> Result<Arc<FieldCtx>, CliError> {
        let modulus = match &self.modulus {
            Some(m) => m.clone(),
            None => builtin_modulus(self.p, self.m).ok_or_else(|| {
                CliError::Parse(format!(
                    "no built-in modulus for p={} m={}; supply \"modulus\"",
                    self.p, self.m
                ))
            })?,
        };
        FieldCtx::new(self.p, self.m, modulus).map_err(CliError::from)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSelect {
    Keyword(String),
    List(Vec<RingElementJson>),
}

impl Default for LambdaSelect {
    fn default() -> Self {
        LambdaSelect::Keyword("all-units".to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SigmaSelect {
    Keyword(String),
    List(Vec<AutJson>),
}

impl Default for SigmaSelect {
    fn default() -> Self {
        SigmaSelect::Keyword("all".to_string())
    }
}

/// Sweep configuration: targets, constant and automorphism selections, an
/// optional bound on the number of `h` coefficients, the case cap, and an
/// optional report path.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfigJson {
    pub targets: Vec<SweepTargetJson>,
    #[serde(default)]
    pub lambda: LambdaSelect,
    #[serde(default)]
    pub sigma: SigmaSelect,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}
