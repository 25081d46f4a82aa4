//! JSON rule-base documents.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "tnorm": { "name": "product" },
//!   "act": { "family": "generator", "q": 1.0, "p": 2.0 },
//!   "norm_p": 2.0,
//!   "representation": "implicative",
//!   "input_box": [[-2.0, 5.0], [-2.0, 6.0]],
//!   "rules": [
//!     { "a": [0.0, 0.0], "b": [1.0, 1.0], "c": 0.0, "d": 1.0, "s": 0.0 }
//!   ]
//! }
//! ```
//!
//! `tnorm.name` is `minimum`, `product` or `lukasiewicz`. `act.family` is
//! `triangular`, `gaussian` or `generator`; the last one is
//! `t^(-1)(q z^p)` for the t-norm's own generator, with `q` defaulting to 1
//! and `p` to `norm_p`. `norm_p` is a number `>= 1` or `"inf"`. `s` may be
//! omitted and defaults to 0.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::algebra::TNorm;
use crate::error::{FuzzyError, Result};
use crate::geometry::{Exponent, InputBox};
use crate::radial_sets::{ActFunction, Representation, Rule, RuleBase};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleBaseDocument {
    pub schema_version: String,
    pub tnorm: TNormSpec,
    pub act: ActSpec,
    pub norm_p: Exponent,
    pub representation: Representation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_box: Option<Vec<[f64; 2]>>,
    pub rules: Vec<RuleSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TNormSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub params: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActSpec {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSpec {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: f64,
    pub d: f64,
    #[serde(default)]
    pub s: f64,
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> FuzzyError {
    FuzzyError::Validation {
        field: field.into(),
        message: message.into(),
    }
}

impl RuleBaseDocument {
    /// Parses the text without validating its content.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| FuzzyError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    /// Validates the document and builds the rule base, including the
    /// radial property check of the `(tnorm, act, norm_p)` triple.
    pub fn to_rulebase(&self) -> Result<RuleBase> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(field_err(
                "schema_version",
                format!("unsupported schema version {:?} (expected {SCHEMA_VERSION:?})", self.schema_version),
            ));
        }
        let tnorm = TNorm::from_name(&self.tnorm.name).map_err(|e| field_err("tnorm.name", e.to_string()))?;
        if !self.tnorm.params.is_empty() {
            return Err(field_err(
                "tnorm.params",
                format!("the {} t-norm takes no parameters", tnorm.name()),
            ));
        }
        if tnorm == TNorm::Minimum && !self.norm_p.is_infinite() {
            return Err(field_err("norm_p", "minimum t-norm requires the cubic (p = inf) norm"));
        }
        let act = build_act(&tnorm, &self.act, self.norm_p)?;
        let rules = self.build_rules()?;
        let n = rules[0].dim();
        let input_box = match &self.input_box {
            None => None,
            Some(bounds) => {
                if bounds.len() != n {
                    return Err(field_err(
                        "input_box",
                        format!("box has {} axes, rules have {n} inputs", bounds.len()),
                    ));
                }
                for (i, [lo, hi]) in bounds.iter().enumerate() {
                    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
                        return Err(field_err(
                            format!("input_box[{i}]"),
                            format!("axis needs lo < hi, got [{lo}, {hi}]"),
                        ));
                    }
                }
                Some(InputBox::new(bounds.iter().map(|[lo, hi]| (*lo, *hi)).collect())?)
            }
        };
        let rb = RuleBase::new(tnorm, act, self.norm_p, self.representation, rules)?;
        match input_box {
            Some(bx) => rb.with_input_box(bx),
            None => Ok(rb),
        }
    }

    fn build_rules(&self) -> Result<Vec<Rule>> {
        let Some(first) = self.rules.first() else {
            return Err(field_err("rules", "a rule base needs at least one rule"));
        };
        let n = first.a.len();
        let mut out = Vec::with_capacity(self.rules.len());
        for (j, r) in self.rules.iter().enumerate() {
            let at = |f: &str| format!("rules[{j}].{f}");
            if r.a.is_empty() {
                return Err(field_err(at("a"), "center needs at least one coordinate"));
            }
            if r.a.len() != n {
                return Err(field_err(at("a"), format!("rule has {} inputs, expected {n}", r.a.len())));
            }
            if r.b.len() != n {
                return Err(field_err(at("b"), format!("expected {n} widths, got {}", r.b.len())));
            }
            if let Some(i) = r.a.iter().position(|v| !v.is_finite()) {
                return Err(field_err(format!("rules[{j}].a[{i}]"), "center must be finite"));
            }
            if let Some(i) = r.b.iter().position(|v| !(*v > 0.0 && v.is_finite())) {
                return Err(field_err(format!("rules[{j}].b[{i}]"), "widths must be positive"));
            }
            if !r.c.is_finite() {
                return Err(field_err(at("c"), "output center must be finite"));
            }
            if !(r.d > 0.0 && r.d.is_finite()) {
                return Err(field_err(at("d"), "output width must be positive"));
            }
            if !(r.s >= 0.0 && r.s.is_finite()) {
                return Err(field_err(at("s"), "plateau must be non-negative"));
            }
            out.push(Rule::new(r.a.clone(), r.b.clone(), r.c, r.d, r.s)?);
        }
        Ok(out)
    }

    /// The document describing `rb`. Rule bases built on custom generators
    /// or custom act functions have no document form.
    pub fn from_rulebase(rb: &RuleBase) -> Result<Self> {
        let tnorm = match rb.tnorm() {
            TNorm::Minimum => "minimum",
            TNorm::Archimedean(g) => match TNorm::from_name(g.name()) {
                Ok(builtin) if builtin == *rb.tnorm() => g.name(),
                _ => return Err(field_err("tnorm", format!("custom t-norm {:?} cannot be serialized", g.name()))),
            },
        };
        let act = match rb.act() {
            ActFunction::Triangular => ActSpec {
                family: "triangular".into(),
                q: None,
                p: None,
            },
            ActFunction::Gaussian => ActSpec {
                family: "gaussian".into(),
                q: None,
                p: None,
            },
            ActFunction::Generated { generator, q, p } if Some(generator) == rb.tnorm().generator() => ActSpec {
                family: "generator".into(),
                q: Some(*q),
                p: Some(*p),
            },
            other => return Err(field_err("act", format!("act {:?} cannot be serialized", other.name()))),
        };
        Ok(Self {
            schema_version: SCHEMA_VERSION.into(),
            tnorm: TNormSpec {
                name: tnorm.into(),
                params: Map::new(),
            },
            act,
            norm_p: rb.p(),
            representation: rb.representation(),
            input_box: rb
                .input_box()
                .map(|bx| bx.bounds().iter().map(|(lo, hi)| [*lo, *hi]).collect()),
            rules: rb
                .rules()
                .iter()
                .map(|r| RuleSpec {
                    a: r.center().to_vec(),
                    b: r.widths().to_vec(),
                    c: r.output_center(),
                    d: r.output_width(),
                    s: r.plateau(),
                })
                .collect(),
        })
    }
}

/// The act function named by `spec` for rule bases on `tnorm`.
pub fn build_act(tnorm: &TNorm, spec: &ActSpec, norm_p: Exponent) -> Result<ActFunction> {
    let family = spec.family.to_ascii_lowercase();
    if family != "generator" && (spec.q.is_some() || spec.p.is_some()) {
        return Err(field_err("act", format!("the {family} family takes no q or p")));
    }
    match family.as_str() {
        "triangular" => Ok(ActFunction::Triangular),
        "gaussian" => Ok(ActFunction::Gaussian),
        "generator" => {
            let Some(generator) = tnorm.generator() else {
                return Err(field_err("act.family", "the minimum t-norm has no additive generator"));
            };
            let q = spec.q.unwrap_or(1.0);
            let p = match (spec.p, norm_p) {
                (Some(p), _) => p,
                (None, Exponent::Finite(p)) => p,
                (None, Exponent::Infinity) => return Err(field_err("act.p", "generator act needs a finite p")),
            };
            if !(q > 0.0 && q.is_finite()) {
                return Err(field_err("act.q", format!("q must be positive, got {q}")));
            }
            if !(p >= 1.0 && p.is_finite()) {
                return Err(field_err("act.p", format!("p must be finite and >= 1, got {p}")));
            }
            ActFunction::generated(generator.clone(), q, p)
        }
        other => Err(field_err(
            "act.family",
            format!("unknown act family {other:?} (expected triangular, gaussian or generator)"),
        )),
    }
}

/// Parses and validates a rule-base document.
pub fn parse_rulebase(text: &str) -> Result<RuleBase> {
    RuleBaseDocument::from_json(text)?.to_rulebase()
}

/// Normalised document text for `rb`.
pub fn serialize_rulebase(rb: &RuleBase) -> Result<String> {
    Ok(RuleBaseDocument::from_rulebase(rb)?.to_json())
}
