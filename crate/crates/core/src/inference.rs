//! Conjunctive and implicative computational models.
//!
//! With a singleton fuzzifier the inferred output set is
//! `B'(y) = RB(x, y)` ([`relation_value`]). For a radial rule base both
//! models have closed forms:
//!
//! - conjunctive: weighted average of the consequent centers,
//!   `y* = Σ A_j(x) c_j / Σ A_j(x)` ([`infer_conjunctive`]);
//! - implicative: each firing rule contributes the interval
//!   `[c_j - d_j z_j - s_j, c_j + d_j z_j + s_j]` with
//!   `z_j = ‖x - a_j‖_{p,b_j}`, the core of `B'` is their intersection and
//!   `y*` is its midpoint ([`infer_implicative`]).

use std::fmt;

use crate::error::{FuzzyError, IncoherenceWitness, Result};
use crate::radial_sets::{Representation, RuleBase};

/// Closed interval `[lo, hi]` on the extended real line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutputInterval {
    pub lo: f64,
    pub hi: f64,
}

impl OutputInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval [{lo}, {hi}] is reversed");
        Self { lo, hi }
    }

    pub fn unbounded() -> Self {
        Self {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn midpoint(&self) -> f64 {
        if self.lo == self.hi {
            self.lo
        } else {
            0.5 * (self.lo + self.hi)
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, y: f64) -> bool {
        self.lo <= y && y <= self.hi
    }
}

impl fmt::Display for OutputInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", fmt_ext(self.lo), fmt_ext(self.hi))
    }
}

fn fmt_ext(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v}")
    }
}

/// `[max_j lo_j, min_j hi_j]`, or `None` when the intervals do not meet.
///
/// An empty list intersects to the whole line.
pub fn intersect_intervals(intervals: &[OutputInterval]) -> Option<OutputInterval> {
    let lo = intervals.iter().map(|i| i.lo).fold(f64::NEG_INFINITY, f64::max);
    let hi = intervals.iter().map(|i| i.hi).fold(f64::INFINITY, f64::min);
    (lo <= hi).then(|| OutputInterval::new(lo, hi))
}

#[derive(Clone, Debug, PartialEq)]
pub struct InferenceResult {
    /// Defuzzified output.
    pub y_star: f64,
    /// Core of the inferred output set (implicative model only).
    pub core: Option<OutputInterval>,
    /// `A_j(x)` for every rule.
    pub firing: Vec<f64>,
}

fn require(rb: &RuleBase, rep: Representation, operation: &'static str) -> Result<()> {
    if rb.representation() == rep {
        Ok(())
    } else {
        Err(FuzzyError::WrongRepresentation {
            operation,
            expected: match rep {
                Representation::Conjunctive => "conjunctive",
                Representation::Implicative => "implicative",
            },
        })
    }
}

/// Evaluates `x` under the rule base's own representation.
pub fn infer(rb: &RuleBase, x: &[f64]) -> Result<InferenceResult> {
    match rb.representation() {
        Representation::Conjunctive => infer_conjunctive(rb, x),
        Representation::Implicative => infer_implicative(rb, x),
    }
}

/// Weighted-average output of a conjunctive radial system.
///
/// Fails with [`FuzzyError::NoRuleFires`] when every `A_j(x)` is exactly 0.
pub fn infer_conjunctive(rb: &RuleBase, x: &[f64]) -> Result<InferenceResult> {
    require(rb, Representation::Conjunctive, "conjunctive inference")?;
    let firing = rb.firing(x)?;
    let mut num = 0.0;
    let mut den = 0.0;
    let mut c_lo = f64::INFINITY;
    let mut c_hi = f64::NEG_INFINITY;
    for (a, r) in firing.iter().zip(rb.rules()) {
        if *a > 0.0 {
            num += a * r.output_center();
            den += a;
            c_lo = c_lo.min(r.output_center());
            c_hi = c_hi.max(r.output_center());
        }
    }
    if den == 0.0 {
        return Err(FuzzyError::NoRuleFires { x: x.to_vec() });
    }
    Ok(InferenceResult {
        y_star: (num / den).clamp(c_lo, c_hi),
        core: None,
        firing,
    })
}

/// `I_j(x)`: the whole line when rule `j` does not fire, otherwise its
/// positive part `[c_j - d_j z - s_j, c_j + d_j z + s_j]`,
/// `z = ‖x - a_j‖_{p,b_j}`. Equals the α-cut of `B_j` at level `A_j(x)`.
pub fn rule_output_interval(rb: &RuleBase, j: usize, x: &[f64]) -> Result<OutputInterval> {
    let z = rb.antecedent_distance(j, x)?;
    if rb.act().evaluate(z) == 0.0 {
        return Ok(OutputInterval::unbounded());
    }
    Ok(positive_part(rb, j, z))
}

fn positive_part(rb: &RuleBase, j: usize, z: f64) -> OutputInterval {
    let r = &rb.rules()[j];
    let half = r.output_width() * z + r.plateau();
    OutputInterval::new(r.output_center() - half, r.output_center() + half)
}

/// Relative round-off allowance when deciding that two interval endpoints
/// cross. Endpoints closer than this are treated as touching.
pub const ROUNDOFF_SLACK: f64 = 1e-12;

/// Mean-of-maxima output of an implicative radial system.
///
/// Only firing rules are intersected. Fails with
/// [`FuzzyError::NoRuleFires`] when no rule fires and with
/// [`FuzzyError::Incoherent`] when the intervals of the firing rules do not
/// meet; the witness is the first rule with the largest left endpoint and
/// the first rule with the smallest right endpoint.
pub fn infer_implicative(rb: &RuleBase, x: &[f64]) -> Result<InferenceResult> {
    require(rb, Representation::Implicative, "implicative inference")?;
    rb.check_input(x)?;
    let m = rb.len();
    let mut firing = Vec::with_capacity(m);
    let mut high: Option<(usize, OutputInterval)> = None;
    let mut low: Option<(usize, OutputInterval)> = None;
    let mut scale: f64 = 1.0;
    for j in 0..m {
        let z = rb.antecedent_distance(j, x)?;
        let a = rb.act().evaluate(z);
        firing.push(a);
        if a == 0.0 {
            continue;
        }
        let iv = positive_part(rb, j, z);
        scale = scale.max(iv.lo.abs()).max(iv.hi.abs());
        if high.is_none_or(|(_, h)| iv.lo > h.lo) {
            high = Some((j, iv));
        }
        if low.is_none_or(|(_, l)| iv.hi < l.hi) {
            low = Some((j, iv));
        }
    }
    let (Some((hj, hiv)), Some((lj, liv))) = (high, low) else {
        return Err(FuzzyError::NoRuleFires { x: x.to_vec() });
    };
    let (lo, hi) = (hiv.lo, liv.hi);
    let core = if lo <= hi {
        OutputInterval::new(lo, hi)
    } else if lo - hi <= ROUNDOFF_SLACK * scale {
        OutputInterval::point(0.5 * (lo + hi))
    } else {
        return Err(FuzzyError::Incoherent {
            x: x.to_vec(),
            witness: IncoherenceWitness {
                high: hj,
                low: lj,
                high_interval: hiv,
                low_interval: liv,
            },
        });
    };
    Ok(InferenceResult {
        y_star: core.midpoint(),
        core: Some(core),
        firing,
    })
}

/// Pointwise value of the inferred output set `B'(y) = RB(x, y)`.
///
/// Conjunctive: `max_j T(A_j(x), B_j(y))`. Implicative:
/// `min_j (A_j(x) -> B_j(y))` with the residuum of the rule base's t-norm.
pub fn relation_value(rb: &RuleBase, x: &[f64], y: f64) -> Result<f64> {
    let firing = rb.firing(x)?;
    Ok(relation_from_firing(rb, &firing, y))
}

pub(crate) fn relation_from_firing(rb: &RuleBase, firing: &[f64], y: f64) -> f64 {
    let tn = rb.tnorm();
    let act = rb.act();
    let pairs = firing.iter().zip(rb.rules());
    match rb.representation() {
        Representation::Conjunctive => pairs
            .map(|(a, r)| tn.apply(*a, r.consequent(act, y)))
            .fold(0.0, f64::max),
        Representation::Implicative => pairs
            .map(|(a, r)| tn.residuum(*a, r.consequent(act, y)))
            .fold(1.0, f64::min),
    }
}
