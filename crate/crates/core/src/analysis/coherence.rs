use std::fmt;

use serde::Serialize;

use super::minimize::PairObjective;
use crate::error::{FuzzyError, IncoherenceWitness, Result};
use crate::geometry::{lp_norm, ScaledNorm};
use crate::inference::{rule_output_interval, ROUNDOFF_SLACK};
use crate::radial_sets::{ActKind, Representation, Rule, RuleBase};

/// Default tolerance of the pairwise minimisation.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Iteration budget per starting point of the pairwise minimisation.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoherenceVerdict {
    CertifiedCoherent,
    CertifiedIncoherent,
    Unknown,
}

impl fmt::Display for CoherenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoherenceVerdict::CertifiedCoherent => "CertifiedCoherent",
            CoherenceVerdict::CertifiedIncoherent => "CertifiedIncoherent",
            CoherenceVerdict::Unknown => "Unknown",
        })
    }
}

/// How pairs are tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoherenceMode {
    /// The closed-form inequality with `min{d_j α_j, d_k α_k} ‖a_j - a_k‖_p`.
    Sufficient,
    /// Numerical minimisation of the pair objective.
    Exact,
}

impl fmt::Display for CoherenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoherenceMode::Sufficient => "SufficientInequality",
            CoherenceMode::Exact => "ExactPairwiseMin",
        })
    }
}

impl std::str::FromStr for CoherenceMode {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sufficient" => Ok(CoherenceMode::Sufficient),
            "exact" => Ok(CoherenceMode::Exact),
            _ => Err(FuzzyError::InvalidParameter(format!(
                "unknown coherence mode {s:?} (expected sufficient or exact)"
            ))),
        }
    }
}

/// Zero-based pair `j < k` and its coherence margin. A pair passes when the
/// margin is non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairMargin {
    pub j: usize,
    pub k: usize,
    pub margin: f64,
}

/// A pair that failed its test.
#[derive(Clone, Debug, PartialEq)]
pub struct PairWitness {
    pub j: usize,
    pub k: usize,
    pub margin: f64,
    /// Minimiser of the pair objective (exact mode).
    pub argmin: Option<Vec<f64>>,
    /// Minimum of the pair objective (exact mode).
    pub min_value: Option<f64>,
    /// Disjoint firing intervals found at `argmin`.
    pub incoherence: Option<IncoherenceWitness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceReport {
    pub verdict: CoherenceVerdict,
    pub method: CoherenceMode,
    /// One entry per unordered pair, in lexicographic order.
    pub pair_margins: Vec<PairMargin>,
    pub witnesses: Vec<PairWitness>,
}

impl CoherenceReport {
    pub fn margin(&self, j: usize, k: usize) -> Option<f64> {
        let (j, k) = (j.min(k), j.max(k));
        self.pair_margins.iter().find(|m| m.j == j && m.k == k).map(|m| m.margin)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    Coherent,
    Incoherent,
    Unknown,
}

/// Outcome of [`coherence_exact_pair`].
#[derive(Clone, Debug, PartialEq)]
pub struct PairResult {
    pub j: usize,
    pub k: usize,
    /// Best value of `d_j ‖x - a_j‖_{p,b_j} + d_k ‖x - a_k‖_{p,b_k}` found.
    pub min_value: f64,
    /// Proven lower bound on the minimum.
    pub lower_bound: f64,
    pub argmin: Vec<f64>,
    /// `min_value + s_j + s_k - |c_j - c_k|`.
    pub margin: f64,
    pub verdict: PairVerdict,
    pub incoherence: Option<IncoherenceWitness>,
}

fn require_implicative(rb: &RuleBase) -> Result<()> {
    if rb.representation() == Representation::Implicative {
        Ok(())
    } else {
        Err(FuzzyError::WrongRepresentation {
            operation: "coherence",
            expected: "implicative",
        })
    }
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |j| (j + 1..m).map(move |k| (j, k)))
}

fn output_gap(rj: &Rule, rk: &Rule) -> f64 {
    rj.plateau() + rk.plateau() - (rj.output_center() - rk.output_center()).abs()
}

/// `min{d_j α_j, d_k α_k} ‖a_j - a_k‖_p + s_j + s_k - |c_j - c_k|` with
/// `α = 1 / max_i b_i` and the unscaled norm of the rule base's exponent.
pub fn sufficient_margin(rb: &RuleBase, j: usize, k: usize) -> Result<f64> {
    let (rj, rk) = (rb.rule(j)?, rb.rule(k)?);
    let diff: Vec<f64> = rj.center().iter().zip(rk.center()).map(|(a, b)| a - b).collect();
    let slope = (rj.output_width() * rj.alpha()).min(rk.output_width() * rk.alpha());
    Ok(slope * lp_norm(rb.p(), &diff) + output_gap(rj, rk))
}

/// Checks every unordered pair against the closed-form sufficient
/// inequality. All pairs passing certifies coherence; a failing pair leaves
/// the verdict open.
pub fn coherence_sufficient(rb: &RuleBase) -> Result<CoherenceReport> {
    require_implicative(rb)?;
    let mut pair_margins = Vec::new();
    let mut witnesses = Vec::new();
    for (j, k) in pairs(rb.len()) {
        let margin = sufficient_margin(rb, j, k)?;
        pair_margins.push(PairMargin { j, k, margin });
        if margin < 0.0 {
            witnesses.push(PairWitness {
                j,
                k,
                margin,
                argmin: None,
                min_value: None,
                incoherence: None,
            });
        }
    }
    let verdict = if witnesses.is_empty() {
        CoherenceVerdict::CertifiedCoherent
    } else {
        CoherenceVerdict::Unknown
    };
    Ok(CoherenceReport {
        verdict,
        method: CoherenceMode::Sufficient,
        pair_margins,
        witnesses,
    })
}

/// Minimises the pair objective of rules `j` and `k` and decides the pair.
///
/// The pair is coherent when `|c_j - c_k| <= min J + s_j + s_k` holds to
/// within `tol`. A failing pair is incoherent when both rules fire at the
/// minimiser and their intervals there are disjoint; for a type Ib shape the
/// failure alone decides it.
pub fn coherence_exact_pair(rb: &RuleBase, j: usize, k: usize, tol: f64) -> Result<PairResult> {
    coherence_exact_pair_with_budget(rb, j, k, tol, DEFAULT_PAIR_BUDGET)
}

pub fn coherence_exact_pair_with_budget(
    rb: &RuleBase,
    j: usize,
    k: usize,
    tol: f64,
    budget: usize,
) -> Result<PairResult> {
    require_implicative(rb)?;
    if j == k {
        return Err(FuzzyError::InvalidParameter(format!("pair needs two distinct rules, got {j} twice")));
    }
    let (rj, rk) = (rb.rule(j)?, rb.rule(k)?);
    let min = PairObjective::new(rj, rk, rb.p())?.minimize(tol, budget)?;
    let margin = min.value + output_gap(rj, rk);
    let (verdict, incoherence) = if margin >= -tol {
        (PairVerdict::Coherent, None)
    } else {
        let witness = disjoint_at(rb, j, k, &min.argmin)?;
        let verdict = match (&witness, rb.act().kind()) {
            (Some(_), _) | (None, ActKind::TypeIb) => PairVerdict::Incoherent,
            (None, ActKind::TypeIa { .. }) => PairVerdict::Unknown,
        };
        (verdict, witness)
    };
    Ok(PairResult {
        j,
        k,
        min_value: min.value,
        lower_bound: min.lower_bound,
        argmin: min.argmin,
        margin,
        verdict,
        incoherence,
    })
}

/// The two rules' intervals at `x`, if both fire and the intervals are
/// disjoint.
fn disjoint_at(rb: &RuleBase, j: usize, k: usize, x: &[f64]) -> Result<Option<IncoherenceWitness>> {
    let (aj, ak) = (rb.antecedent_degree(j, x)?, rb.antecedent_degree(k, x)?);
    if aj == 0.0 || ak == 0.0 {
        return Ok(None);
    }
    let (ij, ik) = (rule_output_interval(rb, j, x)?, rule_output_interval(rb, k, x)?);
    let (high, low, hi_iv, lo_iv) = if ij.lo >= ik.lo { (j, k, ij, ik) } else { (k, j, ik, ij) };
    let scale = [ij.lo, ij.hi, ik.lo, ik.hi].iter().fold(1.0f64, |s, v| s.max(v.abs()));
    if hi_iv.lo - lo_iv.hi > ROUNDOFF_SLACK * scale {
        Ok(Some(IncoherenceWitness {
            high,
            low,
            high_interval: hi_iv,
            low_interval: lo_iv,
        }))
    } else {
        Ok(None)
    }
}

/// Coherence of the whole rule base, pair by pair.
///
/// In exact mode the margins are `min J + s_j + s_k - |c_j - c_k|`; one
/// incoherent pair makes the system incoherent.
pub fn coherence_full(rb: &RuleBase, mode: CoherenceMode, tol: f64) -> Result<CoherenceReport> {
    if mode == CoherenceMode::Sufficient {
        return coherence_sufficient(rb);
    }
    require_implicative(rb)?;
    let mut pair_margins = Vec::new();
    let mut witnesses = Vec::new();
    let mut any_incoherent = false;
    let mut any_unknown = false;
    for (j, k) in pairs(rb.len()) {
        let r = coherence_exact_pair(rb, j, k, tol)?;
        pair_margins.push(PairMargin { j, k, margin: r.margin });
        match r.verdict {
            PairVerdict::Coherent => continue,
            PairVerdict::Incoherent => any_incoherent = true,
            PairVerdict::Unknown => any_unknown = true,
        }
        witnesses.push(PairWitness {
            j,
            k,
            margin: r.margin,
            argmin: Some(r.argmin),
            min_value: Some(r.min_value),
            incoherence: r.incoherence,
        });
    }
    let verdict = if any_incoherent {
        CoherenceVerdict::CertifiedIncoherent
    } else if any_unknown {
        CoherenceVerdict::Unknown
    } else {
        CoherenceVerdict::CertifiedCoherent
    };
    Ok(CoherenceReport {
        verdict,
        method: CoherenceMode::Exact,
        pair_margins,
        witnesses,
    })
}

/// `min{d_j α_j, d_k α_k} ‖a_j - a_k‖_p`, the closed-form lower bound on the
/// pair objective.
pub fn relaxed_pair_minimum(rb: &RuleBase, j: usize, k: usize) -> Result<f64> {
    let (rj, rk) = (rb.rule(j)?, rb.rule(k)?);
    let nj = ScaledNorm::new(rb.p(), rj.widths().to_vec())?;
    let nk = ScaledNorm::new(rb.p(), rk.widths().to_vec())?;
    let diff: Vec<f64> = rj.center().iter().zip(rk.center()).map(|(a, b)| a - b).collect();
    let slope = (rj.output_width() * nj.unscaled_lower_bound_factor())
        .min(rk.output_width() * nk.unscaled_lower_bound_factor());
    Ok(slope * lp_norm(rb.p(), &diff))
}
