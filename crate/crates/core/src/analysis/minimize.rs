//! Minimisation of the pair objective
//! `J(x) = d_j ‖x - a_j‖_{p,b_j} + d_k ‖x - a_k‖_{p,b_k}` over ℝⁿ.
//!
//! `J` is convex but not smooth at the two centers (and, for `p = 1` or
//! `p = inf`, along whole hyperplanes). It is minimised by normalised
//! subgradient descent with a diminishing step, restarted in epochs from
//! the best point so far, from three starting points: the midpoint and
//! both centers. For `p = 1` the objective separates by coordinate and the
//! minimiser is taken in closed form instead.
//!
//! Every visited point also yields a dual certificate. For any `y` with
//! `‖b_j ∘ y‖_q <= d_j` and `‖b_k ∘ y‖_q <= d_k` (`q` conjugate to `p`),
//! `J(x) >= <y, a_k - a_j>` for all `x`, so the search reports a proven
//! lower bound next to its best value.

use crate::error::{FuzzyError, Result};
use crate::geometry::{Exponent, ScaledNorm};
use crate::radial_sets::Rule;

/// Result of minimising one pair objective.
#[derive(Clone, Debug, PartialEq)]
pub struct PairObjectiveMin {
    /// Best objective value found (an upper bound on the minimum).
    pub value: f64,
    pub argmin: Vec<f64>,
    /// Proven lower bound on the minimum.
    pub lower_bound: f64,
    pub iterations: usize,
}

impl PairObjectiveMin {
    pub fn gap(&self) -> f64 {
        (self.value - self.lower_bound).max(0.0)
    }
}

/// The convex pair objective of two rules under a shared exponent.
#[derive(Clone, Debug)]
pub struct PairObjective {
    center_j: Vec<f64>,
    center_k: Vec<f64>,
    norm_j: ScaledNorm,
    norm_k: ScaledNorm,
    weight_j: f64,
    weight_k: f64,
}

impl PairObjective {
    pub fn new(rule_j: &Rule, rule_k: &Rule, p: Exponent) -> Result<Self> {
        if rule_j.dim() != rule_k.dim() {
            return Err(FuzzyError::DimensionMismatch {
                expected: rule_j.dim(),
                found: rule_k.dim(),
            });
        }
        Ok(Self {
            center_j: rule_j.center().to_vec(),
            center_k: rule_k.center().to_vec(),
            norm_j: ScaledNorm::new(p, rule_j.widths().to_vec())?,
            norm_k: ScaledNorm::new(p, rule_k.widths().to_vec())?,
            weight_j: rule_j.output_width(),
            weight_k: rule_k.output_width(),
        })
    }

    pub fn dim(&self) -> usize {
        self.center_j.len()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.weight_j * self.norm_j.distance(x, &self.center_j).unwrap_or(f64::NAN)
            + self.weight_k * self.norm_k.distance(x, &self.center_k).unwrap_or(f64::NAN)
    }

    /// Gradients (or the zero subgradient at a center) of the two terms.
    fn term_subgradients(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let dj: Vec<f64> = x.iter().zip(&self.center_j).map(|(a, b)| a - b).collect();
        let dk: Vec<f64> = x.iter().zip(&self.center_k).map(|(a, b)| a - b).collect();
        let mut gj = self.norm_j.subgradient(&dj).unwrap_or_default();
        let mut gk = self.norm_k.subgradient(&dk).unwrap_or_default();
        gj.iter_mut().for_each(|v| *v *= self.weight_j);
        gk.iter_mut().for_each(|v| *v *= self.weight_k);
        (gj, gk)
    }

    fn offset(&self) -> Vec<f64> {
        self.center_k
            .iter()
            .zip(&self.center_j)
            .map(|(k, j)| k - j)
            .collect()
    }

    /// `<y, a_k - a_j>` after shrinking `y` into both dual balls.
    fn certify(&self, y: &[f64], w: &[f64]) -> f64 {
        let nj = self.norm_j.dual_norm(y).unwrap_or(f64::INFINITY);
        let nk = self.norm_k.dual_norm(y).unwrap_or(f64::INFINITY);
        let mut scale: f64 = 1.0;
        if nj > self.weight_j {
            scale = scale.min(self.weight_j / nj);
        }
        if nk > self.weight_k {
            scale = scale.min(self.weight_k / nk);
        }
        if !scale.is_finite() {
            return 0.0;
        }
        let inner: f64 = y.iter().zip(w).map(|(a, b)| a * b).sum();
        // shave a few ulps so rounding in the scaling cannot overstate the bound
        (scale * inner * (1.0 - 4.0 * f64::EPSILON)).max(0.0)
    }

    /// Best dual bound obtainable from the subgradients at `x`.
    fn dual_bound(&self, gj: &[f64], gk: &[f64]) -> f64 {
        let w = self.offset();
        let neg_gk: Vec<f64> = gk.iter().map(|v| -v).collect();
        let avg: Vec<f64> = gj.iter().zip(&neg_gk).map(|(a, b)| 0.5 * (a + b)).collect();
        [gj, neg_gk.as_slice(), avg.as_slice()]
            .into_iter()
            .map(|y| self.certify(y, &w))
            .fold(0.0, f64::max)
    }

    /// Coordinatewise dual point `y_i = sign(w_i) min(d_j / b_ji, d_k / b_ki)`,
    /// optimal for `p = 1` where `J` separates by coordinate.
    fn separable_bound(&self) -> f64 {
        let w = self.offset();
        let y: Vec<f64> = w
            .iter()
            .zip(self.norm_j.scales().iter().zip(self.norm_k.scales()))
            .map(|(wi, (bj, bk))| wi.signum() * (self.weight_j / bj).min(self.weight_k / bk))
            .collect();
        self.certify(&y, &w)
    }

    /// For `p = inf` the dual is the linear program
    /// `max Σ |w_i| u_i` s.t. `Σ b_ji u_i <= d_j`, `Σ b_ki u_i <= d_k`, `u >= 0`,
    /// whose optimum sits on a vertex with at most two nonzero coordinates.
    fn cubic_bound(&self) -> f64 {
        let w = self.offset();
        let (bj, bk) = (self.norm_j.scales(), self.norm_k.scales());
        let (dj, dk) = (self.weight_j, self.weight_k);
        let n = w.len();
        let mut best: f64 = 0.0;
        let mut try_point = |u: &[(usize, f64)]| {
            let mut y = vec![0.0; n];
            for &(i, ui) in u {
                y[i] = w[i].signum() * ui;
            }
            best = best.max(self.certify(&y, &w));
        };
        for i in 0..n {
            try_point(&[(i, (dj / bj[i]).min(dk / bk[i]))]);
            for l in i + 1..n {
                let det = bj[i] * bk[l] - bj[l] * bk[i];
                if det == 0.0 {
                    continue;
                }
                let ui = (dj * bk[l] - dk * bj[l]) / det;
                let ul = (bj[i] * dk - bk[i] * dj) / det;
                if ui >= 0.0 && ul >= 0.0 {
                    try_point(&[(i, ui), (l, ul)]);
                }
            }
        }
        best
    }

    /// Per coordinate, `J` is `u |t - a_ji| + v |t - a_ki|`, minimised at the
    /// center coordinate with the larger weight.
    fn separable_min(&self) -> PairObjectiveMin {
        let argmin: Vec<f64> = self
            .center_j
            .iter()
            .zip(&self.center_k)
            .zip(self.norm_j.scales().iter().zip(self.norm_k.scales()))
            .map(|((aj, ak), (bj, bk))| if self.weight_j / bj >= self.weight_k / bk { *aj } else { *ak })
            .collect();
        let value = self.value(&argmin);
        PairObjectiveMin {
            value,
            argmin,
            lower_bound: self.separable_bound().min(value),
            iterations: 0,
        }
    }

    /// Minimises `J` to within `tol` (duality gap, or step length times
    /// subgradient norm once the step has shrunk).
    pub fn minimize(&self, tol: f64, max_iter: usize) -> Result<PairObjectiveMin> {
        if !(tol > 0.0) {
            return Err(FuzzyError::InvalidParameter(format!("tol must be positive, got {tol}")));
        }
        let n = self.dim();
        if self.norm_j.p() == Exponent::Finite(1.0) {
            return Ok(self.separable_min());
        }
        let mid: Vec<f64> = self
            .center_j
            .iter()
            .zip(&self.center_k)
            .map(|(a, b)| 0.5 * (a + b))
            .collect();
        let spread = self
            .center_j
            .iter()
            .zip(&self.center_k)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let starts = [mid, self.center_j.clone(), self.center_k.clone()];

        let mut best = PairObjectiveMin {
            value: f64::INFINITY,
            argmin: starts[0].clone(),
            lower_bound: match self.norm_j.p() {
                Exponent::Infinity => self.cubic_bound(),
                _ => self.separable_bound(),
            },
            iterations: 0,
        };
        let mut total_iter = 0;
        let mut converged = false;
        for start in &starts {
            let run = self.descend(start, spread, tol, max_iter, &mut best);
            total_iter += run.0;
            converged |= run.1;
            if best.gap() <= tol {
                converged = true;
                break;
            }
        }
        best.iterations = total_iter;
        if !converged {
            return Err(FuzzyError::NonConvergence {
                iterations: total_iter,
                best_value: best.value,
                best_x: best.argmin,
            });
        }
        debug_assert_eq!(best.argmin.len(), n);
        Ok(best)
    }

    /// One multi-epoch descent run. Returns (iterations, converged).
    fn descend(
        &self,
        start: &[f64],
        spread: f64,
        tol: f64,
        max_iter: usize,
        best: &mut PairObjectiveMin,
    ) -> (usize, bool) {
        const EPOCH: usize = 64;
        let consider = |x: &[f64], v: f64, best: &mut PairObjectiveMin| {
            if v < best.value {
                best.value = v;
                best.argmin = x.to_vec();
            }
        };

        let v0 = self.value(start);
        consider(start, v0, best);
        if v0 == 0.0 {
            best.lower_bound = 0.0;
            return (0, true);
        }

        let mut step = spread.max(1e-3) * 0.5;
        let mut anchor = start.to_vec();
        let mut anchor_value = v0;
        let mut iterations = 0;
        while iterations < max_iter {
            let mut x = anchor.clone();
            let mut epoch_best = anchor_value;
            let mut epoch_arg = anchor.clone();
            for i in 0..EPOCH {
                iterations += 1;
                let (gj, gk) = self.term_subgradients(&x);
                best.lower_bound = best.lower_bound.max(self.dual_bound(&gj, &gk));
                let g: Vec<f64> = gj.iter().zip(&gk).map(|(a, b)| a + b).collect();
                let g_norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
                if g_norm == 0.0 {
                    // 0 is in the subdifferential: x is a minimiser
                    let v = self.value(&x);
                    best.lower_bound = best.lower_bound.max(v);
                    consider(&x, v, best);
                    return (iterations, true);
                }
                let h = step / ((i + 1) as f64).sqrt();
                for (xi, gi) in x.iter_mut().zip(&g) {
                    *xi -= h * gi / g_norm;
                }
                let v = self.value(&x);
                if v < epoch_best {
                    epoch_best = v;
                    epoch_arg.copy_from_slice(&x);
                }
            }
            consider(&epoch_arg, epoch_best, best);
            if best.gap() <= tol {
                return (iterations, true);
            }
            let improved = anchor_value - epoch_best > tol;
            anchor = epoch_arg;
            anchor_value = epoch_best;
            if !improved {
                step *= 0.25;
            }
            // any further move changes J by at most step * |g|
            if step * self.lipschitz() < tol {
                return (iterations, true);
            }
        }
        (iterations, false)
    }

    /// Lipschitz constant of `J` with respect to the Euclidean norm.
    fn lipschitz(&self) -> f64 {
        let per = |norm: &ScaledNorm, w: f64| {
            let n = norm.dim() as f64;
            // ‖u‖_p <= n^(1/p - 1/2) ‖u‖_2 for p < 2
            let equiv = match norm.p() {
                Exponent::Finite(p) if p < 2.0 => n.powf(1.0 / p - 0.5),
                _ => 1.0,
            };
            let min_b = norm.scales().iter().copied().fold(f64::INFINITY, f64::min);
            w * equiv / min_b
        };
        per(&self.norm_j, self.weight_j) + per(&self.norm_k, self.weight_k)
    }
}
