use crate::error::{invalid, FuzzyError, Result};
use crate::radial_sets::ActFunction;

/// One MISO rule `IF x is A_j THEN y is B_j`.
///
/// The antecedent is centred at `center` with per-axis `widths`; the
/// consequent is centred at `output_center` with width `output_width` and a
/// plateau of half-width `plateau` on which it equals one.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    center: Vec<f64>,
    widths: Vec<f64>,
    output_center: f64,
    output_width: f64,
    plateau: f64,
}

impl Rule {
    pub fn new(
        center: Vec<f64>,
        widths: Vec<f64>,
        output_center: f64,
        output_width: f64,
        plateau: f64,
    ) -> Result<Self> {
        if center.is_empty() {
            return Err(invalid("rule antecedent needs at least one input"));
        }
        if center.len() != widths.len() {
            return Err(FuzzyError::DimensionMismatch {
                expected: center.len(),
                found: widths.len(),
            });
        }
        if let Some(v) = center.iter().find(|v| !v.is_finite()) {
            return Err(invalid(format!("antecedent centers must be finite, got {v}")));
        }
        if let Some(b) = widths.iter().find(|b| !(**b > 0.0 && b.is_finite())) {
            return Err(invalid(format!("widths must be positive, got {b}")));
        }
        if !output_center.is_finite() {
            return Err(invalid("consequent center must be finite"));
        }
        if !(output_width > 0.0 && output_width.is_finite()) {
            return Err(invalid(format!(
                "consequent width must be positive, got {output_width}"
            )));
        }
        if !(plateau >= 0.0 && plateau.is_finite()) {
            return Err(invalid(format!(
                "plateau half-width must be non-negative, got {plateau}"
            )));
        }
        Ok(Self {
            center,
            widths,
            output_center,
            output_width,
            plateau,
        })
    }

    /// Single-input rule.
    pub fn siso(center: f64, width: f64, output_center: f64, output_width: f64, plateau: f64) -> Result<Self> {
        Self::new(vec![center], vec![width], output_center, output_width, plateau)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn widths(&self) -> &[f64] {
        &self.widths
    }

    pub fn output_center(&self) -> f64 {
        self.output_center
    }

    pub fn output_width(&self) -> f64 {
        self.output_width
    }

    pub fn plateau(&self) -> f64 {
        self.plateau
    }

    /// `1 / max_i b_i`.
    pub fn alpha(&self) -> f64 {
        1.0 / self.widths.iter().copied().fold(0.0, f64::max)
    }

    /// `A_ji(x_i) = act(|x_i - a_ji| / b_ji)`.
    pub fn antecedent_1d(&self, act: &ActFunction, axis: usize, x: f64) -> Result<f64> {
        if axis >= self.dim() {
            return Err(FuzzyError::IndexOutOfRange {
                index: axis,
                len: self.dim(),
            });
        }
        Ok(act.evaluate((x - self.center[axis]).abs() / self.widths[axis]))
    }

    /// `B_j(y) = act(max{0, |y - c_j| - s_j} / d_j)`.
    pub fn consequent(&self, act: &ActFunction, y: f64) -> f64 {
        let excess = ((y - self.output_center).abs() - self.plateau).max(0.0);
        act.evaluate(excess / self.output_width)
    }
}

/// Grid points `y` with `B(y) >= alpha`, the sampled α-cut of a consequent.
///
/// For `alpha = 0` this is the whole grid.
pub fn alpha_cut_1d(rule: &Rule, act: &ActFunction, alpha: f64, grid: &[f64]) -> Vec<f64> {
    grid.iter()
        .copied()
        .filter(|&y| alpha <= 0.0 || rule.consequent(act, y) >= alpha)
        .collect()
}
