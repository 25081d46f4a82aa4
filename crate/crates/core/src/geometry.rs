//! Scaled ℓp norms on ℝⁿ and axis-aligned input boxes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, FuzzyError, Result};

/// Exponent of an ℓp norm, `p >= 1` or exactly infinity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn finite(p: f64) -> Result<Self> {
        if p.is_infinite() && p > 0.0 {
            return Ok(Exponent::Infinity);
        }
        if !(p >= 1.0) || !p.is_finite() {
            return Err(invalid(format!("norm exponent must be >= 1, got {p}")));
        }
        Ok(Exponent::Finite(p))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::Finite(p) => p,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    /// Hölder conjugate `q` with `1/p + 1/q = 1`.
    pub fn conjugate(self) -> Exponent {
        match self {
            Exponent::Infinity => Exponent::Finite(1.0),
            Exponent::Finite(1.0) => Exponent::Infinity,
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Exponent::Infinity),
            other => other
                .parse::<f64>()
                .map_err(|e| invalid(format!("bad norm exponent '{s}': {e}")))
                .and_then(Exponent::finite),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => serializer.serialize_f64(*p),
            Exponent::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        let parsed = match Raw::deserialize(deserializer)? {
            Raw::Num(p) => Exponent::finite(p),
            Raw::Text(s) => s.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

/// `‖x - center‖_{p,scales}` without allocating.
///
/// For finite `p` the largest scaled component is factored out before
/// powering so that large vectors do not overflow.
pub(crate) fn scaled_distance(p: Exponent, x: &[f64], center: &[f64], scales: &[f64]) -> f64 {
    let comp = |i: usize| ((x[i] - center[i]) / scales[i]).abs();
    let n = x.len();
    let peak = (0..n).map(comp).fold(0.0, f64::max);
    match p {
        Exponent::Infinity => peak,
        _ if peak == 0.0 || !peak.is_finite() => peak,
        Exponent::Finite(1.0) => (0..n).map(comp).sum(),
        Exponent::Finite(2.0) => {
            let s: f64 = (0..n).map(|i| (comp(i) / peak).powi(2)).sum();
            peak * s.sqrt()
        }
        Exponent::Finite(p) => {
            let s: f64 = (0..n).map(|i| (comp(i) / peak).powf(p)).sum();
            peak * s.powf(1.0 / p)
        }
    }
}

/// Unscaled ℓp norm.
pub fn lp_norm(p: Exponent, u: &[f64]) -> f64 {
    let ones = vec![1.0; u.len()];
    let zero = vec![0.0; u.len()];
    scaled_distance(p, u, &zero, &ones)
}

/// The scaled ℓp norm `(|u_1/b_1|^p + ... + |u_n/b_n|^p)^(1/p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledNorm {
    p: Exponent,
    scales: Vec<f64>,
}

impl ScaledNorm {
    pub fn new(p: Exponent, scales: Vec<f64>) -> Result<Self> {
        if scales.is_empty() {
            return Err(invalid("scaled norm needs at least one axis"));
        }
        if let Exponent::Finite(v) = p {
            Exponent::finite(v)?;
        }
        if let Some(b) = scales.iter().find(|b| !(**b > 0.0) || !b.is_finite()) {
            return Err(invalid(format!("widths must be positive, got {b}")));
        }
        Ok(Self { p, scales })
    }

    pub fn p(&self) -> Exponent {
        self.p
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn dim(&self) -> usize {
        self.scales.len()
    }

    pub fn norm(&self, u: &[f64]) -> Result<f64> {
        check_dim(self.dim(), u.len())?;
        let zero = vec![0.0; u.len()];
        Ok(scaled_distance(self.p, u, &zero, &self.scales))
    }

    /// `‖x - center‖_{p,b}`.
    pub fn distance(&self, x: &[f64], center: &[f64]) -> Result<f64> {
        check_dim(self.dim(), x.len())?;
        check_dim(self.dim(), center.len())?;
        Ok(scaled_distance(self.p, x, center, &self.scales))
    }

    /// `α = 1 / max_i b_i`, so that `α ‖u‖_p <= ‖u‖_{p,b}` for every `u`.
    pub fn unscaled_lower_bound_factor(&self) -> f64 {
        1.0 / self.scales.iter().copied().fold(0.0, f64::max)
    }

    /// The dual norm `‖b ∘ y‖_q` with `q` conjugate to `p`.
    pub fn dual_norm(&self, y: &[f64]) -> Result<f64> {
        check_dim(self.dim(), y.len())?;
        let scaled: Vec<f64> = y.iter().zip(&self.scales).map(|(v, b)| v * b).collect();
        Ok(lp_norm(self.p.conjugate(), &scaled))
    }

    /// One element of the subdifferential of `u ↦ ‖u‖_{p,b}` at `u`
    /// (zero at the origin).
    pub fn subgradient(&self, u: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.dim(), u.len())?;
        let n = u.len();
        let mut g = vec![0.0; n];
        let r: Vec<f64> = u.iter().zip(&self.scales).map(|(v, b)| v / b).collect();
        let norm = lp_norm(self.p, &r);
        if norm == 0.0 {
            return Ok(g);
        }
        match self.p {
            Exponent::Infinity => {
                let (i, _) = r
                    .iter()
                    .enumerate()
                    .fold((0, -1.0), |acc, (i, v)| if v.abs() > acc.1 { (i, v.abs()) } else { acc });
                g[i] = r[i].signum() / self.scales[i];
            }
            Exponent::Finite(1.0) => {
                for i in 0..n {
                    if r[i] != 0.0 {
                        g[i] = r[i].signum() / self.scales[i];
                    }
                }
            }
            Exponent::Finite(p) => {
                for i in 0..n {
                    let ratio = r[i].abs() / norm;
                    g[i] = r[i].signum() * ratio.powf(p - 1.0) / self.scales[i];
                }
            }
        }
        Ok(g)
    }
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(FuzzyError::DimensionMismatch { expected, found })
    }
}

/// Axis-aligned box `[lo_1, hi_1] × ... × [lo_n, hi_n]` with positive extent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct InputBox {
    bounds: Vec<(f64, f64)>,
}

impl InputBox {
    pub fn new(bounds: Vec<(f64, f64)>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(invalid("input box needs at least one axis"));
        }
        for (i, &(lo, hi)) in bounds.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite() && hi > lo) {
                return Err(invalid(format!(
                    "input box axis {i} must have positive finite extent, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { bounds })
    }

    /// The box `[lo, hi]^n`.
    pub fn cube(n: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![(lo, hi); n])
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter().zip(&self.bounds).all(|(v, (lo, hi))| *v >= *lo && *v <= *hi)
    }

    /// Maps a point of the unit cube onto the box.
    pub fn lerp(&self, unit: &[f64]) -> Vec<f64> {
        unit.iter()
            .zip(&self.bounds)
            .map(|(t, (lo, hi))| lo + t * (hi - lo))
            .collect()
    }
}

impl TryFrom<Vec<[f64; 2]>> for InputBox {
    type Error = FuzzyError;

    fn try_from(v: Vec<[f64; 2]>) -> Result<Self> {
        InputBox::new(v.into_iter().map(|[lo, hi]| (lo, hi)).collect())
    }
}

impl From<InputBox> for Vec<[f64; 2]> {
    fn from(b: InputBox) -> Self {
        b.bounds.into_iter().map(|(lo, hi)| [lo, hi]).collect()
    }
}
