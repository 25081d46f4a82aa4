use std::fmt;
use std::sync::Arc;

use crate::algebra::Generator;
use crate::error::{invalid, Result};

/// Support behaviour of an act function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ActKind {
    /// Strictly decreasing on `[0, cutoff]` and zero from `cutoff` on.
    TypeIa { cutoff: f64 },
    /// Strictly decreasing and positive everywhere, tending to zero.
    TypeIb,
}

impl ActKind {
    pub fn cutoff(self) -> f64 {
        match self {
            ActKind::TypeIa { cutoff } => cutoff,
            ActKind::TypeIb => f64::INFINITY,
        }
    }
}

/// A user supplied shape function.
pub struct CustomAct {
    name: String,
    kind: ActKind,
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for CustomAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomAct")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

/// The shared shape `act: [0, inf) -> [0, 1]` of a radial rule base.
///
/// Every one-dimensional membership in the rule base is `act` applied to a
/// scaled distance, and every n-dimensional antecedent is `act` applied to a
/// scaled ℓp distance.
#[derive(Clone, Debug)]
pub enum ActFunction {
    /// `max{0, 1 - z}`.
    Triangular,
    /// `exp(-z^2)`.
    Gaussian,
    /// `t^(-1)(q z^p)` for an additive generator `t`.
    Generated { generator: Generator, q: f64, p: f64 },
    Custom(Arc<CustomAct>),
}

impl ActFunction {
    pub fn generated(generator: Generator, q: f64, p: f64) -> Result<Self> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(invalid(format!("act scale q must be positive, got {q}")));
        }
        if !(p >= 1.0 && p.is_finite()) {
            return Err(invalid(format!("act exponent p must be finite and >= 1, got {p}")));
        }
        Ok(ActFunction::Generated { generator, q, p })
    }

    /// Wraps an arbitrary shape and checks it on a sample grid.
    ///
    /// Continuity cannot be sampled; it is assumed.
    pub fn custom(
        name: impl Into<String>,
        kind: ActKind,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if let ActKind::TypeIa { cutoff } = kind {
            if !(cutoff > 0.0 && cutoff.is_finite()) {
                return Err(invalid(format!("act cutoff must be positive, got {cutoff}")));
            }
        }
        let act = ActFunction::Custom(Arc::new(CustomAct {
            name: name.into(),
            kind,
            f: Box::new(f),
        }));
        act.validate()?;
        Ok(act)
    }

    pub fn name(&self) -> &str {
        match self {
            ActFunction::Triangular => "triangular",
            ActFunction::Gaussian => "gaussian",
            ActFunction::Generated { .. } => "generator",
            ActFunction::Custom(c) => &c.name,
        }
    }

    pub fn kind(&self) -> ActKind {
        match self {
            ActFunction::Triangular => ActKind::TypeIa { cutoff: 1.0 },
            ActFunction::Gaussian => ActKind::TypeIb,
            ActFunction::Generated { generator, q, p } => {
                let t0 = generator.at_zero();
                if t0.is_finite() {
                    ActKind::TypeIa {
                        cutoff: (t0 / q).powf(1.0 / p),
                    }
                } else {
                    ActKind::TypeIb
                }
            }
            ActFunction::Custom(c) => c.kind,
        }
    }

    pub fn evaluate(&self, z: f64) -> f64 {
        match self {
            ActFunction::Triangular => (1.0 - z).max(0.0),
            ActFunction::Gaussian => (-z * z).exp(),
            ActFunction::Generated { generator, q, p } => {
                let arg = if *p == 1.0 { q * z } else { q * z.powf(*p) };
                generator.pseudo_inverse(arg)
            }
            ActFunction::Custom(c) => (c.f)(z),
        }
    }

    /// Sampled check of the act-function axioms: `act(0) = 1`, values in
    /// `[0, 1]`, non-increasing, strictly decreasing until the cutoff, zero
    /// at the cutoff (type Ia) or positive with a vanishing tail (type Ib).
    pub fn validate(&self) -> Result<()> {
        let kind = self.kind();
        if (self.evaluate(0.0) - 1.0).abs() > 1e-12 {
            return Err(invalid(format!(
                "act({}) must satisfy act(0) = 1, got {}",
                self.name(),
                self.evaluate(0.0)
            )));
        }
        let horizon = match kind {
            ActKind::TypeIa { cutoff } => cutoff,
            ActKind::TypeIb => 5.0,
        };
        const STEPS: usize = 2000;
        let mut prev = self.evaluate(0.0);
        for i in 1..=STEPS {
            let z = horizon * i as f64 / STEPS as f64;
            let v = self.evaluate(z);
            if !(0.0..=1.0).contains(&v) {
                return Err(invalid(format!("act({z}) = {v} is outside [0, 1]")));
            }
            let strict_zone = match kind {
                ActKind::TypeIa { .. } => i < STEPS,
                ActKind::TypeIb => true,
            };
            if strict_zone && !(v < prev) {
                return Err(invalid(format!(
                    "act must be strictly decreasing before its cutoff (z = {z})"
                )));
            }
            if v > prev {
                return Err(invalid(format!("act must be non-increasing (z = {z})")));
            }
            prev = v;
        }
        match kind {
            ActKind::TypeIa { cutoff } => {
                for z in [cutoff, cutoff * 1.5, cutoff * 10.0, cutoff * 1e6] {
                    let v = self.evaluate(z);
                    if v.abs() > 1e-12 {
                        return Err(invalid(format!(
                            "type Ia act must vanish from its cutoff on, act({z}) = {v}"
                        )));
                    }
                }
            }
            ActKind::TypeIb => {
                let tail = self.evaluate(1e6);
                if !(tail < 1e-6) {
                    return Err(invalid(format!("type Ib act must tend to 0, act(1e6) = {tail}")));
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for ActFunction {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ActFunction::Triangular, ActFunction::Triangular) => true,
            (ActFunction::Gaussian, ActFunction::Gaussian) => true,
            (
                ActFunction::Generated { generator: g1, q: q1, p: p1 },
                ActFunction::Generated { generator: g2, q: q2, p: p2 },
            ) => g1 == g2 && q1 == q2 && p1 == p2,
            (ActFunction::Custom(a), ActFunction::Custom(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}
