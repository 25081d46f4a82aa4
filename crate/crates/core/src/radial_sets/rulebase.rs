use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::TNorm;
use crate::error::{invalid, FuzzyError, Result};
use crate::geometry::{check_dim, scaled_distance, Exponent, InputBox};
use crate::radial_sets::{verify_radial_property, ActFunction, ActKind, RadialCheck, RadialVerdict, Rule};

/// How the rules are combined into one fuzzy relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    /// `max_j T(A_j(x), B_j(y))`, defuzzified by weighted average.
    Conjunctive,
    /// `min_j (A_j(x) -> B_j(y))`, defuzzified by mean of maxima.
    Implicative,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Conjunctive => "conjunctive",
            Representation::Implicative => "implicative",
        })
    }
}

impl std::str::FromStr for Representation {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "conjunctive" | "conj" => Ok(Representation::Conjunctive),
            "implicative" | "impl" => Ok(Representation::Implicative),
            other => Err(invalid(format!(
                "unknown representation '{other}' (expected conjunctive or implicative)"
            ))),
        }
    }
}

/// A rule whose antecedent support is narrower than an analysis grid pitch.
#[derive(Clone, Debug, PartialEq)]
pub struct WidthLint {
    pub rule: usize,
    pub axis: usize,
    pub extent: f64,
    pub pitch: f64,
}

impl fmt::Display for WidthLint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule {} axis {}: antecedent extent {} is below grid pitch {}; the rule may be invisible to grid analyses",
            self.rule + 1,
            self.axis,
            self.extent,
            self.pitch
        )
    }
}

/// A radial MISO rule base.
///
/// Construction checks that every rule has the same input dimension and
/// that the `(tnorm, act, p)` triple has the radial property, so that every
/// antecedent can be evaluated as `act(‖x - a_j‖_{p,b_j})`.
#[derive(Clone, Debug)]
pub struct RuleBase {
    tnorm: TNorm,
    act: ActFunction,
    p: Exponent,
    representation: Representation,
    rules: Vec<Rule>,
    input_box: Option<InputBox>,
    radial_check: RadialVerdict,
}

impl RuleBase {
    pub fn new(
        tnorm: TNorm,
        act: ActFunction,
        p: Exponent,
        representation: Representation,
        rules: Vec<Rule>,
    ) -> Result<Self> {
        Self::with_check(tnorm, act, p, representation, rules, &RadialCheck::default())
    }

    pub fn with_check(
        tnorm: TNorm,
        act: ActFunction,
        p: Exponent,
        representation: Representation,
        rules: Vec<Rule>,
        check: &RadialCheck,
    ) -> Result<Self> {
        let n = match rules.first() {
            Some(r) => r.dim(),
            None => return Err(invalid("a rule base needs at least one rule")),
        };
        for (j, r) in rules.iter().enumerate() {
            if r.dim() != n {
                return Err(FuzzyError::Validation {
                    field: format!("rules[{j}]"),
                    message: format!("rule has {} inputs, expected {n}", r.dim()),
                });
            }
        }
        if let Exponent::Finite(v) = p {
            Exponent::finite(v)?;
        }
        act.validate()?;
        let verdict = verify_radial_property(&tnorm, &act, p, n, check)?;
        if let RadialVerdict::Violated(w) = &verdict {
            return Err(FuzzyError::RadialPropertyViolated(format!(
                "{} t-norm with {} act and p = {p}: at x = {:?} (a = {:?}, b = {:?}) the fold gives {} but act(‖x - a‖) = {}",
                tnorm, act.name(), w.x, w.center, w.widths, w.folded, w.radial
            )));
        }
        Ok(Self {
            tnorm,
            act,
            p,
            representation,
            rules,
            input_box: None,
            radial_check: verdict,
        })
    }

    pub fn with_input_box(mut self, input_box: InputBox) -> Result<Self> {
        check_dim(self.dim(), input_box.dim())?;
        self.input_box = Some(input_box);
        Ok(self)
    }

    /// The same rules under the other (or the same) representation.
    pub fn with_representation(&self, representation: Representation) -> Self {
        Self {
            representation,
            ..self.clone()
        }
    }

    pub fn tnorm(&self) -> &TNorm {
        &self.tnorm
    }

    pub fn act(&self) -> &ActFunction {
        &self.act
    }

    pub fn p(&self) -> Exponent {
        self.p
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, j: usize) -> Result<&Rule> {
        self.rules.get(j).ok_or(FuzzyError::IndexOutOfRange {
            index: j,
            len: self.rules.len(),
        })
    }

    pub fn input_box(&self) -> Option<&InputBox> {
        self.input_box.as_ref()
    }

    /// Result of the construction-time radial property check.
    pub fn radial_check(&self) -> &RadialVerdict {
        &self.radial_check
    }

    pub fn dim(&self) -> usize {
        self.rules[0].dim()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub(crate) fn check_input(&self, x: &[f64]) -> Result<()> {
        check_dim(self.dim(), x.len())
    }

    /// `‖x - a_j‖_{p,b_j}`.
    pub fn antecedent_distance(&self, j: usize, x: &[f64]) -> Result<f64> {
        let r = self.rule(j)?;
        self.check_input(x)?;
        Ok(scaled_distance(self.p, x, r.center(), r.widths()))
    }

    /// `A_j(x) = act(‖x - a_j‖_{p,b_j})`.
    pub fn antecedent_degree(&self, j: usize, x: &[f64]) -> Result<f64> {
        Ok(self.act.evaluate(self.antecedent_distance(j, x)?))
    }

    /// `A_j(x)` computed as the t-norm fold of the one-dimensional
    /// memberships. Equal to [`Self::antecedent_degree`] for a radial base.
    pub fn antecedent_degree_folded(&self, j: usize, x: &[f64]) -> Result<f64> {
        let r = self.rule(j)?;
        self.check_input(x)?;
        let parts = (0..x.len())
            .map(|i| r.antecedent_1d(&self.act, i, x[i]))
            .collect::<Result<Vec<_>>>()?;
        self.tnorm.fold(&parts)
    }

    /// Firing degrees `A_1(x), ..., A_m(x)`.
    pub fn firing(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_input(x)?;
        Ok(self
            .rules
            .iter()
            .map(|r| self.act.evaluate(scaled_distance(self.p, x, r.center(), r.widths())))
            .collect())
    }

    /// Rules whose antecedent extent on some axis (`cutoff * b_ji`, or
    /// `b_ji` for type Ib shapes) is below `pitch`.
    pub fn lint_widths(&self, pitch: f64) -> Vec<WidthLint> {
        let reach = match self.act.kind() {
            ActKind::TypeIa { cutoff } => cutoff,
            ActKind::TypeIb => 1.0,
        };
        let mut out = Vec::new();
        for (j, r) in self.rules.iter().enumerate() {
            for (axis, b) in r.widths().iter().enumerate() {
                let extent = reach * b;
                if extent < pitch {
                    out.push(WidthLint {
                        rule: j,
                        axis,
                        extent,
                        pitch,
                    });
                }
            }
        }
        out
    }
}

/// Rule base on the minimum t-norm; the norm is forced to the cubic one.
pub fn build_minimum_rulebase(
    rules: Vec<Rule>,
    act: ActFunction,
    representation: Representation,
) -> Result<RuleBase> {
    RuleBase::new(TNorm::Minimum, act, Exponent::Infinity, representation, rules)
}

/// Rule base on a continuous Archimedean t-norm with
/// `act(z) = t^(-1)(q z^p)` and the scaled ℓp norm.
pub fn build_archimedean_rulebase(
    rules: Vec<Rule>,
    tnorm: TNorm,
    q: f64,
    p: f64,
    representation: Representation,
) -> Result<RuleBase> {
    let generator = match &tnorm {
        TNorm::Archimedean(g) => g.clone(),
        TNorm::Minimum => return Err(FuzzyError::NotArchimedean(tnorm.name().to_string())),
    };
    let act = ActFunction::generated(generator, q, p)?;
    RuleBase::new(tnorm, act, Exponent::finite(p)?, representation, rules)
}
