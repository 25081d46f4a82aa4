use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, FuzzyError, Result};
use crate::geometry::{check_dim, InputBox};
use crate::inference::{infer_conjunctive, infer_implicative, ROUNDOFF_SLACK};
use crate::radial_sets::{Representation, RuleBase};

/// Largest observed gap between the conjunctive and implicative outputs of
/// one rule base.
#[derive(Clone, Debug, PartialEq)]
pub struct DivergenceReport {
    pub samples: usize,
    pub max_divergence: f64,
    /// Input where `max_divergence` was observed.
    pub at: Vec<f64>,
    pub conjunctive_at: f64,
    pub implicative_at: f64,
    /// `c_max - c_min` over all rules.
    pub bound: f64,
    /// Every sample satisfied `|conj - impl| < bound`; for a degenerate
    /// bound of zero, both outputs agreed up to round-off.
    pub holds: bool,
}

/// Samples `samples` uniform inputs from the box and compares the two
/// computational models of the same rules.
///
/// Inference errors (an incoherent or uncovered sample) are returned as is.
pub fn divergence_bound_check(
    rb: &RuleBase,
    input_box: Option<&InputBox>,
    samples: usize,
    seed: u64,
) -> Result<DivergenceReport> {
    let bx = input_box.or(rb.input_box()).ok_or(FuzzyError::MissingInputBox)?;
    check_dim(rb.dim(), bx.dim())?;
    if samples == 0 {
        return Err(invalid("divergence check needs at least one sample"));
    }
    let conj = rb.with_representation(Representation::Conjunctive);
    let imp = rb.with_representation(Representation::Implicative);
    let (c_min, c_max) = rb
        .rules()
        .iter()
        .map(|r| r.output_center())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), c| (lo.min(c), hi.max(c)));
    let bound = c_max - c_min;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unit = vec![0.0; rb.dim()];
    let mut report = DivergenceReport {
        samples,
        max_divergence: -1.0,
        at: Vec::new(),
        conjunctive_at: f64::NAN,
        implicative_at: f64::NAN,
        bound,
        holds: true,
    };
    for _ in 0..samples {
        unit.iter_mut().for_each(|u| *u = rng.gen::<f64>());
        let x = bx.lerp(&unit);
        let yc = infer_conjunctive(&conj, &x)?.y_star;
        let yi = infer_implicative(&imp, &x)?.y_star;
        let gap = (yc - yi).abs();
        let ok = if bound > 0.0 {
            gap < bound
        } else {
            gap <= ROUNDOFF_SLACK * c_max.abs().max(1.0)
        };
        report.holds &= ok;
        if gap > report.max_divergence {
            report.max_divergence = gap;
            report.at = x;
            report.conjunctive_at = yc;
            report.implicative_at = yi;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TNorm;
    use crate::interface::fixtures;
    use crate::radial_sets::{build_archimedean_rulebase, Rule};
    use approx::assert_abs_diff_eq;

    #[test]
    fn table1_holds() {
        let rb = fixtures::table1();
        let bx = InputBox::new(vec![(-1.0, 4.0), (-1.0, 5.0)]).unwrap();
        let r = divergence_bound_check(&rb, Some(&bx), 500, 7).unwrap();
        assert_eq!(r.bound, 5.0);
        assert!(r.holds);
        assert!(r.max_divergence < 5.0);
    }

    #[test]
    fn single_rule_degenerate_bound() {
        let rb = build_archimedean_rulebase(
            vec![Rule::siso(1.0, 1.0, 2.0, 1.0, 0.5).unwrap()],
            TNorm::PRODUCT,
            1.0,
            2.0,
            Representation::Implicative,
        )
        .unwrap();
        let bx = InputBox::new(vec![(-2.0, 4.0)]).unwrap();
        let r = divergence_bound_check(&rb, Some(&bx), 100, 1).unwrap();
        assert_eq!(r.bound, 0.0);
        assert!(r.max_divergence <= 1e-12);
        assert_eq!(r.conjunctive_at, 2.0);
        assert_abs_diff_eq!(r.implicative_at, 2.0, epsilon = 1e-12);
        assert!(r.holds);
    }

    #[test]
    fn incoherent_systems_propagate() {
        let rb = fixtures::car();
        let bx = InputBox::new(vec![(-1.0, 1.0)]).unwrap();
        assert!(matches!(
            divergence_bound_check(&rb, Some(&bx), 10, 0),
            Err(FuzzyError::Incoherent { .. })
        ));
        let unboxed = build_archimedean_rulebase(
            vec![Rule::siso(0.0, 1.0, 0.0, 1.0, 0.0).unwrap()],
            TNorm::PRODUCT,
            1.0,
            2.0,
            Representation::Implicative,
        )
        .unwrap();
        assert!(matches!(
            divergence_bound_check(&unboxed, None, 10, 0),
            Err(FuzzyError::MissingInputBox)
        ));
    }
}
