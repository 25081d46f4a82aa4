use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::TNorm;
use crate::error::{invalid, Result};
use crate::geometry::{scaled_distance, Exponent};
use crate::radial_sets::ActFunction;

/// Sampling budget for [`verify_radial_property`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialCheck {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for RadialCheck {
    fn default() -> Self {
        Self {
            samples: 256,
            tol: 1e-9,
            seed: 0x5e_ed0f_4ad1,
        }
    }
}

/// A sampled point where the t-norm fold of the one-dimensional
/// memberships differs from `act` applied to the scaled ℓp distance.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialWitness {
    pub x: Vec<f64>,
    pub center: Vec<f64>,
    pub widths: Vec<f64>,
    pub folded: f64,
    pub radial: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RadialVerdict {
    Holds { samples: usize, max_error: f64 },
    Violated(RadialWitness),
}

impl RadialVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, RadialVerdict::Holds { .. })
    }
}

/// Monte-Carlo check that
/// `T(act(|u_1|), ..., act(|u_n|)) = act(‖u‖_p)` with `u_i = (x_i - a_i)/b_i`
/// over random centers, widths and inputs.
///
/// Returns the first violating sample. For `n = 1` the identity is trivial
/// and no sampling is done.
pub fn verify_radial_property(
    tnorm: &TNorm,
    act: &ActFunction,
    p: Exponent,
    n: usize,
    check: &RadialCheck,
) -> Result<RadialVerdict> {
    if n == 0 {
        return Err(invalid("radial property needs at least one input dimension"));
    }
    if check.samples == 0 {
        return Err(invalid("radial property check needs at least one sample"));
    }
    if n == 1 {
        return Ok(RadialVerdict::Holds {
            samples: 0,
            max_error: 0.0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
    let reach = match act.kind().cutoff() {
        c if c.is_finite() => 1.25 * c,
        _ => 2.5,
    };
    let mut memberships = vec![0.0; n];
    let mut max_error: f64 = 0.0;
    for _ in 0..check.samples {
        let center: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let widths: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..3.0)).collect();
        let x: Vec<f64> = (0..n)
            .map(|i| center[i] + widths[i] * rng.gen_range(-reach..reach))
            .collect();
        for i in 0..n {
            memberships[i] = act.evaluate((x[i] - center[i]).abs() / widths[i]);
        }
        let folded = tnorm.fold(&memberships)?;
        let radial = act.evaluate(scaled_distance(p, &x, &center, &widths));
        let err = (folded - radial).abs();
        if !(err <= check.tol) {
            return Ok(RadialVerdict::Violated(RadialWitness {
                x,
                center,
                widths,
                folded,
                radial,
            }));
        }
        max_error = max_error.max(err);
    }
    Ok(RadialVerdict::Holds {
        samples: check.samples,
        max_error,
    })
}
