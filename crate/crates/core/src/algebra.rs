//! T-norms, continuous additive generators and residuated implications.
//!
//! A [`TNorm`] is either the minimum t-norm or a continuous Archimedean
//! t-norm backed by a [`Generator`]. The generator `t: [0,1] -> [0,inf]` is
//! strictly decreasing with `t(1) = 0`; its value at zero is stored
//! explicitly so the pseudo-inverse
//!
//! ```text
//! t^(-1)(z) = t^-1(min{t(0), z}),   z in [0, inf]
//! ```
//!
//! never has to be inferred from a limit. The built-in families use the
//! canonical normalisation `t(x) = -ln x` (product) and `t(x) = 1 - x`
//! (Łukasiewicz). Other families plug in through [`AdditiveGenerator`].
//!
//! The only s-norm used anywhere is the maximum, see [`snorm_max`].

use std::fmt;
use std::sync::Arc;

use crate::error::{FuzzyError, Result};

/// A user supplied continuous additive generator.
///
/// Implementations must be strictly decreasing and continuous on `[0, 1]`
/// with `value(1) == 0`, and `inverse` must be the ordinary inverse on
/// `[0, at_zero()]`.
pub trait AdditiveGenerator: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;
    /// `t(x)` for `x` in `[0, 1]`.
    fn value(&self, x: f64) -> f64;
    /// Ordinary inverse `t^-1(z)` for `z` in `[0, t(0)]`.
    fn inverse(&self, z: f64) -> f64;
    /// `t(0)`, possibly `f64::INFINITY` for strict t-norms.
    fn at_zero(&self) -> f64;
}

/// Additive generator of a continuous Archimedean t-norm.
#[derive(Clone, Debug)]
pub enum Generator {
    /// `t(x) = -ln x`, `t(0) = inf`.
    Product,
    /// `t(x) = 1 - x`, `t(0) = 1`.
    Lukasiewicz,
    Custom(Arc<dyn AdditiveGenerator>),
}

impl Generator {
    pub fn custom(generator: impl AdditiveGenerator + 'static) -> Self {
        Generator::Custom(Arc::new(generator))
    }

    pub fn name(&self) -> &str {
        match self {
            Generator::Product => "product",
            Generator::Lukasiewicz => "lukasiewicz",
            Generator::Custom(g) => g.name(),
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        match self {
            Generator::Product => -x.ln(),
            Generator::Lukasiewicz => 1.0 - x,
            Generator::Custom(g) => g.value(x),
        }
    }

    pub fn at_zero(&self) -> f64 {
        match self {
            Generator::Product => f64::INFINITY,
            Generator::Lukasiewicz => 1.0,
            Generator::Custom(g) => g.at_zero(),
        }
    }

    /// Whether `t(0)` is infinite (strict t-norm, no zero divisors).
    pub fn is_strict(&self) -> bool {
        self.at_zero().is_infinite()
    }

    /// Pseudo-inverse on `[0, inf]`.
    pub fn pseudo_inverse(&self, z: f64) -> f64 {
        let t0 = self.at_zero();
        if z >= t0 {
            return 0.0;
        }
        let z = z.max(0.0);
        match self {
            Generator::Product => (-z).exp(),
            Generator::Lukasiewicz => 1.0 - z,
            Generator::Custom(g) => g.inverse(z).clamp(0.0, 1.0),
        }
    }
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Generator::Product, Generator::Product) => true,
            (Generator::Lukasiewicz, Generator::Lukasiewicz) => true,
            (Generator::Custom(a), Generator::Custom(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

/// A fuzzy conjunction together with its residuated implication.
#[derive(Clone, Debug, PartialEq)]
pub enum TNorm {
    Minimum,
    Archimedean(Generator),
}

impl TNorm {
    pub const MINIMUM: TNorm = TNorm::Minimum;
    pub const PRODUCT: TNorm = TNorm::Archimedean(Generator::Product);
    pub const LUKASIEWICZ: TNorm = TNorm::Archimedean(Generator::Lukasiewicz);

    /// Looks up a built-in t-norm by its name.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "minimum" | "min" | "godel" => Ok(TNorm::Minimum),
            "product" | "goguen" => Ok(TNorm::PRODUCT),
            "lukasiewicz" | "łukasiewicz" => Ok(TNorm::LUKASIEWICZ),
            other => Err(FuzzyError::InvalidParameter(format!(
                "unknown t-norm '{other}' (expected minimum, product or lukasiewicz)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            TNorm::Minimum => "minimum",
            TNorm::Archimedean(g) => g.name(),
        }
    }

    pub fn generator(&self) -> Option<&Generator> {
        match self {
            TNorm::Minimum => None,
            TNorm::Archimedean(g) => Some(g),
        }
    }

    /// `T(a, b)`.
    pub fn apply(&self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Minimum => a.min(b),
            TNorm::Archimedean(Generator::Product) => a * b,
            TNorm::Archimedean(Generator::Lukasiewicz) => (a + b - 1.0).max(0.0),
            TNorm::Archimedean(g) => g.pseudo_inverse(g.value(a) + g.value(b)),
        }
    }

    /// n-ary conjunction.
    ///
    /// Archimedean t-norms are evaluated with a single pseudo-inversion of
    /// the summed generator values rather than by pairwise folding.
    pub fn fold(&self, values: &[f64]) -> Result<f64> {
        if values.is_empty() {
            return Err(FuzzyError::EmptyConjunction);
        }
        Ok(match self {
            TNorm::Minimum => values.iter().copied().fold(1.0, f64::min),
            TNorm::Archimedean(Generator::Product) => values.iter().product(),
            TNorm::Archimedean(g) => {
                let sum: f64 = values.iter().map(|&v| g.value(v)).sum();
                g.pseudo_inverse(sum)
            }
        })
    }

    /// Residuated implication `a -> b = sup{ z in [0,1] : T(z, a) <= b }`.
    pub fn residuum(&self, a: f64, b: f64) -> f64 {
        if a <= b {
            return 1.0;
        }
        match self {
            // Gödel
            TNorm::Minimum => b,
            // Goguen
            TNorm::Archimedean(Generator::Product) => b / a,
            TNorm::Archimedean(Generator::Lukasiewicz) => 1.0 - a + b,
            TNorm::Archimedean(g) => {
                let diff = g.value(b) - g.value(a);
                if diff.is_nan() {
                    self.residuum_by_search(a, b)
                } else {
                    g.pseudo_inverse(diff.max(0.0))
                }
            }
        }
    }

    /// Bisection on the sup-definition; the fallback for generators whose
    /// closed form degenerates (e.g. `inf - inf`).
    fn residuum_by_search(&self, a: f64, b: f64) -> f64 {
        if self.apply(1.0, a) <= b {
            return 1.0;
        }
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if self.apply(mid, a) <= b {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maximum s-norm over a non-empty list.
pub fn snorm_max(values: &[f64]) -> Result<f64> {
    values
        .iter()
        .copied()
        .reduce(f64::max)
        .ok_or(FuzzyError::EmptyDisjunction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Hamacher product, `t(x) = (1 - x) / x`.
    #[derive(Debug)]
    struct Hamacher;

    impl AdditiveGenerator for Hamacher {
        fn name(&self) -> &str {
            "hamacher"
        }
        fn value(&self, x: f64) -> f64 {
            (1.0 - x) / x
        }
        fn inverse(&self, z: f64) -> f64 {
            1.0 / (1.0 + z)
        }
        fn at_zero(&self) -> f64 {
            f64::INFINITY
        }
    }

    fn grid(n: usize) -> impl Iterator<Item = f64> + Clone {
        (0..=n).map(move |i| i as f64 / n as f64)
    }

    fn all_tnorms() -> Vec<TNorm> {
        vec![
            TNorm::MINIMUM,
            TNorm::PRODUCT,
            TNorm::LUKASIEWICZ,
            TNorm::Archimedean(Generator::custom(Hamacher)),
        ]
    }

    #[test]
    fn apply_examples() {
        assert_eq!(TNorm::MINIMUM.apply(0.3, 0.7), 0.3);
        assert_abs_diff_eq!(TNorm::PRODUCT.apply(0.5, 0.4), 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(TNorm::LUKASIEWICZ.apply(0.7, 0.5), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn closed_forms_match_generator_route() {
        for tn in [TNorm::PRODUCT, TNorm::LUKASIEWICZ] {
            let g = tn.generator().unwrap();
            for a in grid(100) {
                for b in grid(100) {
                    let via_gen = g.pseudo_inverse(g.value(a) + g.value(b));
                    assert_abs_diff_eq!(tn.apply(a, b), via_gen, epsilon = 1e-12);
                }
            }
        }
        // the Łukasiewicz identity on the 101x101 grid
        for a in grid(100) {
            for b in grid(100) {
                let g = Generator::Lukasiewicz;
                let v = g.pseudo_inverse(g.value(a) + g.value(b));
                assert_abs_diff_eq!(v, (a + b - 1.0).max(0.0), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn tnorm_axioms_on_grid() {
        for tn in all_tnorms() {
            for a in grid(50) {
                assert_abs_diff_eq!(tn.apply(a, 1.0), a, epsilon = 1e-12);
                for b in grid(50) {
                    assert_abs_diff_eq!(tn.apply(a, b), tn.apply(b, a), epsilon = 1e-12);
                    for c in grid(10) {
                        assert_abs_diff_eq!(
                            tn.apply(a, tn.apply(b, c)),
                            tn.apply(tn.apply(a, b), c),
                            epsilon = 1e-12
                        );
                    }
                    if b + 0.02 <= 1.0 {
                        assert!(tn.apply(a, b) <= tn.apply(a, b + 0.02) + 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn generator_round_trips() {
        for tn in all_tnorms().into_iter().skip(1) {
            let g = tn.generator().unwrap().clone();
            for i in 0..1000 {
                let z = i as f64 / 999.0;
                assert_abs_diff_eq!(g.pseudo_inverse(g.value(z)), z, epsilon = 1e-12);
            }
            for z in [0.0, 0.1, 0.5, 0.99, 1.0, 1.5, 7.0, 100.0, f64::INFINITY] {
                let expected = g.at_zero().min(z);
                let got = g.value(g.pseudo_inverse(z));
                if expected.is_infinite() {
                    assert!(got.is_infinite());
                } else {
                    // pseudo_inverse(z) underflows to zero for large z under -ln
                    assert_abs_diff_eq!(got, expected, epsilon = 1e-9 * (1.0 + expected));
                }
            }
        }
    }

    #[test]
    fn fold_examples() {
        assert_abs_diff_eq!(TNorm::PRODUCT.fold(&[0.5, 0.5, 0.5]).unwrap(), 0.125);
        // pairwise oracle max{0, max{0, 1.4 - 1} + 0.7 - 1}
        let pairwise = ((0.7_f64 + 0.7 - 1.0).max(0.0) + 0.7 - 1.0).max(0.0);
        assert_abs_diff_eq!(pairwise, 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(
            TNorm::LUKASIEWICZ.fold(&[0.7, 0.7, 0.7]).unwrap(),
            pairwise,
            epsilon = 1e-12
        );
        for a in grid(20) {
            assert_eq!(TNorm::MINIMUM.fold(&[1.0, a, 1.0]).unwrap(), a);
        }
        assert_eq!(TNorm::PRODUCT.fold(&[]), Err(FuzzyError::EmptyConjunction));
    }

    #[test]
    fn residuum_examples() {
        assert_abs_diff_eq!(TNorm::PRODUCT.residuum(0.8, 0.4), 0.5);
        assert_abs_diff_eq!(TNorm::LUKASIEWICZ.residuum(0.8, 0.5), 0.7, epsilon = 1e-12);
        for tn in all_tnorms() {
            assert_eq!(tn.residuum(0.3, 0.6), 1.0);
        }
        assert_eq!(TNorm::MINIMUM.residuum(0.8, 0.4), 0.4);
    }

    #[test]
    fn residuum_is_one_iff_a_le_b() {
        for tn in all_tnorms() {
            for a in grid(40) {
                for b in grid(40) {
                    let r = tn.residuum(a, b);
                    assert_eq!(r == 1.0, a <= b, "{tn} a={a} b={b} r={r}");
                }
            }
        }
    }

    #[test]
    fn custom_residuum_matches_search() {
        let tn = TNorm::Archimedean(Generator::custom(Hamacher));
        for a in grid(30) {
            for b in grid(30) {
                let closed = tn.residuum(a, b);
                let searched = if a <= b { 1.0 } else { tn.residuum_by_search(a, b) };
                assert_abs_diff_eq!(closed, searched, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn snorm_max_examples() {
        assert_eq!(snorm_max(&[0.2, 0.9, 0.5]), Ok(0.9));
        assert_eq!(snorm_max(&[0.42]), Ok(0.42));
        assert_eq!(snorm_max(&[0.0, 0.0]), Ok(0.0));
        assert_eq!(snorm_max(&[]), Err(FuzzyError::EmptyDisjunction));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(TNorm::from_name("Product").unwrap(), TNorm::PRODUCT);
        assert_eq!(TNorm::from_name("minimum").unwrap(), TNorm::MINIMUM);
        assert_eq!(TNorm::from_name("lukasiewicz").unwrap(), TNorm::LUKASIEWICZ);
        assert!(TNorm::from_name("drastic").is_err());
    }
}
