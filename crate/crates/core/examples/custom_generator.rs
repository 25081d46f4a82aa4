//! Plugging in a t-norm through its additive generator.
//!
//! The Hamacher product `T(a, b) = ab / (a + b - ab)` has generator
//! `t(x) = (1 - x) / x`, which yields the Cauchy-like act `1 / (1 + z^p)`.

use radfuzz::prelude::*;

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

fn main() -> radfuzz::Result<()> {
    let tnorm = TNorm::Archimedean(Generator::custom(Hamacher));
    println!("T(0.5, 0.5) = {}", tnorm.apply(0.5, 0.5));
    println!("0.5 -> 0.25 = {}", tnorm.residuum(0.5, 0.25));

    let rules = vec![
        Rule::new(vec![0.0, 0.0], vec![1.0, 1.0], 0.0, 1.0, 0.0)?,
        Rule::new(vec![3.0, 1.0], vec![1.5, 1.0], 2.0, 1.0, 0.5)?,
    ];
    let rb = build_archimedean_rulebase(rules, tnorm, 1.0, 2.0, Representation::Implicative)?;
    println!("radial check: {:?}", rb.radial_check());
    println!("coherence: {}", coherence_sufficient(&rb)?.verdict);
    for x in [[0.0, 0.0], [1.5, 0.5], [3.0, 1.0]] {
        println!("x = {x:?}: y* = {:.4}", infer_implicative(&rb, &x)?.y_star);
    }

    // the same generator does not make the triangular act radial
    let tri = RuleBase::new(
        TNorm::Archimedean(Generator::custom(Hamacher)),
        ActFunction::Triangular,
        Exponent::finite(2.0)?,
        Representation::Implicative,
        vec![Rule::new(vec![0.0, 0.0], vec![1.0, 1.0], 0.0, 1.0, 0.0)?],
    );
    println!("hamacher + triangular: {}", tri.err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}
