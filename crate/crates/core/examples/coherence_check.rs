//! Certifying coherence of implicative rule bases, cheaply and exactly.

use radfuzz::analysis::{coherence_exact_pair, DEFAULT_TOL};
use radfuzz::interface::fixtures;
use radfuzz::prelude::*;

fn report(name: &str, rb: &RuleBase) -> radfuzz::Result<()> {
    for mode in [CoherenceMode::Sufficient, CoherenceMode::Exact] {
        let r = coherence_full(rb, mode, DEFAULT_TOL)?;
        let margins: Vec<String> = r
            .pair_margins
            .iter()
            .map(|p| format!("({},{}) {:.4}", p.j + 1, p.k + 1, p.margin))
            .collect();
        println!("{name:>6} {:<22} {:<20} {}", r.method.to_string(), r.verdict.to_string(), margins.join("  "));
    }
    Ok(())
}

fn main() -> radfuzz::Result<()> {
    report("table1", &fixtures::table1())?;
    report("gauss", &fixtures::gauss())?;
    let car = fixtures::car().with_representation(Representation::Implicative);
    report("car", &car)?;

    let pair = coherence_exact_pair(&car, 0, 1, DEFAULT_TOL)?;
    println!("\ncar pair: min J = {} at x = {:?}, verdict {:?}", pair.min_value, pair.argmin, pair.verdict);
    if let Some(w) = pair.incoherence {
        println!("  witness intervals {:?} and {:?}", w.high_interval, w.low_interval);
    }
    Ok(())
}
