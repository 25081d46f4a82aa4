//! Two-input Mamdani controller: conjunctive inference over a small sweep.
//!
//! ```text
//! cargo run --example mamdani_controller
//! ```

use radfuzz::interface::fixtures;
use radfuzz::prelude::*;

fn main() -> radfuzz::Result<()> {
    let rb = fixtures::mamdani();
    println!("{} rules, {} inputs, t-norm {}, act {}", rb.len(), rb.dim(), rb.tnorm(), rb.act().name());

    for x in [[0.0, 0.0], [1.0, 0.5], [2.0, 2.0], [4.0, 0.0], [3.0, 3.5], [9.0, 9.0]] {
        match infer_conjunctive(&rb, &x) {
            Ok(out) => {
                let w: Vec<String> = out.firing.iter().map(|a| format!("{a:.3}")).collect();
                println!("x = {x:?}: y* = {:8.4}  firing [{}]", out.y_star, w.join(", "));
            }
            Err(FuzzyError::NoRuleFires { .. }) => println!("x = {x:?}: no rule fires"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
