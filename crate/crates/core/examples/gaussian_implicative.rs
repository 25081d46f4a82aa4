//! Implicative inference with Gaussian rules: the output is the midpoint
//! of the intersection of the firing rules' intervals.

use radfuzz::interface::fixtures;
use radfuzz::prelude::*;

fn main() -> radfuzz::Result<()> {
    let rb = fixtures::gauss();
    for j in 0..rb.len() {
        let r = rb.rule(j)?;
        println!("rule {}: a = {:?}, c = {}, d = {}, s = {}", j + 1, r.center(), r.output_center(), r.output_width(), r.plateau());
    }
    println!();
    for x in [-2.0, 0.0, 1.5, 4.0, 6.0, 8.0, 11.0] {
        let out = infer_implicative(&rb, &[x])?;
        let core = out.core.expect("implicative output has a core");
        let intervals: Vec<String> = (0..rb.len())
            .map(|j| rule_output_interval(&rb, j, &[x]).map(|iv| format!("[{:.2}, {:.2}]", iv.lo, iv.hi)))
            .collect::<radfuzz::Result<_>>()?;
        println!(
            "x = {x:5.1}: y* = {:7.4}  core [{:.4}, {:.4}]  from {}",
            out.y_star,
            core.lo,
            core.hi,
            intervals.join(" ∩ ")
        );
    }
    Ok(())
}
