//! Degree of covering on grids of increasing resolution.

use radfuzz::interface::fixtures;
use radfuzz::prelude::*;

fn main() -> radfuzz::Result<()> {
    for (name, rb) in [("gauss", fixtures::gauss()), ("mamdani", fixtures::mamdani())] {
        println!("{name}: box {:?}", rb.input_box().map(InputBox::bounds));
        for r in [9, 33, 129] {
            let res = vec![r; rb.dim()];
            let d = degree_of_covering(&rb, None, &res)?;
            println!(
                "  {r:>4} points/axis: doc in [{:.6}, {:.6}], worst at {:?}, complete {}",
                d.lower_estimate, d.doc_value, d.argmin_x, d.complete
            );
            for lint in &d.lints {
                println!("    lint: {lint:?}");
            }
        }
    }

    // a box reaching past every rule is never covered
    let wide = InputBox::cube(1, -20.0, 30.0)?;
    let d = degree_of_covering(&fixtures::gauss(), Some(&wide), &[501])?;
    println!("gauss on [-20, 30]: doc {:.3e} at {:?}", d.doc_value, d.argmin_x);
    Ok(())
}
