//! Obstacle straight ahead: one rule says steer left, the other steer
//! right. The two models disagree about what that means.

use radfuzz::interface::{commands, fixtures};
use radfuzz::prelude::*;

fn main() -> radfuzz::Result<()> {
    let conj = fixtures::car();
    let imp = conj.with_representation(Representation::Implicative);

    let y = infer_conjunctive(&conj, &[0.0])?.y_star;
    println!("conjunctive: steering angle {y} (straight into the obstacle)");

    match infer_implicative(&imp, &[0.0]) {
        Err(FuzzyError::Incoherent { witness, .. }) => {
            println!(
                "implicative: incoherent, rule {} wants {:?} and rule {} wants {:?}",
                witness.high + 1,
                witness.high_interval,
                witness.low + 1,
                witness.low_interval
            );
        }
        other => println!("implicative: {other:?}"),
    }

    // both rules share one antecedent, so the conflict is not confined to x = 0
    for x in [-6.0, 3.0, 9.5] {
        let c = infer_conjunctive(&conj, &[x])?.y_star;
        let i = match infer_implicative(&imp, &[x]) {
            Ok(o) => format!("{:.3}", o.y_star),
            Err(e) => commands::reason(&e),
        };
        println!("x = {x}: conjunctive {c:.3}, implicative {i}");
    }
    Ok(())
}
