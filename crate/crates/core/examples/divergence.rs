//! How far apart the conjunctive and implicative outputs of the same
//! rules can drift, against the spread of the output centers.

use radfuzz::interface::fixtures;
use radfuzz::prelude::*;

fn main() -> radfuzz::Result<()> {
    for (name, rb) in [("table1", fixtures::table1()), ("gauss", fixtures::gauss())] {
        let r = divergence_bound_check(&rb, None, 20_000, 7)?;
        println!(
            "{name}: max |conj - impl| = {:.4} at {:?} (conj {:.4}, impl {:.4}), bound {:.4}, holds {}",
            r.max_divergence, r.at, r.conjunctive_at, r.implicative_at, r.bound, r.holds
        );
    }
    Ok(())
}
