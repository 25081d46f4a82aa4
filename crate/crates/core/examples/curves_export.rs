//! Writes membership, relation and output curves as CSV files.
//!
//! ```text
//! cargo run --example curves_export -- /tmp/curves
//! ```

use std::path::PathBuf;

use radfuzz::interface::commands::{curves_csv, CurveKind, CurveSpec};
use radfuzz::interface::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let rb = fixtures::gauss();
    let car = fixtures::car();

    let jobs = [
        ("gauss_membership.csv", &rb, CurveKind::Membership, None),
        ("gauss_consequent.csv", &rb, CurveKind::Consequent, None),
        ("gauss_output.csv", &rb, CurveKind::Output, None),
        ("car_relation.csv", &car, CurveKind::Relation, Some(vec![0.0])),
    ];
    for (file, rb, what, x) in jobs {
        let spec = CurveSpec { what, x, ..CurveSpec::default() };
        let csv = curves_csv(rb, &spec)?;
        let path = dir.join(file);
        std::fs::write(&path, &csv)?;
        println!("{} ({} rows)", path.display(), csv.lines().count() - 1);
    }
    Ok(())
}
