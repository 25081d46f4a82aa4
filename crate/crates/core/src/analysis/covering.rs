use crate::error::{invalid, FuzzyError, Result};
use crate::geometry::{check_dim, linspace, lp_norm, InputBox};
use crate::radial_sets::{RuleBase, WidthLint};

/// Upper limit on the number of grid nodes of one DOC evaluation.
pub const MAX_GRID_CELLS: usize = 1_000_000;

/// Per-axis default: 256 points, reduced so the grid stays under
/// [`MAX_GRID_CELLS`].
pub fn default_resolution(n: usize) -> Vec<usize> {
    let fits = |r: usize| (r as f64).powi(n as i32) <= MAX_GRID_CELLS as f64;
    let per_axis = (2..=256).rev().find(|r| fits(*r)).unwrap_or(2);
    vec![per_axis; n]
}

/// Grid estimate of the degree of covering `inf_x max_j A_j(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DocReport {
    /// Minimum over the grid nodes of `max_j A_j(x)`. An upper bound on the
    /// infimum over the box.
    pub doc_value: f64,
    /// Lower bound obtained by widening every node to its grid cell.
    pub lower_estimate: f64,
    /// Grid node attaining `doc_value`.
    pub argmin_x: Vec<f64>,
    pub resolution: Vec<usize>,
    pub input_box: InputBox,
    /// `doc_value > 0`.
    pub complete: bool,
    /// Rules too narrow to be resolved by the grid.
    pub lints: Vec<WidthLint>,
}

/// Degree of covering on a regular grid over `input_box` (or the rule
/// base's own box).
///
/// `resolution` gives the number of points per axis; an empty slice selects
/// [`default_resolution`].
pub fn degree_of_covering(rb: &RuleBase, input_box: Option<&InputBox>, resolution: &[usize]) -> Result<DocReport> {
    let bx = input_box.or(rb.input_box()).ok_or(FuzzyError::MissingInputBox)?.clone();
    let n = rb.dim();
    check_dim(n, bx.dim())?;
    let resolution = if resolution.is_empty() {
        default_resolution(n)
    } else {
        check_dim(n, resolution.len())?;
        resolution.to_vec()
    };
    if let Some(r) = resolution.iter().find(|r| **r < 2) {
        return Err(invalid(format!("resolution must be at least 2 per axis, got {r}")));
    }
    let cells = resolution.iter().try_fold(1usize, |acc, r| acc.checked_mul(*r));
    if cells.is_none_or(|c| c > MAX_GRID_CELLS) {
        return Err(invalid(format!("grid {resolution:?} exceeds {MAX_GRID_CELLS} nodes")));
    }

    let axes: Vec<Vec<f64>> = bx
        .bounds()
        .iter()
        .zip(&resolution)
        .map(|((lo, hi), r)| linspace(*lo, *hi, *r))
        .collect();
    let pitch: Vec<f64> = bx
        .bounds()
        .iter()
        .zip(&resolution)
        .map(|((lo, hi), r)| (hi - lo) / (*r - 1) as f64)
        .collect();
    let half: Vec<f64> = pitch.iter().map(|h| 0.5 * h).collect();
    // radius of a grid cell in each rule's scaled norm
    let cell_radius: Vec<f64> = rb
        .rules()
        .iter()
        .map(|r| {
            let u: Vec<f64> = half.iter().zip(r.widths()).map(|(h, b)| h / b).collect();
            lp_norm(rb.p(), &u)
        })
        .collect();

    let act = rb.act();
    let mut idx = vec![0usize; n];
    let mut x: Vec<f64> = axes.iter().map(|a| a[0]).collect();
    let mut doc = f64::INFINITY;
    let mut lower = f64::INFINITY;
    let mut argmin = x.clone();
    loop {
        let mut best = 0.0f64;
        let mut best_low = 0.0f64;
        for (j, r) in cell_radius.iter().enumerate() {
            let z = rb.antecedent_distance(j, &x)?;
            best = best.max(act.evaluate(z));
            best_low = best_low.max(act.evaluate(z + r));
        }
        if best < doc {
            doc = best;
            argmin.copy_from_slice(&x);
        }
        lower = lower.min(best_low);

        // odometer step
        let mut axis = 0;
        loop {
            if axis == n {
                let lints = narrow_rules(rb, &pitch);
                return Ok(DocReport {
                    doc_value: doc,
                    lower_estimate: lower,
                    argmin_x: argmin,
                    resolution,
                    input_box: bx,
                    complete: doc > 0.0,
                    lints,
                });
            }
            idx[axis] += 1;
            if idx[axis] < resolution[axis] {
                x[axis] = axes[axis][idx[axis]];
                break;
            }
            idx[axis] = 0;
            x[axis] = axes[axis][0];
            axis += 1;
        }
    }
}

fn narrow_rules(rb: &RuleBase, pitch: &[f64]) -> Vec<WidthLint> {
    let widest = pitch.iter().copied().fold(0.0, f64::max);
    rb.lint_widths(widest)
        .into_iter()
        .filter(|l| l.extent < pitch[l.axis])
        .map(|l| WidthLint {
            pitch: pitch[l.axis],
            ..l
        })
        .collect()
}
