//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library's numerical code.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use radfuzz::prelude::*;

pub fn tri(z: f64) -> f64 {
    (1.0 - z).max(0.0)
}

pub fn gauss(z: f64) -> f64 {
    (-z * z).exp()
}

pub fn t_min(a: f64, b: f64) -> f64 {
    a.min(b)
}

pub fn t_prod(a: f64, b: f64) -> f64 {
    a * b
}

pub fn t_luk(a: f64, b: f64) -> f64 {
    (a + b - 1.0).max(0.0)
}

/// `sup { z in grid : T(z, a) <= b }`.
pub fn residuum_brute(t: fn(f64, f64) -> f64, a: f64, b: f64, grid: &[f64]) -> f64 {
    grid.iter()
        .copied()
        .filter(|z| t(*z, a) <= b)
        .fold(0.0, f64::max)
}

/// `(Σ |u_i|^p)^(1/p)`, or the maximum for `p = inf`, computed naively.
pub fn lp(p: f64, u: &[f64]) -> f64 {
    if p.is_infinite() {
        u.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    } else {
        u.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

pub fn scaled(x: &[f64], a: &[f64], b: &[f64]) -> Vec<f64> {
    x.iter().zip(a).zip(b).map(|((x, a), b)| (x - a) / b).collect()
}

/// One-dimensional consequent membership `act(max{0, |y - c| - s} / d)`.
pub fn consequent(act: fn(f64) -> f64, y: f64, c: f64, d: f64, s: f64) -> f64 {
    act(((y - c).abs() - s).max(0.0) / d)
}

/// Plain shape function for the shipped act families.
pub fn shape_of(act: &ActFunction) -> Box<dyn Fn(f64) -> f64> {
    match act {
        ActFunction::Triangular => Box::new(tri),
        ActFunction::Gaussian => Box::new(gauss),
        ActFunction::Generated { generator, q, p } => {
            let (q, p) = (*q, *p);
            match generator.name() {
                "product" => Box::new(move |z: f64| (-q * z.powf(p)).exp()),
                "lukasiewicz" => Box::new(move |z: f64| (1.0 - q * z.powf(p)).max(0.0)),
                other => panic!("no reference shape for generator {other}"),
            }
        }
        ActFunction::Custom(_) => panic!("no reference shape for custom acts"),
    }
}

/// Firing degrees computed from the raw rule parameters.
pub fn firing_oracle(rb: &RuleBase, x: &[f64]) -> Vec<f64> {
    let shape = shape_of(rb.act());
    let p = rb.p().as_f64();
    rb.rules()
        .iter()
        .map(|r| shape(lp(p, &scaled(x, r.center(), r.widths()))))
        .collect()
}

pub fn weighted_average_oracle(rb: &RuleBase, x: &[f64]) -> Option<f64> {
    let w = firing_oracle(rb, x);
    let den: f64 = w.iter().sum();
    (den > 0.0).then(|| w.iter().zip(rb.rules()).map(|(w, r)| w * r.output_center()).sum::<f64>() / den)
}

/// Intersection of the firing rules' output intervals and its midpoint.
pub fn mom_oracle(rb: &RuleBase, x: &[f64]) -> Option<(f64, f64)> {
    let w = firing_oracle(rb, x);
    let p = rb.p().as_f64();
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for (w, r) in w.iter().zip(rb.rules()) {
        if *w > 0.0 {
            let z = lp(p, &scaled(x, r.center(), r.widths()));
            let half = r.output_width() * z + r.plateau();
            lo = lo.max(r.output_center() - half);
            hi = hi.min(r.output_center() + half);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// `min` of `f` over an `n × n` grid on `[lo, hi]`.
pub fn grid_min_2d(f: impl Fn(&[f64]) -> f64, lo: [f64; 2], hi: [f64; 2], n: usize) -> (f64, [f64; 2]) {
    let mut best = (f64::INFINITY, lo);
    for i in 0..n {
        let x0 = lo[0] + (hi[0] - lo[0]) * i as f64 / (n - 1) as f64;
        for j in 0..n {
            let x1 = lo[1] + (hi[1] - lo[1]) * j as f64 / (n - 1) as f64;
            let v = f(&[x0, x1]);
            if v < best.0 {
                best = (v, [x0, x1]);
            }
        }
    }
    best
}

/// Repeated `n × n` grids, each zoomed onto a few cells around the previous
/// minimiser.
pub fn refined_grid_min_2d(f: impl Fn(&[f64]) -> f64, lo: [f64; 2], hi: [f64; 2], n: usize, levels: usize) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    let mut best = f64::INFINITY;
    for _ in 0..levels {
        let (v, at) = grid_min_2d(&f, lo, hi, n);
        best = best.min(v);
        for i in 0..2 {
            let h = 4.0 * (hi[i] - lo[i]) / (n - 1) as f64;
            lo[i] = at[i] - h;
            hi[i] = at[i] + h;
        }
    }
    best
}

/// `d_j ‖x - a_j‖_{p,b_j} + d_k ‖x - a_k‖_{p,b_k}` from raw parameters.
pub fn pair_objective(rj: &Rule, rk: &Rule, p: f64, x: &[f64]) -> f64 {
    rj.output_width() * lp(p, &scaled(x, rj.center(), rj.widths()))
        + rk.output_width() * lp(p, &scaled(x, rk.center(), rk.widths()))
}

#[derive(Clone, Copy, Debug)]
pub enum Family {
    Mamdani,
    Gaussian,
    Laplace,
    Lukasiewicz1,
    Lukasiewicz2,
}

pub const ALL_FAMILIES: [Family; 5] = [
    Family::Mamdani,
    Family::Gaussian,
    Family::Laplace,
    Family::Lukasiewicz1,
    Family::Lukasiewicz2,
];

pub fn build(family: Family, rules: Vec<Rule>, rep: Representation) -> RuleBase {
    let rb = match family {
        Family::Mamdani => build_minimum_rulebase(rules, ActFunction::Triangular, rep),
        Family::Gaussian => build_archimedean_rulebase(rules, TNorm::PRODUCT, 1.0, 2.0, rep),
        Family::Laplace => build_archimedean_rulebase(rules, TNorm::PRODUCT, 1.0, 1.0, rep),
        Family::Lukasiewicz1 => build_archimedean_rulebase(rules, TNorm::LUKASIEWICZ, 1.0, 1.0, rep),
        Family::Lukasiewicz2 => build_archimedean_rulebase(rules, TNorm::LUKASIEWICZ, 1.0, 2.0, rep),
    };
    rb.expect("family triples are radial")
}

pub struct RuleRanges {
    pub center: (f64, f64),
    pub width: (f64, f64),
    pub out_center: (f64, f64),
    pub out_width: (f64, f64),
    pub plateau: (f64, f64),
}

impl Default for RuleRanges {
    fn default() -> Self {
        Self {
            center: (-5.0, 5.0),
            width: (0.5, 3.0),
            out_center: (-10.0, 10.0),
            out_width: (0.5, 3.0),
            plateau: (0.0, 2.0),
        }
    }
}

pub fn random_rule(rng: &mut ChaCha8Rng, n: usize, r: &RuleRanges) -> Rule {
    let a = (0..n).map(|_| rng.gen_range(r.center.0..r.center.1)).collect();
    let b = (0..n).map(|_| rng.gen_range(r.width.0..r.width.1)).collect();
    Rule::new(
        a,
        b,
        rng.gen_range(r.out_center.0..r.out_center.1),
        rng.gen_range(r.out_width.0..r.out_width.1),
        rng.gen_range(r.plateau.0..=r.plateau.1),
    )
    .unwrap()
}

/// Rules whose output centers follow a gentle linear trend plus noise, so a
/// good share of them pass pairwise coherence tests.
pub fn trend_rules(rng: &mut ChaCha8Rng, n: usize, m: usize, r: &RuleRanges) -> Vec<Rule> {
    let slope: Vec<f64> = (0..n).map(|_| rng.gen_range(-0.3..0.3)).collect();
    let noise = rng.gen_range(0.0..1.5);
    (0..m)
        .map(|_| {
            let base = random_rule(rng, n, r);
            let c = base.center().iter().zip(&slope).map(|(a, w)| a * w).sum::<f64>() + rng.gen_range(-noise..=noise);
            Rule::new(
                base.center().to_vec(),
                base.widths().to_vec(),
                c,
                base.output_width(),
                base.plateau(),
            )
            .unwrap()
        })
        .collect()
}

/// Rescales the output centers by the largest factor (times `shrink`) that
/// keeps every pair on the passing side of the closed-form coherence
/// inequality, so at least one pair is close to the boundary.
pub fn tighten(rules: &[Rule], p: f64, shrink: f64) -> Vec<Rule> {
    let mut lambda = f64::INFINITY;
    for (j, rj) in rules.iter().enumerate() {
        for rk in &rules[j + 1..] {
            let dc = (rj.output_center() - rk.output_center()).abs();
            if dc == 0.0 {
                continue;
            }
            let alpha = |r: &Rule| 1.0 / r.widths().iter().copied().fold(0.0, f64::max);
            let slope = (rj.output_width() * alpha(rj)).min(rk.output_width() * alpha(rk));
            let da: Vec<f64> = rj.center().iter().zip(rk.center()).map(|(a, b)| a - b).collect();
            lambda = lambda.min((slope * lp(p, &da) + rj.plateau() + rk.plateau()) / dc);
        }
    }
    let lambda = if lambda.is_finite() { lambda * shrink } else { 1.0 };
    rules
        .iter()
        .map(|r| {
            Rule::new(
                r.center().to_vec(),
                r.widths().to_vec(),
                lambda * r.output_center(),
                r.output_width(),
                r.plateau(),
            )
            .unwrap()
        })
        .collect()
}
