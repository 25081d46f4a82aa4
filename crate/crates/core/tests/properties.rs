//! Invariants checked over randomly drawn parameters and rule bases.

#![allow(clippy::type_complexity, clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use radfuzz::analysis::{coherence_exact_pair, relaxed_pair_minimum, DEFAULT_TOL};
use radfuzz::interface::{parse_rulebase, serialize_rulebase};
use radfuzz::prelude::*;

const TNORMS: [(TNorm, fn(f64, f64) -> f64); 3] = [
    (TNorm::MINIMUM, t_min),
    (TNorm::PRODUCT, t_prod),
    (TNorm::LUKASIEWICZ, t_luk),
];

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(ALL_FAMILIES.to_vec())
}

fn rulebase(rng: &mut ChaCha8Rng, family: Family, n: usize, m: usize, rep: Representation) -> RuleBase {
    let rules = (0..m).map(|_| random_rule(rng, n, &RuleRanges::default())).collect();
    build(family, rules, rep)
}

fn point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-8.0..8.0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tnorm_axioms(i in 0..3usize, a in 0.0..=1.0f64, b in 0.0..=1.0f64, c in 0.0..=1.0f64) {
        let (t, reference) = &TNORMS[i];
        let reference = *reference;
        prop_assert!((t.apply(a, b) - reference(a, b)).abs() <= 1e-15);
        prop_assert!((t.apply(a, b) - t.apply(b, a)).abs() <= 1e-15);
        prop_assert!((t.apply(a, 1.0) - a).abs() <= 1e-15);
        prop_assert!((t.apply(t.apply(a, b), c) - t.apply(a, t.apply(b, c))).abs() <= 1e-12);
        let folded = t.fold(&[a, b, c]).unwrap();
        prop_assert!((folded - t.apply(t.apply(a, b), c)).abs() <= 1e-15);
        if a <= b {
            prop_assert!(t.apply(a, c) <= t.apply(b, c) + 1e-15);
        }
    }

    #[test]
    fn residuum_is_the_adjoint(i in 0..3usize, a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
        let (t, reference) = &TNORMS[i];
        let reference = *reference;
        let r = t.residuum(a, b);
        prop_assert!((0.0..=1.0).contains(&r));
        prop_assert_eq!(r == 1.0, a <= b);
        prop_assert!(reference(r, a) <= b + 1e-12);
        let grid: Vec<f64> = (0..=2000).map(|k| k as f64 / 2000.0).collect();
        let brute = residuum_brute(reference, a, b, &grid);
        prop_assert!(r + 1e-12 >= brute && r - brute <= 1.0 / 2000.0 + 1e-12, "r {} brute {}", r, brute);
    }

    #[test]
    fn generator_pseudo_inverse_round_trips(i in 1..3usize, x in 1e-6..=1.0f64) {
        let g = TNORMS[i].0.generator().unwrap().clone();
        prop_assert!((g.pseudo_inverse(g.value(x)) - x).abs() <= 1e-12);
        prop_assert!(g.pseudo_inverse(g.at_zero() + 1.0) == 0.0 || g.is_strict());
    }

    #[test]
    fn dual_norm_bounds_inner_products(
        p in prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, f64::INFINITY]),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=4);
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..3.0)).collect();
        let u = point(&mut rng, n);
        let y = point(&mut rng, n);
        let exp = if p.is_infinite() { Exponent::Infinity } else { Exponent::finite(p).unwrap() };
        let norm = ScaledNorm::new(exp, b.clone()).unwrap();
        let zero = vec![0.0; n];
        let value = norm.norm(&u).unwrap();
        prop_assert!((value - lp(p, &scaled(&u, &zero, &b))).abs() <= 1e-12 * value.max(1.0));
        let inner: f64 = u.iter().zip(&y).map(|(u, y)| u * y).sum();
        prop_assert!(inner.abs() <= value * norm.dual_norm(&y).unwrap() * (1.0 + 1e-12) + 1e-12);
        prop_assert!(norm.unscaled_lower_bound_factor() * lp(p, &u) <= value * (1.0 + 1e-12));
    }

    #[test]
    fn antecedents_are_radial(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=4);
        let rb = rulebase(&mut rng, f, n, 3, Representation::Conjunctive);
        for _ in 0..20 {
            let x = point(&mut rng, n);
            let oracle = firing_oracle(&rb, &x);
            for j in 0..rb.len() {
                let radial = rb.antecedent_degree(j, &x).unwrap();
                let folded = rb.antecedent_degree_folded(j, &x).unwrap();
                prop_assert!((radial - folded).abs() <= 1e-10, "{:?} {} vs {}", f, radial, folded);
                prop_assert!((radial - oracle[j]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn implicative_output_is_mean_of_maxima(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=5);
        let rb = rulebase(&mut rng, f, n, m, Representation::Implicative);
        for _ in 0..20 {
            let x = point(&mut rng, n);
            let fires = firing_oracle(&rb, &x).iter().any(|w| *w > 0.0);
            match (infer_implicative(&rb, &x), mom_oracle(&rb, &x)) {
                (Ok(out), Some((lo, hi))) => {
                    let scale = lo.abs().max(hi.abs()).max(1.0);
                    prop_assert!((out.y_star - 0.5 * (lo + hi)).abs() <= 1e-9 * scale);
                    let core = out.core.unwrap();
                    prop_assert!((core.lo - lo).abs() <= 1e-9 * scale && (core.hi - hi).abs() <= 1e-9 * scale);
                }
                (Err(FuzzyError::Incoherent { witness, .. }), None) => {
                    prop_assert!(fires);
                    prop_assert!(witness.high_interval.lo > witness.low_interval.hi);
                }
                (Err(FuzzyError::NoRuleFires { .. }), _) => prop_assert!(!fires),
                (got, want) => prop_assert!(false, "library {:?}, oracle {:?}", got, want),
            }
        }
    }

    #[test]
    fn conjunctive_output_is_weighted_average(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=5);
        let rb = rulebase(&mut rng, f, n, m, Representation::Conjunctive);
        let c_min = rb.rules().iter().map(Rule::output_center).fold(f64::INFINITY, f64::min);
        let c_max = rb.rules().iter().map(Rule::output_center).fold(f64::NEG_INFINITY, f64::max);
        for _ in 0..20 {
            let x = point(&mut rng, n);
            match (infer_conjunctive(&rb, &x), weighted_average_oracle(&rb, &x)) {
                (Ok(out), Some(y)) => {
                    prop_assert!((out.y_star - y).abs() <= 1e-9 * y.abs().max(1.0));
                    prop_assert!(out.y_star >= c_min - 1e-12 && out.y_star <= c_max + 1e-12);
                }
                (Err(FuzzyError::NoRuleFires { .. }), None) => {}
                (got, want) => prop_assert!(false, "library {:?}, oracle {:?}", got, want),
            }
        }
    }

    #[test]
    fn relation_core_matches_output(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rb = rulebase(&mut rng, Family::Gaussian, 1, 3, Representation::Implicative);
        let x = point(&mut rng, 1);
        if let Ok(out) = infer_implicative(&rb, &x) {
            prop_assert!((relation_value(&rb, &x, out.y_star).unwrap() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn documents_round_trip(f in family(), seed in any::<u64>(), boxed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let rep = if rng.gen() { Representation::Implicative } else { Representation::Conjunctive };
        let m = rng.gen_range(1..=4);
        let mut rb = rulebase(&mut rng, f, n, m, rep);
        if boxed {
            rb = rb.with_input_box(InputBox::cube(n, -6.0, 6.0).unwrap()).unwrap();
        }
        let text = serialize_rulebase(&rb).unwrap();
        let back = parse_rulebase(&text).unwrap();
        prop_assert_eq!(back.rules(), rb.rules());
        prop_assert_eq!(back.input_box(), rb.input_box());
        prop_assert_eq!(back.representation(), rb.representation());
        prop_assert_eq!(serialize_rulebase(&back).unwrap(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covering_refines_monotonically(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=2);
        let rb = rulebase(&mut rng, f, n, 4, Representation::Conjunctive);
        let bx = InputBox::cube(n, -6.0, 6.0).unwrap();
        let r = rng.gen_range(5..40);
        let coarse = degree_of_covering(&rb, Some(&bx), &vec![r; n]).unwrap();
        let fine = degree_of_covering(&rb, Some(&bx), &vec![2 * r - 1; n]).unwrap();
        prop_assert!(fine.doc_value <= coarse.doc_value);
        for r in [&coarse, &fine] {
            prop_assert!(r.lower_estimate <= coarse.doc_value && r.lower_estimate <= fine.doc_value);
        }
        prop_assert_eq!(coarse.complete, coarse.doc_value > 0.0);
    }

    #[test]
    fn exact_pair_minimum_is_bracketed(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let rb = rulebase(&mut rng, f, n, 2, Representation::Implicative);
        let res = coherence_exact_pair(&rb, 0, 1, DEFAULT_TOL).unwrap();
        let (rj, rk) = (&rb.rules()[0], &rb.rules()[1]);
        let p = rb.p().as_f64();
        let scale = res.min_value.max(1.0);
        let refined = if n == 2 {
            let f = |x: &[f64]| pair_objective(rj, rk, p, x);
            refined_grid_min_2d(f, [-12.0, -12.0], [12.0, 12.0], 101, 8)
        } else {
            f64::NAN
        };
        prop_assert!(res.lower_bound <= res.min_value + 1e-12);
        prop_assert!(res.min_value - res.lower_bound <= 10.0 * DEFAULT_TOL * scale, "value {} lower {} refined {}", res.min_value, res.lower_bound, refined);
        prop_assert!(res.min_value >= relaxed_pair_minimum(&rb, 0, 1).unwrap() - DEFAULT_TOL * scale);
        prop_assert!((pair_objective(rj, rk, p, &res.argmin) - res.min_value).abs() <= 1e-12 * scale);
        for _ in 0..50 {
            let x = point(&mut rng, n);
            prop_assert!(res.min_value <= pair_objective(rj, rk, p, &x) + DEFAULT_TOL * scale);
        }
        for x in [rj.center(), rk.center()] {
            prop_assert!(res.min_value <= pair_objective(rj, rk, p, x) + DEFAULT_TOL * scale);
        }
    }

    #[test]
    fn certified_systems_never_conflict(f in family(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let raw: Vec<Rule> = (0..4).map(|_| random_rule(&mut rng, n, &RuleRanges::default())).collect();
        let probe = build(f, raw.clone(), Representation::Implicative);
        let rb = build(f, tighten(&raw, probe.p().as_f64(), 0.999), Representation::Implicative);
        prop_assume!(coherence_sufficient(&rb).unwrap().verdict == CoherenceVerdict::CertifiedCoherent);
        for _ in 0..500 {
            let x = point(&mut rng, n);
            let out = infer_implicative(&rb, &x);
            prop_assert!(!matches!(out, Err(FuzzyError::Incoherent { .. })), "{:?} at {:?}", out, x);
        }
    }
}
