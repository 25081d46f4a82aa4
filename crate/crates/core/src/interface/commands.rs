//! Implementations of the `radfuzz` subcommands.
//!
//! Each command takes the document text plus its options and returns an
//! [`Outcome`]: what goes to stdout, what goes to stderr and the exit code.
//! Failures print a single machine-readable `reason:` line on stderr.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | parse or validation error |
//! | 3 | incoherent at the input point |
//! | 4 | no rule fires at the input point |
//! | 5 | the minimiser did not converge |

use std::fmt::Write as _;

use crate::algebra::TNorm;
use crate::analysis::{coherence_full, degree_of_covering, CoherenceMode, CoherenceVerdict};
use crate::error::{invalid, FuzzyError, Result};
use crate::geometry::{check_dim, linspace, Exponent, InputBox};
use crate::inference::{infer, relation_from_firing};
use crate::radial_sets::{verify_radial_property, RadialCheck, RadialVerdict, Representation, RuleBase};

use super::document::{build_act, parse_rulebase, ActSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCOHERENT: i32 = 3;
pub const EXIT_INCOMPLETE: i32 = 4;
pub const EXIT_NON_CONVERGENCE: i32 = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn failed(err: &FuzzyError) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("reason: {}\nerror: {err}\n", reason(err)),
            code: exit_code(err),
        }
    }
}

pub fn exit_code(err: &FuzzyError) -> i32 {
    match err {
        FuzzyError::Incoherent { .. } => EXIT_INCOHERENT,
        FuzzyError::NoRuleFires { .. } => EXIT_INCOMPLETE,
        FuzzyError::NonConvergence { .. } => EXIT_NON_CONVERGENCE,
        _ => EXIT_INVALID,
    }
}

/// One-line summary of an error, e.g. `incoherent at x = (0), rules 1,2`.
pub fn reason(err: &FuzzyError) -> String {
    match err {
        FuzzyError::Incoherent { x, witness } => {
            let (j, k) = witness.pair();
            format!("incoherent at x = {}, rules {},{}", fmt_point(x), j + 1, k + 1)
        }
        FuzzyError::NoRuleFires { x } => format!("incomplete at x = {}", fmt_point(x)),
        FuzzyError::NonConvergence { best_value, .. } => {
            format!("non-convergence, best value {best_value}")
        }
        FuzzyError::Syntax { line, column, .. } => format!("syntax error at {line}:{column}"),
        FuzzyError::Validation { field, message } => format!("invalid {field}: {message}"),
        other => other.to_string(),
    }
}

fn fmt_point(x: &[f64]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_list(x: &[f64]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

fn run(f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    f().unwrap_or_else(|e| Outcome::failed(&e))
}

/// Parses `"1.5,-2,3e-4"`.
pub fn parse_vector(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|e| invalid(format!("bad number {part:?}: {e}")))
        })
        .collect()
}

/// Parses `"lo:hi"`.
pub fn parse_range(s: &str) -> Result<(f64, f64)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| invalid(format!("range {s:?} must look like lo:hi")))?;
    let lo: f64 = lo.trim().parse().map_err(|e| invalid(format!("bad range start {lo:?}: {e}")))?;
    let hi: f64 = hi.trim().parse().map_err(|e| invalid(format!("bad range end {hi:?}: {e}")))?;
    if !(lo < hi) {
        return Err(invalid(format!("range {s:?} must have lo < hi")));
    }
    Ok((lo, hi))
}

/// Parses `"lo:hi,lo:hi,..."`, one range per axis.
pub fn parse_box(s: &str) -> Result<InputBox> {
    InputBox::new(s.split(',').map(parse_range).collect::<Result<_>>()?)
}

/// Parses `"256"` or `"101,51"`.
pub fn parse_resolution(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| {
            let v: f64 = part
                .trim()
                .parse()
                .map_err(|e| invalid(format!("bad resolution {part:?}: {e}")))?;
            if v.fract() != 0.0 || v < 0.0 || v > usize::MAX as f64 {
                return Err(invalid(format!("resolution must be a whole number, got {part}")));
            }
            Ok(v as usize)
        })
        .collect()
}

/// `eval`: infers the output at `x`.
pub fn eval(document: &str, x: &[f64], representation: Option<Representation>) -> Outcome {
    run(|| {
        let mut rb = parse_rulebase(document)?;
        if let Some(rep) = representation {
            rb = rb.with_representation(rep);
        }
        let out = infer(&rb, x)?;
        let mut s = String::new();
        writeln!(s, "representation: {}", rb.representation()).unwrap();
        writeln!(s, "y_star: {}", out.y_star).unwrap();
        if let Some(core) = out.core {
            writeln!(s, "core: {core}").unwrap();
        }
        writeln!(s, "firing: {}", fmt_list(&out.firing)).unwrap();
        Ok(Outcome::ok(s))
    })
}

/// `coherence`: pairwise coherence report. Exits with 3 when incoherence
/// is certified.
pub fn coherence(document: &str, mode: CoherenceMode, tol: f64) -> Outcome {
    run(|| {
        let rb = parse_rulebase(document)?;
        let report = coherence_full(&rb, mode, tol)?;
        let mut s = String::new();
        writeln!(s, "verdict: {}", report.verdict).unwrap();
        writeln!(s, "method: {}", report.method).unwrap();
        writeln!(s, "pairs: {}", report.pair_margins.len()).unwrap();
        for m in &report.pair_margins {
            writeln!(s, "margin({},{}): {}", m.j + 1, m.k + 1, m.margin).unwrap();
        }
        for w in &report.witnesses {
            write!(s, "witness({},{}): margin {}", w.j + 1, w.k + 1, w.margin).unwrap();
            if let Some(x) = &w.argmin {
                write!(s, ", x = {}", fmt_point(x)).unwrap();
            }
            if let Some(v) = w.min_value {
                write!(s, ", min_value {v}").unwrap();
            }
            if let Some(inc) = &w.incoherence {
                write!(
                    s,
                    ", I_{} = {} above I_{} = {}",
                    inc.high + 1,
                    inc.high_interval,
                    inc.low + 1,
                    inc.low_interval
                )
                .unwrap();
            }
            s.push('\n');
        }
        let mut out = Outcome::ok(s);
        if report.verdict == CoherenceVerdict::CertifiedIncoherent {
            out.code = EXIT_INCOHERENT;
        }
        Ok(out)
    })
}

/// `doc`: degree of covering on a grid.
pub fn doc(document: &str, input_box: Option<&InputBox>, resolution: &[usize]) -> Outcome {
    run(|| {
        let rb = parse_rulebase(document)?;
        let resolution = match resolution {
            [r] if rb.dim() > 1 => vec![*r; rb.dim()],
            other => other.to_vec(),
        };
        let r = degree_of_covering(&rb, input_box, &resolution)?;
        let mut s = String::new();
        writeln!(s, "doc_value: {}", r.doc_value).unwrap();
        writeln!(s, "lower_estimate: {}", r.lower_estimate).unwrap();
        writeln!(s, "argmin_x: {}", fmt_point(&r.argmin_x)).unwrap();
        let res: Vec<String> = r.resolution.iter().map(|v| v.to_string()).collect();
        writeln!(s, "resolution: {}", res.join(",")).unwrap();
        let bx: Vec<String> = r.input_box.bounds().iter().map(|(lo, hi)| format!("{lo}:{hi}")).collect();
        writeln!(s, "box: {}", bx.join(",")).unwrap();
        writeln!(s, "complete: {}", r.complete).unwrap();
        for lint in &r.lints {
            writeln!(s, "lint: {lint}").unwrap();
        }
        Ok(Outcome::ok(s))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// `x,rule_1,...,rule_m`: antecedent degrees along one input axis.
    Membership,
    /// `y,rule_1,...,rule_m`: consequent memberships.
    Consequent,
    /// `y,value`: the inferred output set `B'(y)` at a fixed input.
    Relation,
    /// `x,y_star,status`: the crisp output along one input axis.
    Output,
}

impl std::str::FromStr for CurveKind {
    type Err = FuzzyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "membership" => Ok(CurveKind::Membership),
            "consequent" => Ok(CurveKind::Consequent),
            "relation" => Ok(CurveKind::Relation),
            "output" => Ok(CurveKind::Output),
            _ => Err(invalid(format!(
                "unknown curve {s:?} (expected membership, consequent, relation or output)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub what: CurveKind,
    /// Zero-based input axis swept by `membership` and `output`.
    pub axis: usize,
    /// Sweep range; defaults to the input box on that axis, or to the span
    /// of the consequents for `y` sweeps.
    pub range: Option<(f64, f64)>,
    pub points: usize,
    /// Fixed input: the evaluation point for `relation` and the base point
    /// of the sweep otherwise (default: the origin).
    pub x: Option<Vec<f64>>,
    pub representation: Option<Representation>,
}

impl Default for CurveSpec {
    fn default() -> Self {
        Self {
            what: CurveKind::Membership,
            axis: 0,
            range: None,
            points: 201,
            x: None,
            representation: None,
        }
    }
}

fn input_range(rb: &RuleBase, axis: usize) -> (f64, f64) {
    if let Some(bx) = rb.input_box() {
        return bx.bounds()[axis];
    }
    rb.rules().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        let reach = 3.0 * r.widths()[axis];
        (lo.min(r.center()[axis] - reach), hi.max(r.center()[axis] + reach))
    })
}

fn output_range(rb: &RuleBase) -> (f64, f64) {
    rb.rules().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        let reach = r.plateau() + 2.0 * r.output_width();
        (lo.min(r.output_center() - reach), hi.max(r.output_center() + reach))
    })
}

/// Renders a curve as CSV (header row, LF line endings).
pub fn curves_csv(rb: &RuleBase, spec: &CurveSpec) -> Result<String> {
    let n = rb.dim();
    if spec.axis >= n {
        return Err(FuzzyError::IndexOutOfRange { index: spec.axis, len: n });
    }
    if spec.points < 2 {
        return Err(invalid(format!("points must be at least 2, got {}", spec.points)));
    }
    let base = match &spec.x {
        Some(x) => {
            check_dim(n, x.len())?;
            x.clone()
        }
        None if spec.what == CurveKind::Relation => {
            return Err(invalid("the relation curve needs an input point (--x)"));
        }
        None => vec![0.0; n],
    };
    let rb = match spec.representation {
        Some(rep) => rb.with_representation(rep),
        None => rb.clone(),
    };
    let m = rb.len();
    let rule_header: Vec<String> = (1..=m).map(|j| format!("rule_{j}")).collect();
    let mut s = String::new();
    match spec.what {
        CurveKind::Membership | CurveKind::Output => {
            let (lo, hi) = spec.range.unwrap_or_else(|| input_range(&rb, spec.axis));
            if spec.what == CurveKind::Membership {
                writeln!(s, "x,{}", rule_header.join(",")).unwrap();
            } else {
                s.push_str("x,y_star,status\n");
            }
            let mut x = base;
            for v in linspace(lo, hi, spec.points) {
                x[spec.axis] = v;
                if spec.what == CurveKind::Membership {
                    writeln!(s, "{v},{}", fmt_list(&rb.firing(&x)?)).unwrap();
                    continue;
                }
                match infer(&rb, &x) {
                    Ok(out) => writeln!(s, "{v},{},ok", out.y_star).unwrap(),
                    Err(FuzzyError::Incoherent { .. }) => writeln!(s, "{v},,incoherent").unwrap(),
                    Err(FuzzyError::NoRuleFires { .. }) => writeln!(s, "{v},,incomplete").unwrap(),
                    Err(e) => return Err(e),
                }
            }
        }
        CurveKind::Consequent => {
            let (lo, hi) = spec.range.unwrap_or_else(|| output_range(&rb));
            writeln!(s, "y,{}", rule_header.join(",")).unwrap();
            for y in linspace(lo, hi, spec.points) {
                let vals: Vec<f64> = rb.rules().iter().map(|r| r.consequent(rb.act(), y)).collect();
                writeln!(s, "{y},{}", fmt_list(&vals)).unwrap();
            }
        }
        CurveKind::Relation => {
            let (lo, hi) = spec.range.unwrap_or_else(|| output_range(&rb));
            let firing = rb.firing(&base)?;
            s.push_str("y,value\n");
            for y in linspace(lo, hi, spec.points) {
                writeln!(s, "{y},{}", relation_from_firing(&rb, &firing, y)).unwrap();
            }
        }
    }
    Ok(s)
}

/// `curves`: CSV export of one curve.
pub fn curves(document: &str, spec: &CurveSpec) -> Outcome {
    run(|| Ok(Outcome::ok(curves_csv(&parse_rulebase(document)?, spec)?)))
}

/// Configuration checked by `verify-radial`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialQuery {
    pub tnorm: String,
    pub act: ActSpec,
    pub p: Exponent,
    pub n: usize,
    pub check: RadialCheck,
}

/// `verify-radial`: samples the radial identity for a `(tnorm, act, p)`
/// triple. A violation exits with 2, the code of an invalid document.
pub fn verify_radial(query: &RadialQuery) -> Outcome {
    run(|| {
        let tnorm = TNorm::from_name(&query.tnorm)?;
        let act = build_act(&tnorm, &query.act, query.p)?;
        act.validate()?;
        let verdict = verify_radial_property(&tnorm, &act, query.p, query.n, &query.check)?;
        let mut s = String::new();
        writeln!(s, "tnorm: {tnorm}").unwrap();
        writeln!(s, "act: {}", act.name()).unwrap();
        writeln!(s, "p: {}", query.p).unwrap();
        writeln!(s, "n: {}", query.n).unwrap();
        match verdict {
            RadialVerdict::Holds { samples, max_error } => {
                writeln!(s, "verdict: holds").unwrap();
                writeln!(s, "samples: {samples}").unwrap();
                writeln!(s, "max_error: {max_error}").unwrap();
                Ok(Outcome::ok(s))
            }
            RadialVerdict::Violated(w) => {
                writeln!(s, "verdict: violated").unwrap();
                writeln!(s, "x: {}", fmt_point(&w.x)).unwrap();
                writeln!(s, "a: {}", fmt_point(&w.center)).unwrap();
                writeln!(s, "b: {}", fmt_point(&w.widths)).unwrap();
                writeln!(s, "folded: {}", w.folded).unwrap();
                writeln!(s, "radial: {}", w.radial).unwrap();
                Ok(Outcome {
                    stdout: s,
                    stderr: "reason: radial property violated\n".into(),
                    code: EXIT_INVALID,
                })
            }
        }
    })
}

/// `verify-radial` applied to the triple of a rule-base document.
pub fn verify_radial_document(document: &str, check: RadialCheck) -> Outcome {
    match parse_rulebase(document) {
        Err(e) => Outcome::failed(&e),
        Ok(rb) => run(|| {
            let verdict = verify_radial_property(rb.tnorm(), rb.act(), rb.p(), rb.dim().max(2), &check)?;
            let mut s = String::new();
            writeln!(s, "tnorm: {}", rb.tnorm()).unwrap();
            writeln!(s, "act: {}", rb.act().name()).unwrap();
            writeln!(s, "p: {}", rb.p()).unwrap();
            writeln!(s, "verdict: {}", if verdict.holds() { "holds" } else { "violated" }).unwrap();
            Ok(Outcome::ok(s))
        }),
    }
}
