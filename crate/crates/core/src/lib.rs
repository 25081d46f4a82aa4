//! Radial fuzzy systems.
//!
//! A radial rule base uses a single shape function for all of its fuzzy
//! sets and a t-norm under which each n-dimensional antecedent reduces to
//! the shape applied to a scaled ℓp distance. On top of such a rule base the
//! crate provides
//!
//! - conjunctive inference (singleton fuzzifier, max-T relation, weighted
//!   average) and implicative inference (residuated relation, closed-form
//!   rule output intervals, mean of maxima), see [`inference`];
//! - coherence certification of implicative systems, degree of covering and
//!   the conjunctive/implicative divergence check, see [`analysis`];
//! - a JSON rule-base document format and the command implementations behind
//!   the `radfuzz` binary, see [`interface`].
//!
//! ```
//! use radfuzz::prelude::*;
//!
//! let rules = vec![
//!     Rule::new(vec![0.0, 0.0], vec![1.0, 1.0], 0.0, 1.0, 0.0)?,
//!     Rule::new(vec![3.0, 4.0], vec![1.0, 1.0], 5.0, 1.0, 0.0)?,
//! ];
//! let rb = build_archimedean_rulebase(rules, TNorm::PRODUCT, 1.0, 2.0, Representation::Implicative)?;
//! let out = infer_implicative(&rb, &[0.0, 0.0])?;
//! assert_eq!(out.y_star, 0.0);
//! assert_eq!(coherence_sufficient(&rb)?.verdict, CoherenceVerdict::CertifiedCoherent);
//! # Ok::<(), radfuzz::FuzzyError>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod geometry;
pub mod inference;
pub mod interface;
pub mod radial_sets;

pub use error::{FuzzyError, IncoherenceWitness, Result};

pub mod prelude {
    pub use crate::algebra::{snorm_max, AdditiveGenerator, Generator, TNorm};
    pub use crate::analysis::{
        coherence_exact_pair, coherence_full, coherence_sufficient, degree_of_covering,
        divergence_bound_check, CoherenceMode, CoherenceReport, CoherenceVerdict, DocReport,
    };
    pub use crate::error::{FuzzyError, IncoherenceWitness};
    pub use crate::geometry::{Exponent, InputBox, ScaledNorm};
    pub use crate::inference::{
        infer, infer_conjunctive, infer_implicative, intersect_intervals, relation_value,
        rule_output_interval, InferenceResult, OutputInterval,
    };
    pub use crate::radial_sets::{
        build_archimedean_rulebase, build_minimum_rulebase, verify_radial_property, ActFunction,
        ActKind, RadialCheck, RadialVerdict, Representation, Rule, RuleBase,
    };
}
