//! Radial fuzzy sets and rule bases.
//!
//! Every membership function is built from one shape [`ActFunction`]:
//! antecedents `A_ji(x_i) = act(|x_i - a_ji| / b_ji)`, consequents
//! `B_j(y) = act(max{0, |y - c_j| - s_j} / d_j)`. When the t-norm, the shape
//! and the norm exponent fit together, the n-dimensional antecedent
//! collapses to `act(‖x - a_j‖_{p,b_j})`. That identity is checked when a
//! [`RuleBase`] is built and is then used as the evaluation path.
//!
//! Two families are known to fit:
//! - the minimum t-norm with any act function and `p = inf`
//!   ([`build_minimum_rulebase`]);
//! - a continuous Archimedean t-norm with generator `t` and
//!   `act(z) = t^(-1)(q z^p)`, `p` finite ([`build_archimedean_rulebase`]).
//!
//! The product t-norm with act `exp(-z^2)` and `p = 2` gives the Gaussian
//! antecedent `exp(-‖x - a‖²_{2,b})`, the product of the one-dimensional
//! Gaussians. Note the square on the norm.

mod act;
mod rule;
mod rulebase;
mod verify;

pub use act::{ActFunction, ActKind, CustomAct};
pub use rule::{alpha_cut_1d, Rule};
pub use rulebase::{build_archimedean_rulebase, build_minimum_rulebase, Representation, RuleBase, WidthLint};
pub use verify::{verify_radial_property, RadialCheck, RadialVerdict, RadialWitness};
