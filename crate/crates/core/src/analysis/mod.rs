//! Rule-base analysis: coherence of implicative systems, degree of covering
//! and the divergence between the two computational models.
//!
//! Coherence is checked pairwise. For rules `j < k` the cheap test compares
//! `|c_j - c_k| - (s_j + s_k)` with `min{d_j α_j, d_k α_k} ‖a_j - a_k‖_p`
//! ([`coherence_sufficient`]); the exact test minimises
//! `J(x) = d_j ‖x - a_j‖_{p,b_j} + d_k ‖x - a_k‖_{p,b_k}` instead
//! ([`coherence_exact_pair`]).

mod coherence;
mod covering;
mod divergence;
mod minimize;

pub use coherence::{
    coherence_exact_pair, coherence_exact_pair_with_budget, coherence_full, coherence_sufficient,
    relaxed_pair_minimum, sufficient_margin, CoherenceMode, CoherenceReport, CoherenceVerdict, PairMargin,
    PairResult, PairVerdict, PairWitness, DEFAULT_PAIR_BUDGET, DEFAULT_TOL,
};
pub use covering::{default_resolution, degree_of_covering, DocReport, MAX_GRID_CELLS};
pub use divergence::{divergence_bound_check, DivergenceReport};
pub use minimize::{PairObjective, PairObjectiveMin};
