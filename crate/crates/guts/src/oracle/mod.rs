//! Independent ground-truth engines: a seeded Monte-Carlo simulator of the
//! betting round and the recursive game, and a deterministic quadrature
//! evaluator for small player counts.

mod mc;
mod quadrature;
mod rules;

pub use mc::{
    estimate_stage_payoff, estimate_total_return, RecursiveSimConfig, SimEstimate,
    TotalReturnEstimate,
};
pub use quadrature::quadrature_alpha;
pub use rules::{play_round, HandModel, Hands, RoundOutcome, RoundRules, ThresholdProfile};
