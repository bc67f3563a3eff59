//! Guts on a real deck: exact stage payoffs for one-card and two-card hands.
//!
//! One-card analysis works over an arbitrary deck of `N` distinct strengths
//! and is exact rational arithmetic carried in `f64` (every numerator is an
//! integer well below 2^53). Two-card analysis fixes the standard 52-card
//! deck, ranks all 1326 hands, and accounts for card-removal effects: the
//! opponent's holding changes the conditional distribution of your own hand.

mod cards;
mod one_card;
mod two_card;

pub use cards::{
    build_hand_order, hand_order, Card, Hand2, HandOrder, HAND_COUNT, NONPAIR_COUNT, OVERLAP_COUNT,
};
pub use one_card::{optimal_1card, payoff_1card};
pub use two_card::{
    exclusion_count, optimal_2card, p_tilde, payoff_2card, pbar, s_discrepancy_rows,
    ExclusionMode, SDiscrepancyReport, SRow, TwoCardSolution, WindowConditionRow,
};

use serde::Serialize;

/// Stage payoff of a discrete threshold duel, along with the hold
/// probabilities that produced it.
///
/// `p_i1` and `p_i2` are the unconditional hold probabilities of the two
/// strategies. `p_cond` is the probability that the weaker strategy's hold
/// range beats a hand drawn from the stronger strategy's hold range,
/// conditioned on the relevant overlap; it is `None` when the strategies
/// are identical and the duel is symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiscretePayoff {
    pub alpha: f64,
    pub beta: f64,
    pub p_i1: f64,
    pub p_i2: f64,
    pub p_cond: Option<f64>,
}
