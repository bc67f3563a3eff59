//! Closed-form stage payoffs, best responses, optimal thresholds, and
//! coalition constructions for continuous n-player Guts.
//!
//! Hands are i.i.d. uniform on [0,1] and a player with threshold `p` holds
//! exactly when their hand is at least `p`. Every function here returns the
//! exact expectation for one betting round; the Monte-Carlo and quadrature
//! engines in [`crate::oracle`] provide independent cross-checks.

mod bloc;
mod coalition;
mod three;
mod two;

pub use bloc::{bloc_n, bloc_optimum, bloc_slope, weenie_bloc, weenie_optimum};
pub use coalition::{
    coalition, mixed_stage_payoff, nonbloc_probe, stage_payoff, FiniteMixedProfile,
};
pub use three::{best_response3, payoff3};
pub use two::{best_response2, payoff2};

use crate::error::{input, Result};
use serde::Serialize;

/// Which analytic candidate attains a best-response value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResponseBranch {
    /// Every minimizing opponent uses an interior threshold.
    Interior,
    /// Some minimizing opponent holds on every hand (threshold 0).
    AlwaysHold,
}

/// Minimum stage payoff the opponents can force against a fixed player-1
/// threshold, together with a profile attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct BestResponseReport {
    pub p1: f64,
    /// Minimum of player 1's alpha over opponent thresholds.
    pub value: f64,
    /// Opponent thresholds attaining the minimum (clamped to [0,1] when the
    /// analytic minimizer falls outside).
    pub minimizer: Vec<f64>,
    pub branch: ResponseBranch,
}

pub(crate) fn check_threshold(name: &str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(input(format!("{name} must lie in [0,1], got {value}")));
    }
    Ok(())
}

pub(crate) fn check_players(n: usize, least: usize) -> Result<()> {
    if n < least {
        return Err(input(format!("player count must be at least {least}, got {n}")));
    }
    Ok(())
}
