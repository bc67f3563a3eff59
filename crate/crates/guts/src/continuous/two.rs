//! Heads-up stage payoff and best response.

use super::{check_threshold, BestResponseReport, ResponseBranch};
use crate::error::Result;
use crate::recursive::StagePayoff;

/// Exact one-round payoff for heads-up play at thresholds `(p1, p2)`.
///
/// `alpha` is player 1's expected return, `beta` the expected next-round
/// multiplier. Both players ante 1 and the pot replays at the computed
/// multiplier unless exactly one player holds.
pub fn payoff2(p1: f64, p2: f64) -> Result<StagePayoff> {
    check_threshold("p1", p1)?;
    check_threshold("p2", p2)?;
    let beta = p1 * p2 + (1.0 - p1) * (1.0 - p2);
    let alpha = if p2 <= p1 {
        (1.0 - 2.0 * p1) * (p1 - p2)
    } else {
        (1.0 - 2.0 * p2) * (p1 - p2)
    };
    Ok(StagePayoff { alpha, beta })
}

/// Minimum over `p2` of player 1's heads-up payoff, with the minimizer.
///
/// For `p1 < 1/2` the unique minimizer is interior at `(2*p1 + 1)/4`; from
/// `p1 = 1/2` on, an opponent who always holds is optimal.
pub fn best_response2(p1: f64) -> Result<BestResponseReport> {
    check_threshold("p1", p1)?;
    if p1 < 0.5 {
        let p2 = (2.0 * p1 + 1.0) / 4.0;
        let d = 1.0 - 2.0 * p1;
        Ok(BestResponseReport {
            p1,
            value: -d * d / 8.0,
            minimizer: vec![p2],
            branch: ResponseBranch::Interior,
        })
    } else {
        Ok(BestResponseReport {
            p1,
            value: (1.0 - 2.0 * p1) * p1,
            minimizer: vec![0.0],
            branch: ResponseBranch::AlwaysHold,
        })
    }
}
