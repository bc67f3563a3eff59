//! Three-player stage payoff and best response.

use super::{check_threshold, BestResponseReport, ResponseBranch};
use crate::error::Result;
use crate::recursive::StagePayoff;

/// Exact one-round payoff for player 1 at threshold `p1` against opponents
/// at `p2` and `p3`.
///
/// The formula is piecewise polynomial in the position of `p1` relative to
/// the sorted opponent thresholds; the pieces agree on the boundaries.
pub fn payoff3(p1: f64, p2: f64, p3: f64) -> Result<StagePayoff> {
    check_threshold("p1", p1)?;
    check_threshold("p2", p2)?;
    check_threshold("p3", p3)?;
    let beta = 2.0 - p1 - p2 - p3 + 2.0 * p1 * p2 * p3;
    let lo = p2.min(p3);
    let hi = p2.max(p3);
    let prod = p1 * p2 * p3;
    let base = 2.0 * p1 - lo - hi;
    let alpha = if p1 <= lo {
        base + hi * hi * hi + 3.0 * lo * lo * hi - 4.0 * prod
    } else if p1 <= hi {
        base + hi * hi * hi - 3.0 * p1 * p1 * hi + 2.0 * prod
    } else {
        base - 2.0 * p1 * p1 * p1 + 2.0 * prod
    };
    Ok(StagePayoff { alpha, beta })
}

/// Minimum over `(p2, p3)` of player 1's three-player payoff.
///
/// Two analytic candidates compete: a symmetric interior point `(q, q)` with
/// `q = 1/(s - 2*p1)`, `s = sqrt(4*p1^2 + 6)`, and a profile `(0, t)` with
/// one opponent always holding and `t = sqrt((3*p1^2 + 1)/3)`. The returned
/// value is the smaller candidate value. For `p1 > sqrt(2/3)` the second
/// candidate's stationary point exceeds 1; the reported minimizer clamps it
/// to 1 and the formula value is then a lower bound on the attainable
/// payoff rather than the exact minimum.
pub fn best_response3(p1: f64) -> Result<BestResponseReport> {
    check_threshold("p1", p1)?;
    let s = (4.0 * p1 * p1 + 6.0).sqrt();
    let q = 1.0 / (s - 2.0 * p1);
    let alpha_a = -(s * s * s + 8.0 * p1 * p1 * p1 - 36.0 * p1) / 27.0;
    let t = ((3.0 * p1 * p1 + 1.0) / 3.0).sqrt();
    let alpha_b = 2.0 * p1 - 2.0 * t * t * t;
    if alpha_a <= alpha_b {
        Ok(BestResponseReport {
            p1,
            value: alpha_a,
            minimizer: vec![q, q],
            branch: ResponseBranch::Interior,
        })
    } else {
        Ok(BestResponseReport {
            p1,
            value: alpha_b,
            minimizer: vec![0.0, t.min(1.0)],
            branch: ResponseBranch::AlwaysHold,
        })
    }
}
