//! Stage payoff for one player against a bloc of opponents sharing a
//! threshold, for standard and Weenie rules, with slope and optimum helpers.

use super::{check_players, check_threshold};
use crate::error::Result;
use crate::recursive::StagePayoff;

/// Expected next-round multiplier when player 1 holds with probability
/// `1 - p1` and each of `n - 1` opponents independently holds with
/// probability `1 - p2`.
///
/// Derived from the event sum P(0 hold)*1 + sum over r >= 2 of (r-1)*P(r):
/// collapsing the binomial terms gives an exact closed form.
fn bloc_beta(n: usize, p1: f64, p2: f64) -> f64 {
    let all_drop = p1 * p2.powi(n as i32 - 1);
    (1.0 - p1) + (n as f64 - 1.0) * (1.0 - p2) - 1.0 + 2.0 * all_drop
}

/// Correction to the linear payoff estimate when player 1 undercuts the
/// bloc (`p1 > p2`), accounting for rounds where player 1 drops while `m`
/// opponents have hands inside the band `(p2, p1)`.
fn hold_correction(n: usize, p1: f64, p2: f64) -> f64 {
    let band = p1 - p2;
    if band <= 0.0 || n == 2 {
        return 0.0;
    }
    let nf = n as f64;
    let mut sum = 0.0;
    let mut binom = 1.0; // C(n-1, m), updated incrementally
    for m in 1..n {
        let mf = m as f64;
        binom *= (nf - mf) / mf;
        let per_event = (nf - 2.0) + nf * (mf - 1.0) / (mf + 1.0);
        let weight = binom * p2.powi((n - 1 - m) as i32) * band.powi(m as i32);
        sum += per_event * weight;
    }
    band * sum
}

/// Exact one-round payoff for player 1 at `p1` against `n - 1` opponents
/// who all play threshold `p2`.
///
/// For `p1 <= p2` the payoff is exactly linear in `p1`. For `p1 > p2` a
/// positive series correction is added for hands that fall between the two
/// thresholds.
pub fn bloc_n(n: usize, p1: f64, p2: f64) -> Result<StagePayoff> {
    check_players(n, 2)?;
    check_threshold("p1", p1)?;
    check_threshold("p2", p2)?;
    let nm1 = n as f64 - 1.0;
    let alpha = if p1 <= p2 {
        nm1 * (p2 - p1) * (2.0 * p2.powi(n as i32 - 1) - 1.0)
    } else {
        nm1 * (p2 - p1) * (2.0 * p1.powi(n as i32 - 1) - 1.0) + hold_correction(n, p1, p2)
    };
    Ok(StagePayoff {
        alpha,
        beta: bloc_beta(n, p1, p2),
    })
}

/// Derivative of the bloc payoff in `p1` on the linear side `p1 <= p2`,
/// evaluated at the symmetric point: `(n-1)(1 - 2*p^(n-1))`.
pub fn bloc_slope(n: usize, p: f64) -> Result<f64> {
    check_players(n, 2)?;
    check_threshold("p", p)?;
    Ok((n as f64 - 1.0) * (1.0 - 2.0 * p.powi(n as i32 - 1)))
}

/// Threshold at which the bloc slope vanishes: `(1/2)^(1/(n-1))`.
pub fn bloc_optimum(n: usize) -> Result<f64> {
    check_players(n, 2)?;
    Ok(0.5f64.powf(1.0 / (n as f64 - 1.0)))
}

/// Bloc payoff under the Weenie rule: when everyone drops, the highest
/// hand is fined one ante per opponent and the pot doubles.
pub fn weenie_bloc(n: usize, p1: f64, p2: f64) -> Result<StagePayoff> {
    let base = bloc_n(n, p1, p2)?;
    let nm1 = n as f64 - 1.0;
    let correction = if p1 <= p2 {
        p1 * (p2.powi(n as i32 - 1) - p1.powi(n as i32 - 1))
    } else {
        nm1 * p2.powi(n as i32 - 1) * (p2 - p1)
    };
    // All-drop probability; the event's multiplier moves from 1 to 2.
    let all_drop = p1 * p2.powi(n as i32 - 1);
    Ok(StagePayoff {
        alpha: base.alpha + correction,
        beta: base.beta + all_drop,
    })
}

/// Threshold optimizing the symmetric Weenie bloc game: `(1/3)^(1/(n-1))`.
pub fn weenie_optimum(n: usize) -> Result<f64> {
    check_players(n, 2)?;
    Ok((1.0f64 / 3.0).powf(1.0 / (n as f64 - 1.0)))
}
