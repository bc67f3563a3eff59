//! Deterministic evaluation of one-round payoffs by conditioning on every
//! hold/drop pattern and integrating player 1's win probability.
//!
//! For up to 6 players this is an exact-in-principle oracle: pattern
//! probabilities are threshold products, and the win probability given a
//! pattern is a one-dimensional integral of a polynomial of degree below 6,
//! which 16-point Gauss-Legendre evaluates to machine precision.

use super::rules::ThresholdProfile;
use crate::error::{input, unsupported, Result};
use crate::recursive::StagePayoff;

/// 16-point Gauss-Legendre rule on [-1, 1]: (|node|, weight) pairs, used
/// at both signs of each node.
const GL16: [(f64, f64); 8] = [
    (0.0950125098376374, 0.1894506104550685),
    (0.2816035507792589, 0.1826034150449236),
    (0.4580167776572274, 0.1691565193950025),
    (0.6178762444026438, 0.1495959888165767),
    (0.7554044083550030, 0.1246289712555339),
    (0.8656312023878318, 0.0951585116824928),
    (0.9445750230732326, 0.0622535239386479),
    (0.9894009349916499, 0.0271524594117541),
];

/// P(player 1 wins | this hold pattern): the integral over player 1's
/// conditional hand density of the product of the other holders'
/// conditional CDFs. `lower` is the largest threshold among player 1 and
/// the other holders; below it the product vanishes.
fn win_probability(p: &[f64], mask: u32, lower: f64) -> f64 {
    let half = (1.0 - lower) / 2.0;
    let mid = (1.0 + lower) / 2.0;
    let mut integral = 0.0;
    for &(node, weight) in &GL16 {
        for sign in [-1.0, 1.0] {
            let x = mid + sign * node * half;
            let mut f = 1.0;
            for (j, &pj) in p.iter().enumerate().skip(1) {
                if mask >> j & 1 == 1 {
                    f *= (x - pj) / (1.0 - pj);
                }
            }
            integral += weight * f;
        }
    }
    integral * half / (1.0 - p[0])
}

/// Computes the one-round payoff (alpha, beta) for up to 6 players under
/// standard rules by summing over all 2^n hold/drop patterns.
pub fn quadrature_alpha(n: usize, profile: &ThresholdProfile) -> Result<StagePayoff> {
    if n < 2 {
        return Err(input(format!("need at least 2 players, got {n}")));
    }
    if n > 6 {
        return Err(unsupported(format!(
            "quadrature evaluation is limited to 6 players, got {n}"
        )));
    }
    let ThresholdProfile::Continuous(p) = profile else {
        return Err(input(
            "quadrature evaluation needs a continuous profile".to_string(),
        ));
    };
    if p.len() != n {
        return Err(input(format!(
            "profile has {} entries for {n} players",
            p.len()
        )));
    }

    let mut alpha = 0.0;
    let mut beta = 0.0;
    for mask in 0u32..(1 << n) {
        let mut prob = 1.0;
        for (j, &pj) in p.iter().enumerate() {
            prob *= if mask >> j & 1 == 1 { 1.0 - pj } else { pj };
        }
        if prob == 0.0 {
            // Skipping before any conditional work also guards the
            // divisions by 1 - p_j inside win_probability.
            continue;
        }
        let r = mask.count_ones() as usize;
        beta += prob
            * match r {
                0 => 1.0,
                1 => 0.0,
                _ => (r - 1) as f64,
            };
        let ret = if mask & 1 == 1 {
            let mut lower = p[0];
            for (j, &pj) in p.iter().enumerate().skip(1) {
                if mask >> j & 1 == 1 {
                    lower = lower.max(pj);
                }
            }
            let w = win_probability(p, mask, lower);
            // The showdown winner nets n + r - 2 and a losing holder
            // r - 2 - n; averaging at win probability w gives this form,
            // which also covers the lone-holder case (w = 1, net n - 1).
            (r as f64 - 2.0) + n as f64 * (2.0 * w - 1.0)
        } else {
            match r {
                0 => 0.0,
                1 => -1.0,
                _ => r as f64 - 2.0,
            }
        };
        alpha += prob * ret;
    }
    Ok(StagePayoff { alpha, beta })
}
