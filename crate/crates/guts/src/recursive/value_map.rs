//! The recursive value map `T(V) = Value(A + B V)`.
//!
//! A recursive game is a one-shot matrix game whose entries may send the
//! players into another instance of the same game at scaled stakes: entry
//! `(i, j)` pays `a[i][j]` immediately and re-enters the game with weight
//! `b[i][j] >= 0`. Truncating after `n` rounds and settling unfinished games
//! at `-t` (pessimistic) or `+t` (optimistic) yields two iterate sequences;
//! when `max b[i][j] < 1` the map contracts and both converge to the unique
//! fixed-point value of the infinite game.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recursive::matrix::matrix_value;

/// One round's summary for a fixed strategy profile: `alpha` is the expected
/// immediate return and `beta` the expected stake multiplier carried into the
/// next round.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StagePayoff {
    pub alpha: f64,
    pub beta: f64,
}

/// A recursive zero-sum game `(A, B, t)`.
///
/// `a[i][j]` is the immediate payoff to the row player, `b[i][j] >= 0` the
/// stake multiplier on the recursive branch, and `t >= 0` the settlement
/// magnitude for truncated play.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixGamePair {
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<f64>>,
    pub t: f64,
}

impl MatrixGamePair {
    pub fn new(a: Vec<Vec<f64>>, b: Vec<Vec<f64>>, t: f64) -> Result<Self> {
        let game = MatrixGamePair { a, b, t };
        game.validate()?;
        Ok(game)
    }

    /// Checks shape and sign conditions; call after deserializing.
    pub fn validate(&self) -> Result<()> {
        let m = self.a.len();
        if m == 0 || self.a[0].is_empty() {
            return Err(Error::input("payoff matrix A is empty"));
        }
        let k = self.a[0].len();
        if self.b.len() != m {
            return Err(Error::input(format!(
                "B has {} rows, A has {m}",
                self.b.len()
            )));
        }
        for i in 0..m {
            if self.a[i].len() != k || self.b[i].len() != k {
                return Err(Error::input(format!("row {i} of A or B has wrong length")));
            }
            for j in 0..k {
                let (aij, bij) = (self.a[i][j], self.b[i][j]);
                if !aij.is_finite() || !bij.is_finite() {
                    return Err(Error::input(format!("non-finite entry at ({i},{j})")));
                }
                if bij < 0.0 {
                    return Err(Error::input(format!(
                        "stake multiplier b[{i}][{j}] = {bij} is negative"
                    )));
                }
            }
        }
        if !(self.t >= 0.0 && self.t.is_finite()) {
            return Err(Error::input(format!(
                "termination constant t = {} must be non-negative",
                self.t
            )));
        }
        Ok(())
    }

    /// Largest stake multiplier; the map contracts when this is below one.
    pub fn max_stake(&self) -> f64 {
        self.b
            .iter()
            .flat_map(|r| r.iter().cloned())
            .fold(0.0, f64::max)
    }

    /// The matrix game entered at continuation value `v`: `A + B v`.
    pub fn stage_matrix(&self, v: f64) -> Vec<Vec<f64>> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(&a, &b)| a + b * v).collect())
            .collect()
    }
}

/// Which truncation the iterates settle with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Unfinished play settles at `-t`; iterates underestimate the value.
    Lower,
    /// Unfinished play settles at `+t`; iterates overestimate the value.
    Upper,
}

/// Trace of `v_{n+1} = T(v_n)` from one truncation side.
///
/// When every entry satisfies `a[i][j] >= -t (1 - b[i][j])` (one round never
/// costs more than the whole settlement), the lower trace is monotone
/// nondecreasing; for general games only convergence is tracked.
#[derive(Debug, Clone, Serialize)]
pub struct ValueTrace {
    /// Termination constant the trace was run with.
    pub t: f64,
    pub direction: Direction,
    /// `values[n]` is the n-round truncated value, starting at `values[0] =
    /// -t` or `+t`.
    pub values: Vec<f64>,
    /// Whether the final step moved less than the requested tolerance.
    pub converged: bool,
    /// Size of the final step, infinite when no step was taken.
    pub residual: f64,
}

impl ValueTrace {
    pub fn last(&self) -> f64 {
        *self.values.last().expect("trace holds at least v_0")
    }

    pub fn steps(&self) -> usize {
        self.values.len() - 1
    }
}

/// Iterates the value map from `-t` or `+t` until the step size drops below
/// `tol` or `n_max` steps have run.
///
/// Each sequence converging on its own does not certify the game value; the
/// two limits agree only under contraction (`max_stake() < 1`). The width
/// `upper.last() - lower.last()` is the honest error bound either way.
pub fn value_map_iterate(
    game: &MatrixGamePair,
    direction: Direction,
    n_max: usize,
    tol: f64,
) -> Result<ValueTrace> {
    game.validate()?;
    if !(tol >= 0.0) {
        return Err(Error::input(format!("tolerance {tol} must be non-negative")));
    }
    let mut v = match direction {
        Direction::Lower => -game.t,
        Direction::Upper => game.t,
    };
    let mut values = vec![v];
    let mut residual = f64::INFINITY;
    let mut converged = false;
    for _ in 0..n_max {
        let next = matrix_value(&game.stage_matrix(v))?.value;
        residual = (next - v).abs();
        v = next;
        values.push(v);
        if residual < tol {
            converged = true;
            break;
        }
    }
    Ok(ValueTrace {
        t: game.t,
        direction,
        values,
        converged,
        residual,
    })
}

/// Runs both truncation sides and returns `(lower, upper)`.
pub fn value_bracket(
    game: &MatrixGamePair,
    n_max: usize,
    tol: f64,
) -> Result<(ValueTrace, ValueTrace)> {
    let lower = value_map_iterate(game, Direction::Lower, n_max, tol)?;
    let upper = value_map_iterate(game, Direction::Upper, n_max, tol)?;
    Ok((lower, upper))
}

/// Result of the termination criterion for a guaranteed stage payoff.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TerminationCheck {
    /// Whether `alpha >= alpha0` and `alpha >= t (beta - 1) + eps` both hold,
    /// so the closed-form lower bound applies.
    pub criterion_met: bool,
    /// Closed-form bound on the n-round pessimistic value:
    /// `alpha0 - alpha0 q^max(0, n-1) - t q^n` with `q = 1 - eps/t`.
    pub v_n: f64,
}

/// Evaluates the geometric termination bound.
///
/// If a strategy guarantees stage payoff `alpha >= alpha0 >= 0` and stake
/// `beta >= 0` with `alpha >= t (beta - 1) + eps` for some `0 < eps < t`,
/// then the pessimistic n-round value is at least
/// `alpha0 - alpha0 (1 - eps/t)^max(0, n-1) - t (1 - eps/t)^n`,
/// which rises to `alpha0` as `n` grows.
pub fn termination_toolkit(
    payoff: &StagePayoff,
    alpha0: f64,
    t: f64,
    eps: f64,
    n: u32,
) -> Result<TerminationCheck> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::input(format!("t = {t} must be positive")));
    }
    if !(eps > 0.0 && eps < t) {
        return Err(Error::input(format!("eps = {eps} must lie in (0, t)")));
    }
    if !(alpha0 >= 0.0) {
        return Err(Error::input(format!("alpha0 = {alpha0} must be non-negative")));
    }
    if !payoff.alpha.is_finite() || !payoff.beta.is_finite() || payoff.beta < 0.0 {
        return Err(Error::input("stage payoff must be finite with beta >= 0"));
    }
    let criterion_met =
        payoff.alpha >= alpha0 && payoff.alpha >= t * (payoff.beta - 1.0) + eps;
    let q = 1.0 - eps / t;
    let v_n = alpha0 - alpha0 * q.powi(n.saturating_sub(1) as i32) - t * q.powi(n as i32);
    Ok(TerminationCheck { criterion_met, v_n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharpness_of_the_geometric_rate() {
        // One action each, no immediate payoff, stake 1 - eps: the lower
        // iterate is exactly -(1 - eps)^n, matching the bound's decay rate.
        // eps = 0.25 keeps 1 - eps and t (beta - 1) + eps exact in binary,
        // so the boundary case alpha = 0 meets the criterion without slack.
        let eps = 0.25;
        let game = MatrixGamePair::new(vec![vec![0.0]], vec![vec![1.0 - eps]], 1.0).unwrap();
        let trace = value_map_iterate(&game, Direction::Lower, 40, 0.0).unwrap();
        let mut expected = -1.0;
        for (n, &v) in trace.values.iter().enumerate() {
            assert!((v - expected).abs() < 1e-12, "step {n}: {v} vs {expected}");
            expected *= 1.0 - eps;
        }
        // The closed-form bound with alpha0 = 0 gives the same sequence.
        let payoff = StagePayoff {
            alpha: 0.0,
            beta: 1.0 - eps,
        };
        for n in 0..20 {
            let check = termination_toolkit(&payoff, 0.0, 1.0, eps, n).unwrap();
            assert!(check.criterion_met);
            assert!((check.v_n - trace.values[n as usize]).abs() < 1e-12);
        }
    }

    #[test]
    fn both_sides_reach_the_fixed_point() {
        // T(v) = Value(A) + v/2 since B is constant 1/2, so the fixed point
        // is 2 * Value(A) = 3.
        let a = vec![vec![3.0, 1.0], vec![0.0, 2.0]];
        let b = vec![vec![0.5, 0.5], vec![0.5, 0.5]];
        let game = MatrixGamePair::new(a, b, 1.0).unwrap();
        let (lower, upper) = value_bracket(&game, 100, 1e-12).unwrap();
        assert!(lower.converged && upper.converged);
        assert!((lower.last() - 3.0).abs() < 1e-10);
        assert!((upper.last() - 3.0).abs() < 1e-10);
        assert!(lower.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn non_contractive_bracket_stays_open() {
        // With stake exactly 1 every point is fixed: each side "converges"
        // immediately but the bracket never narrows below 2t.
        let game = MatrixGamePair::new(vec![vec![0.0]], vec![vec![1.0]], 1.0).unwrap();
        let (lower, upper) = value_bracket(&game, 50, 1e-9).unwrap();
        assert_eq!(lower.last(), -1.0);
        assert_eq!(upper.last(), 1.0);
        assert!((game.max_stake() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_steps_report_infinite_residual() {
        let game = MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.5]], 1.0).unwrap();
        let trace = value_map_iterate(&game, Direction::Upper, 0, 1e-9).unwrap();
        assert_eq!(trace.values, vec![1.0]);
        assert!(!trace.converged);
        assert!(trace.residual.is_infinite());
    }

    #[test]
    fn termination_bound_rises_to_alpha0() {
        let payoff = StagePayoff {
            alpha: 0.2,
            beta: 1.1,
        };
        // alpha = 0.2 >= t(beta - 1) + eps = 0.1 + 0.05.
        let check = termination_toolkit(&payoff, 0.2, 1.0, 0.05, 0).unwrap();
        assert!(check.criterion_met);
        assert!((check.v_n + 1.0).abs() < 1e-15, "n = 0 bound is -t");
        let far = termination_toolkit(&payoff, 0.2, 1.0, 0.05, 500).unwrap();
        assert!((far.v_n - 0.2).abs() < 1e-6);
        // Monotone in n.
        let mut prev = f64::NEG_INFINITY;
        for n in 0..100 {
            let c = termination_toolkit(&payoff, 0.2, 1.0, 0.05, n).unwrap();
            assert!(c.v_n >= prev - 1e-15);
            prev = c.v_n;
        }
    }

    #[test]
    fn criterion_not_met_when_stakes_outrun_payoff() {
        let payoff = StagePayoff {
            alpha: 0.0,
            beta: 1.2,
        };
        let check = termination_toolkit(&payoff, 0.0, 1.0, 0.05, 10).unwrap();
        assert!(!check.criterion_met);
    }

    #[test]
    fn validation_rejects_bad_games() {
        assert!(MatrixGamePair::new(vec![], vec![], 1.0).is_err());
        assert!(MatrixGamePair::new(vec![vec![0.0]], vec![vec![-0.1]], 1.0).is_err());
        assert!(MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.5]], -1.0).is_err());
        assert!(MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.5]], 0.0).is_ok());
        assert!(MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.5, 0.5]], 1.0).is_err());
        assert!(termination_toolkit(
            &StagePayoff { alpha: 0.0, beta: 1.0 },
            0.0,
            1.0,
            1.5,
            1
        )
        .is_err());
        // The closed-form bound divides by t, so t = 0 is rejected there.
        assert!(termination_toolkit(
            &StagePayoff { alpha: 0.0, beta: 0.5 },
            0.0,
            0.0,
            0.1,
            1
        )
        .is_err());
    }

    #[test]
    fn scalar_game_limit_and_antisymmetric_zero() {
        // A = [[a]], B = [[b]] with b < 1 converges to a / (1 - b).
        let game = MatrixGamePair::new(vec![vec![0.3]], vec![vec![0.6]], 1.0).unwrap();
        let trace = value_map_iterate(&game, Direction::Lower, 200, 1e-13).unwrap();
        assert!(trace.converged);
        assert!((trace.last() - 0.3 / 0.4).abs() < 1e-11);

        // Antisymmetric A has Value(A) = 0, so the limit is 0 for any B < 1.
        let a = vec![vec![0.0, -1.0, 1.0], vec![1.0, 0.0, -1.0], vec![-1.0, 1.0, 0.0]];
        let b = vec![vec![0.5; 3]; 3];
        let game = MatrixGamePair::new(a, b, 1.0).unwrap();
        let (lower, upper) = value_bracket(&game, 200, 1e-12).unwrap();
        assert!(lower.last().abs() < 1e-10);
        assert!(upper.last().abs() < 1e-10);
    }

    #[test]
    fn worked_termination_example() {
        // alpha = 0, beta = 0.5, t = 1, eps = 0.4: v_3 = -(0.6)^3.
        let payoff = StagePayoff { alpha: 0.0, beta: 0.5 };
        let check = termination_toolkit(&payoff, 0.0, 1.0, 0.4, 3).unwrap();
        assert!(check.criterion_met);
        assert!((check.v_n + 0.216).abs() < 1e-15);
    }

    #[test]
    fn game_roundtrips_through_json() {
        let game = MatrixGamePair::new(
            vec![vec![1.0, -1.0], vec![-1.0, 1.0]],
            vec![vec![0.25, 0.0], vec![0.0, 0.25]],
            2.0,
        )
        .unwrap();
        let text = serde_json::to_string(&game).unwrap();
        assert!(text.contains("\"A\""), "uses the conventional field names");
        let back: MatrixGamePair = serde_json::from_str(&text).unwrap();
        back.validate().unwrap();
        assert_eq!(back.a, game.a);
        assert_eq!(back.t, game.t);
    }
}
