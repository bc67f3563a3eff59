//! Zero-sum matrix game solver.
//!
//! `matrix_value` returns the game value and optimal mixed strategies for
//! both players of a finite zero-sum game given by its payoff matrix (row
//! player maximizes). Pure saddle points are detected and returned exactly;
//! everything else goes through the classical linear-programming transform
//! solved by a dense tableau simplex.

use serde::Serialize;

use crate::error::{Error, Result};

/// A probability vector over a player's pure actions.
///
/// Entries are non-negative and sum to one (within 1e-12 at construction;
/// stored values are renormalized exactly).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct MixedStrategyVector {
    probs: Vec<f64>,
}

impl MixedStrategyVector {
    /// Validates and normalizes a probability vector.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::input("mixed strategy must have at least one action"));
        }
        let mut sum = 0.0;
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < -1e-12 {
                return Err(Error::input(format!(
                    "mixed strategy entry {i} is {p}, expected a probability"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::input(format!(
                "mixed strategy sums to {sum}, expected 1"
            )));
        }
        let probs = probs.iter().map(|&p| p.max(0.0) / sum).collect();
        Ok(MixedStrategyVector { probs })
    }

    /// Point mass on a single action.
    pub fn pure(len: usize, action: usize) -> Self {
        let mut probs = vec![0.0; len];
        probs[action] = 1.0;
        MixedStrategyVector { probs }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Indices played with positive probability (above 1e-12).
    pub fn support(&self) -> Vec<usize> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 1e-12)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Value and optimal strategies of a zero-sum matrix game.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixSolution {
    /// Game value to the row (maximizing) player.
    pub value: f64,
    pub row_strategy: MixedStrategyVector,
    pub col_strategy: MixedStrategyVector,
}

fn validate_matrix(a: &[Vec<f64>]) -> Result<(usize, usize)> {
    let m = a.len();
    if m == 0 {
        return Err(Error::input("payoff matrix has no rows"));
    }
    let k = a[0].len();
    if k == 0 {
        return Err(Error::input("payoff matrix has no columns"));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != k {
            return Err(Error::input(format!(
                "row {i} has {} entries, expected {k}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::input(format!("entry ({i},{j}) is {v}")));
            }
        }
    }
    Ok((m, k))
}

/// Looks for a pure saddle point: an entry that is both the maximum of the
/// row minima and the minimum of the column maxima. When one exists the game
/// value is that entry exactly and both players have pure optima.
fn pure_saddle(a: &[Vec<f64>], m: usize, k: usize) -> Option<MatrixSolution> {
    let mut best_row = 0;
    let mut maximin = f64::NEG_INFINITY;
    for (i, row) in a.iter().enumerate() {
        let row_min = row.iter().cloned().fold(f64::INFINITY, f64::min);
        if row_min > maximin {
            maximin = row_min;
            best_row = i;
        }
    }
    let mut best_col = 0;
    let mut minimax = f64::INFINITY;
    for j in 0..k {
        let col_max = (0..m).map(|i| a[i][j]).fold(f64::NEG_INFINITY, f64::max);
        if col_max < minimax {
            minimax = col_max;
            best_col = j;
        }
    }
    if maximin == minimax {
        Some(MatrixSolution {
            value: maximin,
            row_strategy: MixedStrategyVector::pure(m, best_row),
            col_strategy: MixedStrategyVector::pure(k, best_col),
        })
    } else {
        None
    }
}

const PIVOT_EPS: f64 = 1e-12;
const MAX_ITERS: usize = 10_000;
/// Switch from Dantzig's rule to Bland's (anti-cycling) after this many pivots.
const BLAND_AFTER: usize = 200;

/// Solves a zero-sum matrix game.
///
/// `a[i][j]` is the payment from the column player to the row player when
/// row `i` meets column `j`. The returned strategies satisfy strong duality
/// to well under 1e-9: the row strategy guarantees at least `value` against
/// every column and the column strategy concedes at most `value` against
/// every row.
pub fn matrix_value(a: &[Vec<f64>]) -> Result<MatrixSolution> {
    let (m, k) = validate_matrix(a)?;
    if let Some(sol) = pure_saddle(a, m, k) {
        return Ok(sol);
    }

    // Shift so every entry is at least 1; the value V' of the shifted game
    // is then positive and the game reduces to the LP pair
    //   max sum(w)  s.t.  A' w <= 1, w >= 0      (column player, k vars)
    //   min sum(u)  s.t.  A'^T u >= 1, u >= 0    (row player, m vars)
    // with V' = 1 / sum(w*), y = V' w*, x = V' u*.
    let min_entry = a
        .iter()
        .flat_map(|r| r.iter().cloned())
        .fold(f64::INFINITY, f64::min);
    let shift = 1.0 - min_entry;

    // Tableau for the maximization LP: m constraint rows over k variable
    // columns, m slack columns, and a right-hand side. The objective row
    // stores z_j - c_j, so a negative entry marks an improving column.
    let cols = k + m + 1;
    let rhs = k + m;
    let mut t = vec![vec![0.0f64; cols]; m + 1];
    for i in 0..m {
        for j in 0..k {
            t[i][j] = a[i][j] + shift;
        }
        t[i][k + i] = 1.0;
        t[i][rhs] = 1.0;
    }
    for j in 0..k {
        t[m][j] = -1.0;
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    let mut iters = 0;
    loop {
        // Entering column.
        let mut enter = None;
        if iters < BLAND_AFTER {
            let mut best = -PIVOT_EPS;
            for j in 0..k + m {
                if t[m][j] < best {
                    best = t[m][j];
                    enter = Some(j);
                }
            }
        } else {
            enter = (0..k + m).find(|&j| t[m][j] < -PIVOT_EPS);
        }
        let Some(e) = enter else { break };

        // Ratio test; ties go to the row whose basic variable has the
        // smallest index, which keeps Bland's rule sound.
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][e] > PIVOT_EPS {
                let ratio = t[i][rhs] / t[i][e];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best_ratio - PIVOT_EPS
                            || (ratio < best_ratio + PIVOT_EPS && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio.min(best_ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // Cannot happen for a shifted game (the LP is bounded), but fail
            // loudly rather than loop.
            return Err(Error::NoConvergence {
                steps: iters,
                residual: f64::INFINITY,
            });
        };

        // Pivot on (l, e).
        let pivot = t[l][e];
        for v in t[l].iter_mut() {
            *v /= pivot;
        }
        for i in 0..=m {
            if i != l {
                let factor = t[i][e];
                if factor != 0.0 {
                    for j in 0..cols {
                        t[i][j] -= factor * t[l][j];
                    }
                }
            }
        }
        basis[l] = e;

        iters += 1;
        if iters >= MAX_ITERS {
            return Err(Error::NoConvergence {
                steps: iters,
                residual: t[m][..k + m].iter().cloned().fold(0.0, f64::min).abs(),
            });
        }
    }

    // Objective value z = 1/V'; the duals sit in the slack columns of the
    // objective row.
    let z = t[m][rhs];
    let vp = 1.0 / z;
    let mut w = vec![0.0f64; k];
    for (i, &b) in basis.iter().enumerate() {
        if b < k {
            w[b] = t[i][rhs];
        }
    }
    let mut y: Vec<f64> = w.iter().map(|&wj| (wj * vp).max(0.0)).collect();
    let mut x: Vec<f64> = (0..m).map(|i| (t[m][k + i] * vp).max(0.0)).collect();
    let ys: f64 = y.iter().sum();
    let xs: f64 = x.iter().sum();
    y.iter_mut().for_each(|p| *p /= ys);
    x.iter_mut().for_each(|p| *p /= xs);

    Ok(MatrixSolution {
        value: vp - shift,
        row_strategy: MixedStrategyVector { probs: x },
        col_strategy: MixedStrategyVector { probs: y },
    })
}

/// Expected payoff `x^T A y` for mixed strategies over `a`.
pub fn expected_payoff(a: &[Vec<f64>], x: &MixedStrategyVector, y: &MixedStrategyVector) -> f64 {
    let mut total = 0.0;
    for (i, row) in a.iter().enumerate() {
        let xi = x.probs[i];
        if xi == 0.0 {
            continue;
        }
        for (j, &v) in row.iter().enumerate() {
            total += xi * y.probs[j] * v;
        }
    }
    total
}

/// Worst case for the row player: `min_j (x^T A)_j`.
fn row_guarantee(a: &[Vec<f64>], x: &[f64]) -> f64 {
    let k = a[0].len();
    (0..k)
        .map(|j| a.iter().zip(x).map(|(row, &xi)| xi * row[j]).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
}

/// Worst case for the column player: `max_i (A y)_i`.
fn col_exposure(a: &[Vec<f64>], y: &[f64]) -> f64 {
    a.iter()
        .map(|row| row.iter().zip(y).map(|(&v, &yj)| v * yj).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// How far a candidate solution is from proving optimality: the gap between
/// what the column strategy concedes and what the row strategy guarantees.
/// Zero at an exact equilibrium; `matrix_value` keeps it below 1e-9.
pub fn duality_gap(a: &[Vec<f64>], sol: &MatrixSolution) -> f64 {
    col_exposure(a, sol.col_strategy.probs()) - row_guarantee(a, sol.row_strategy.probs())
}
