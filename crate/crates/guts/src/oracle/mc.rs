//! Seeded Monte-Carlo estimators for one-round payoffs and for total
//! returns of the recursive game.
//!
//! Reproducibility contract: trial k draws from an independent RNG stream
//! derived from (seed, k), and partial results merge in a fixed order, so
//! estimates are bit-identical for a given seed regardless of thread count.

use super::rules::{focal_return, HandModel, RoundRules, ThresholdProfile};
use crate::discrete::{hand_order, HandOrder};
use crate::error::{input, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

/// Configuration for simulating the recursive game.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RecursiveSimConfig {
    /// Trials are cut off after this many rounds.
    pub max_rounds: u32,
    /// Penalty per unit stake charged when a trial is cut off unresolved.
    pub t: f64,
    pub seed: u64,
}

impl Default for RecursiveSimConfig {
    fn default() -> Self {
        Self {
            max_rounds: 64,
            t: 1.0,
            seed: 0,
        }
    }
}

/// Total-return estimate plus the fraction of trials that hit the round
/// cutoff without terminating.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TotalReturnEstimate {
    pub estimate: SimEstimate,
    pub truncated_fraction: f64,
}

const CHUNK: u64 = 8192;

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Stream 0 is the plain seeded generator; trials use streams 1, 2, ...
    rng.set_stream(trial + 1);
    rng
}

/// Pre-resolved sampling plan for one rule set and profile.
enum Sampler<'a> {
    Continuous(&'a [f64]),
    OneCard {
        deck: usize,
        cutoffs: &'a [u32],
    },
    TwoCard {
        cutoffs: &'a [u32],
        order: &'static HandOrder,
    },
}

impl<'a> Sampler<'a> {
    fn new(rules: &RoundRules, profile: &'a ThresholdProfile) -> Result<Self> {
        profile.check_against(rules)?;
        match (profile, rules.model) {
            (ThresholdProfile::Continuous(p), HandModel::Continuous) => {
                Ok(Sampler::Continuous(p))
            }
            (
                ThresholdProfile::Discrete(c),
                HandModel::Discrete {
                    deck_size,
                    cards_per_hand: 1,
                },
            ) => Ok(Sampler::OneCard {
                deck: deck_size as usize,
                cutoffs: c,
            }),
            (ThresholdProfile::Discrete(c), HandModel::Discrete { .. }) => Ok(Sampler::TwoCard {
                cutoffs: c,
                order: hand_order(),
            }),
            _ => unreachable!("profile checked against rules"),
        }
    }

    /// Plays one round, returning player 1's immediate return, the stake
    /// multiplier, and whether the game terminated.
    fn round(&self, n: usize, weenie: bool, rng: &mut ChaCha8Rng) -> (i64, u32, bool) {
        let mut r = 0usize;
        let mut focal_holds = false;
        let mut best_hold = f64::NEG_INFINITY;
        let mut best_hold_focal = false;
        let mut best_all = f64::NEG_INFINITY;
        let mut best_all_focal = false;
        let mut take = |j: usize, strength: f64, holds: bool| {
            if holds {
                r += 1;
                if j == 0 {
                    focal_holds = true;
                }
                if strength > best_hold {
                    best_hold = strength;
                    best_hold_focal = j == 0;
                }
            }
            if strength > best_all {
                best_all = strength;
                best_all_focal = j == 0;
            }
        };
        match self {
            Sampler::Continuous(p) => {
                for (j, &t) in p.iter().enumerate() {
                    let x: f64 = rng.random();
                    take(j, x, x >= t);
                }
            }
            Sampler::OneCard { deck, cutoffs } => {
                let picks = rand::seq::index::sample(rng, *deck, n);
                for (j, &t) in cutoffs.iter().enumerate() {
                    let card = picks.index(j) as u32 + 1;
                    take(j, card as f64, card >= t);
                }
            }
            Sampler::TwoCard { cutoffs, order } => {
                let picks = rand::seq::index::sample(rng, 52, 2 * n);
                for (j, &t) in cutoffs.iter().enumerate() {
                    let a = picks.index(2 * j) as u32 + 1;
                    let b = picks.index(2 * j + 1) as u32 + 1;
                    let idx = order.index_of(a, b);
                    take(j, idx as f64, idx >= t);
                }
            }
        }
        focal_return(
            n,
            weenie,
            r,
            focal_holds,
            focal_holds && best_hold_focal,
            best_all_focal,
        )
    }
}

fn check_samples(samples: u64) -> Result<()> {
    if samples < 1000 {
        return Err(input(format!("need at least 1000 samples, got {samples}")));
    }
    Ok(())
}

fn chunk_ranges(samples: u64) -> Vec<(u64, u64)> {
    (0..samples.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, samples.min((c + 1) * CHUNK)))
        .collect()
}

fn finish(sum: f64, sq_sum: f64, k: u64) -> SimEstimate {
    let kf = k as f64;
    let mean = sum / kf;
    let var = ((sq_sum - sum * sum / kf) / (kf - 1.0)).max(0.0);
    SimEstimate {
        mean,
        stderr: (var / kf).sqrt(),
        samples: k,
    }
}

/// Estimates the one-round payoff `alpha` (player 1's expected return) and
/// multiplier `beta` by playing `samples` independent rounds.
pub fn estimate_stage_payoff(
    rules: &RoundRules,
    profile: &ThresholdProfile,
    samples: u64,
    seed: u64,
) -> Result<(SimEstimate, SimEstimate)> {
    check_samples(samples)?;
    let sampler = Sampler::new(rules, profile)?;
    let (n, weenie) = (rules.players, rules.weenie);

    // Integer partials make the reduction exact and order-independent.
    let partials: Vec<(i64, i128, i64, i128)> = chunk_ranges(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut acc = (0i64, 0i128, 0i64, 0i128);
            for trial in start..end {
                let mut rng = trial_rng(seed, trial);
                let (ret, mult, _) = sampler.round(n, weenie, &mut rng);
                acc.0 += ret;
                acc.1 += (ret * ret) as i128;
                acc.2 += mult as i64;
                acc.3 += (mult as i128) * (mult as i128);
            }
            acc
        })
        .collect();

    let mut tot = (0i64, 0i128, 0i64, 0i128);
    for p in partials {
        tot.0 += p.0;
        tot.1 += p.1;
        tot.2 += p.2;
        tot.3 += p.3;
    }
    let alpha = finish(tot.0 as f64, tot.1 as f64, samples);
    let beta = finish(tot.2 as f64, tot.3 as f64, samples);
    Ok((alpha, beta))
}

fn kahan_add(sum: &mut f64, comp: &mut f64, x: f64) {
    let y = x - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// Simulates the recursive game: each trial plays rounds at the fixed
/// profile, compounding the stake by each round's multiplier, until
/// termination or `max_rounds`; unresolved trials are charged `t` per unit
/// of final stake. Returns are in units of the original ante.
pub fn estimate_total_return(
    rules: &RoundRules,
    profile: &ThresholdProfile,
    config: &RecursiveSimConfig,
    samples: u64,
) -> Result<TotalReturnEstimate> {
    check_samples(samples)?;
    if config.max_rounds < 1 {
        return Err(input("max_rounds must be at least 1".to_string()));
    }
    if !(config.t >= 0.0 && config.t.is_finite()) {
        return Err(input(format!("t must be finite and >= 0, got {}", config.t)));
    }
    let sampler = Sampler::new(rules, profile)?;
    let (n, weenie) = (rules.players, rules.weenie);

    let partials: Vec<(f64, f64, u64)> = chunk_ranges(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let (mut sum, mut sum_c) = (0.0, 0.0);
            let (mut sq, mut sq_c) = (0.0, 0.0);
            let mut truncated = 0u64;
            for trial in start..end {
                let mut rng = trial_rng(config.seed, trial);
                let mut stake = 1.0f64;
                let mut total = 0.0f64;
                let mut resolved = false;
                for _ in 0..config.max_rounds {
                    let (ret, mult, term) = sampler.round(n, weenie, &mut rng);
                    total += ret as f64 * stake;
                    if term {
                        resolved = true;
                        break;
                    }
                    stake *= mult as f64;
                }
                if !resolved {
                    truncated += 1;
                    total -= config.t * stake;
                }
                kahan_add(&mut sum, &mut sum_c, total);
                kahan_add(&mut sq, &mut sq_c, total * total);
            }
            (sum, sq, truncated)
        })
        .collect();

    // Merge chunk partials in chunk order: deterministic under any
    // parallel schedule.
    let (mut sum, mut sum_c) = (0.0, 0.0);
    let (mut sq, mut sq_c) = (0.0, 0.0);
    let mut truncated = 0u64;
    for (s, q, tr) in partials {
        kahan_add(&mut sum, &mut sum_c, s);
        kahan_add(&mut sq, &mut sq_c, q);
        truncated += tr;
    }
    Ok(TotalReturnEstimate {
        estimate: finish(sum, sq, samples),
        truncated_fraction: truncated as f64 / samples as f64,
    })
}
