//! Heads-up guts dealt from a deck of `n` distinct one-card hands.
//!
//! Strategy `i` holds exactly on hands of index greater than `i`, so `i` is
//! the number of hands folded. Dealing is without replacement: the two
//! players never hold the same card, which shifts every payoff slightly
//! against the naive independent model. All probabilities here are exact
//! ratios of integer counts.

use crate::error::input;
use crate::discrete::DiscretePayoff;
use crate::Result;

fn check_deck(n: u32) -> Result<()> {
    if n < 2 {
        return Err(input(format!("deck must hold at least 2 cards, got {n}")));
    }
    Ok(())
}

fn check_cutoff(name: &str, i: u32, n: u32) -> Result<()> {
    if i < 1 || i > n {
        return Err(input(format!(
            "strategy {name} must lie in 1..={n}, got {i}"
        )));
    }
    Ok(())
}

/// Exact stage payoff when player 1 folds hands `1..=i1` and the opponent
/// folds `1..=i2` on a deck of `n` one-card hands.
///
/// `alpha` is player 1's expected one-shot return and `beta` the expected
/// carried multiplier. Both are exact: the numerators are integer counts
/// over the `n(n-1)` equally likely deals. `p_cond` is
/// `(max(i1,i2) - 1)/(n - 1)`, the probability that one dealt hand falls
/// below the higher cutoff given the other hand it is compared against;
/// `alpha` factors as `(1 - 2*p_cond)*(p_i1 - p_i2)`.
pub fn payoff_1card(i1: u32, i2: u32, n: u32) -> Result<DiscretePayoff> {
    check_deck(n)?;
    check_cutoff("i1", i1, n)?;
    check_cutoff("i2", i2, n)?;

    let (i1w, i2w, nw) = (i64::from(i1), i64::from(i2), i64::from(n));
    let lo = i1w.min(i2w);
    let hi = i1w.max(i2w);
    let denom = (nw * (nw - 1)) as f64;

    // Both fold, or both hold and the higher hand collects double. The lone
    // holder cases cancel against each other inside the same count.
    let alpha_num = if i2 <= i1 {
        (i1w - i2w) * (nw + 1 - 2 * i1w)
    } else {
        (i1w - i2w) * (nw + 1 - 2 * i2w)
    };
    // Multiplier carries on all-fold (weight 1) and on showdown (weight
    // r - 1 = 1); the deals counted must avoid the shared card.
    let beta_num = i1w * i2w - lo + (nw - i1w) * (nw - i2w) - (nw - hi);

    let p_cond = if i1 == i2 {
        None
    } else {
        Some((hi - 1) as f64 / (nw - 1) as f64)
    };
    Ok(DiscretePayoff {
        alpha: alpha_num as f64 / denom,
        beta: beta_num as f64 / denom,
        p_i1: i1 as f64 / n as f64,
        p_i2: i2 as f64 / n as f64,
        p_cond,
    })
}

/// All fold-count strategies that are weakly optimal on a deck of `n`
/// one-card hands: `{n/2}` for even `n`, the two middle cutoffs for odd `n`.
/// Each returned index is re-verified by scanning `alpha` against every
/// opponent cutoff.
pub fn optimal_1card(n: u32) -> Result<Vec<u32>> {
    check_deck(n)?;
    let best = if n % 2 == 0 {
        vec![n / 2]
    } else {
        vec![(n - 1) / 2, (n + 1) / 2]
    };
    for &i1 in &best {
        for i2 in 1..=n {
            let payoff = payoff_1card(i1, i2, n)?;
            assert!(
                payoff.alpha >= 0.0,
                "cutoff {i1} on a {n}-card deck loses {} to opponent cutoff {i2}",
                payoff.alpha
            );
        }
    }
    Ok(best)
}
