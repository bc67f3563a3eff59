//! Round rules, hand models, strategy profiles, and exact single-round
//! settlement.

use crate::discrete::hand_order;
use crate::error::{input, Result};
use serde::{Deserialize, Serialize};

/// How hands are drawn and compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HandModel {
    /// Independent uniform draws from [0,1].
    Continuous,
    /// Dealing without replacement from a deck of `deck_size` distinct
    /// cards, `cards_per_hand` cards each. Two-card hands require the
    /// standard 52-card deck.
    Discrete { deck_size: u32, cards_per_hand: u8 },
}

/// Rule set for one betting round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRules {
    pub players: usize,
    /// Weenie rule: when everyone drops, the highest hand is fined one
    /// ante per opponent and the pot doubles.
    pub weenie: bool,
    pub model: HandModel,
}

impl RoundRules {
    pub fn new(players: usize, weenie: bool, model: HandModel) -> Result<Self> {
        if players < 2 {
            return Err(input(format!("need at least 2 players, got {players}")));
        }
        if let HandModel::Discrete {
            deck_size,
            cards_per_hand,
        } = model
        {
            if !(cards_per_hand == 1 || cards_per_hand == 2) {
                return Err(input(format!(
                    "cards per hand must be 1 or 2, got {cards_per_hand}"
                )));
            }
            if cards_per_hand == 2 && deck_size != 52 {
                return Err(input(format!(
                    "two-card hands require a 52-card deck, got {deck_size}"
                )));
            }
            if deck_size < 2 {
                return Err(input(format!("deck must have at least 2 cards, got {deck_size}")));
            }
            if (deck_size as u64) < players as u64 * cards_per_hand as u64 {
                return Err(input(format!(
                    "deck of {deck_size} cannot deal {cards_per_hand} card(s) to {players} players"
                )));
            }
        }
        Ok(Self {
            players,
            weenie,
            model,
        })
    }

    /// Number of distinct hands under the model's ranking, for validating
    /// discrete cutoffs.
    pub(crate) fn hand_count(&self) -> Option<u32> {
        match self.model {
            HandModel::Continuous => None,
            HandModel::Discrete {
                deck_size,
                cards_per_hand,
            } => Some(if cards_per_hand == 1 {
                deck_size
            } else {
                deck_size * (deck_size - 1) / 2
            }),
        }
    }
}

/// Per-player hold thresholds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ThresholdProfile {
    /// Player j holds exactly when their uniform hand is at least the
    /// j-th entry.
    Continuous(Vec<f64>),
    /// Player j holds exactly when their hand's order index is at least
    /// the j-th cutoff. A cutoff of hand-count + 1 never holds.
    Discrete(Vec<u32>),
}

impl ThresholdProfile {
    pub fn continuous(thresholds: Vec<f64>) -> Result<Self> {
        if thresholds.len() < 2 {
            return Err(input("profile needs at least 2 players".to_string()));
        }
        for (j, &p) in thresholds.iter().enumerate() {
            if !(0.0..=1.0).contains(&p) {
                return Err(input(format!("threshold {} is {p}, outside [0,1]", j + 1)));
            }
        }
        Ok(Self::Continuous(thresholds))
    }

    pub fn discrete(cutoffs: Vec<u32>) -> Result<Self> {
        if cutoffs.len() < 2 {
            return Err(input("profile needs at least 2 players".to_string()));
        }
        for (j, &c) in cutoffs.iter().enumerate() {
            if c < 1 {
                return Err(input(format!("cutoff {} must be at least 1", j + 1)));
            }
        }
        Ok(Self::Discrete(cutoffs))
    }

    pub fn len(&self) -> usize {
        match self {
            Self::Continuous(v) => v.len(),
            Self::Discrete(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks the profile against a rule set: matching hand model,
    /// matching player count, and in-range cutoffs.
    pub(crate) fn check_against(&self, rules: &RoundRules) -> Result<()> {
        if self.len() != rules.players {
            return Err(input(format!(
                "profile has {} entries for {} players",
                self.len(),
                rules.players
            )));
        }
        match (self, rules.model) {
            (Self::Continuous(_), HandModel::Continuous) => Ok(()),
            (Self::Discrete(cutoffs), HandModel::Discrete { .. }) => {
                let hands = rules.hand_count().expect("discrete model");
                for (j, &c) in cutoffs.iter().enumerate() {
                    if c > hands + 1 {
                        return Err(input(format!(
                            "cutoff {} is {c}, above the never-hold cutoff {}",
                            j + 1,
                            hands + 1
                        )));
                    }
                }
                Ok(())
            }
            (Self::Continuous(_), HandModel::Discrete { .. }) => Err(input(
                "continuous profile given for a discrete hand model".to_string(),
            )),
            (Self::Discrete(_), HandModel::Continuous) => Err(input(
                "discrete profile given for a continuous hand model".to_string(),
            )),
        }
    }
}

/// Dealt hands for one round, one entry per player.
#[derive(Clone, Debug, PartialEq)]
pub enum Hands {
    /// Uniform hand values in [0,1].
    Continuous(Vec<f64>),
    /// Single card ids in 1..=deck_size, all distinct.
    OneCard(Vec<u32>),
    /// Unordered pairs of card ids in 1..=52, all 2n cards distinct.
    TwoCard(Vec<(u32, u32)>),
}

/// Settled result of one betting round.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundOutcome {
    /// Players who held, 0-based.
    pub holder_set: Vec<usize>,
    /// Pot winner (0-based): the highest holder when anyone holds.
    pub winner: Option<usize>,
    /// Immediate per-player returns in units of the current stake.
    pub returns: Vec<i64>,
    /// Stake factor for the next round; 0 when the game terminated.
    pub multiplier: u32,
    pub terminated: bool,
}

/// Immediate return bookkeeping for one player, exact in integers.
///
/// `r` is the number of holding players. With `r >= 2` the pot is contested:
/// the winner nets `n + r - 2`, holding losers `r - 2 - n`, droppers
/// `r - 2` (each loser matches the pot and every player is credited the
/// next round's ante), and play continues at stake factor `r - 1`. With
/// `r = 1` the lone holder collects the antes and the game ends. With
/// `r = 0` the round replays at the same stake, except under the Weenie
/// rule where the highest hand is fined `n - 1`, everyone else gains 1,
/// and the stake doubles.
pub(crate) fn focal_return(
    n: usize,
    weenie: bool,
    r: usize,
    holds: bool,
    wins_pot: bool,
    overall_max: bool,
) -> (i64, u32, bool) {
    let n = n as i64;
    match r {
        0 => {
            if weenie {
                (if overall_max { -(n - 1) } else { 1 }, 2, false)
            } else {
                (0, 1, false)
            }
        }
        1 => (if holds { n - 1 } else { -1 }, 0, true),
        _ => {
            let r_i = r as i64;
            let ret = if holds {
                if wins_pot {
                    n + r_i - 2
                } else {
                    r_i - 2 - n
                }
            } else {
                r_i - 2
            };
            (ret, (r - 1) as u32, false)
        }
    }
}

/// Comparable hand strengths (discrete strengths are exact in f64).
fn strengths(rules: &RoundRules, hands: &Hands) -> Result<Vec<f64>> {
    match (hands, rules.model) {
        (Hands::Continuous(v), HandModel::Continuous) => {
            if v.iter().any(|x| !(0.0..=1.0).contains(x)) {
                return Err(input("continuous hands must lie in [0,1]".to_string()));
            }
            Ok(v.clone())
        }
        (Hands::OneCard(v), HandModel::Discrete { deck_size, cards_per_hand: 1 }) => {
            let mut seen = vec![false; deck_size as usize + 1];
            for &c in v {
                if c < 1 || c > deck_size {
                    return Err(input(format!("card id {c} outside 1..={deck_size}")));
                }
                if seen[c as usize] {
                    return Err(input(format!("card id {c} dealt twice")));
                }
                seen[c as usize] = true;
            }
            Ok(v.iter().map(|&c| c as f64).collect())
        }
        (Hands::TwoCard(v), HandModel::Discrete { deck_size: 52, cards_per_hand: 2 }) => {
            let mut seen = [false; 53];
            for &(a, b) in v {
                for c in [a, b] {
                    if !(1..=52).contains(&c) {
                        return Err(input(format!("card id {c} outside 1..=52")));
                    }
                    if seen[c as usize] {
                        return Err(input(format!("card id {c} dealt twice")));
                    }
                    seen[c as usize] = true;
                }
            }
            let order = hand_order();
            Ok(v.iter().map(|&(a, b)| order.index_of(a, b) as f64).collect())
        }
        _ => Err(input("hands do not match the rule set's hand model".to_string())),
    }
}

fn holds(profile: &ThresholdProfile, rules: &RoundRules, hands: &Hands, j: usize) -> bool {
    match (profile, hands) {
        (ThresholdProfile::Continuous(p), Hands::Continuous(h)) => h[j] >= p[j],
        (ThresholdProfile::Discrete(c), Hands::OneCard(h)) => h[j] >= c[j],
        (ThresholdProfile::Discrete(c), Hands::TwoCard(h)) => {
            let (a, b) = h[j];
            hand_order().index_of(a, b) >= c[j]
        }
        _ => unreachable!("profile/hands consistency checked earlier: {rules:?}"),
    }
}

/// Plays one betting round to completion and settles it exactly.
pub fn play_round(
    rules: &RoundRules,
    profile: &ThresholdProfile,
    hands: &Hands,
) -> Result<RoundOutcome> {
    profile.check_against(rules)?;
    let n = rules.players;
    let hand_len = match hands {
        Hands::Continuous(v) => v.len(),
        Hands::OneCard(v) => v.len(),
        Hands::TwoCard(v) => v.len(),
    };
    if hand_len != n {
        return Err(input(format!("{hand_len} hands dealt for {n} players")));
    }
    let strength = strengths(rules, hands)?;

    let mut holder_set = Vec::new();
    for j in 0..n {
        if holds(profile, rules, hands, j) {
            holder_set.push(j);
        }
    }
    let r = holder_set.len();

    // First strict maximum wins; discrete strengths never tie.
    let argmax = |set: &dyn Fn(usize) -> bool| -> Option<usize> {
        let mut best: Option<usize> = None;
        for j in 0..n {
            if set(j) && best.is_none_or(|b| strength[j] > strength[b]) {
                best = Some(j);
            }
        }
        best
    };
    let winner = argmax(&|j| holder_set.contains(&j));
    let overall_max = argmax(&|_| true);

    let mut returns = Vec::with_capacity(n);
    let mut multiplier = 0;
    let mut terminated = false;
    for j in 0..n {
        let (ret, mult, term) = focal_return(
            n,
            rules.weenie,
            r,
            holder_set.contains(&j),
            winner == Some(j),
            overall_max == Some(j),
        );
        returns.push(ret);
        multiplier = mult;
        terminated = term;
    }
    debug_assert_eq!(returns.iter().sum::<i64>(), 0);

    Ok(RoundOutcome {
        holder_set,
        winner: if r >= 1 { winner } else { None },
        returns,
        multiplier,
        terminated,
    })
}
