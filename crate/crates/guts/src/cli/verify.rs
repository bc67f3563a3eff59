//! Self-check suite behind `guts verify`: fast, deterministic spot checks
//! that the closed forms, the simulation oracle, and the deck analysis
//! agree with one another on provable ground truth.

use crate::continuous::{
    best_response2, best_response3, bloc_n, bloc_optimum, payoff2, payoff3,
};
use crate::discrete::{
    hand_order, optimal_1card, optimal_2card, payoff_1card, s_discrepancy_rows, Card,
};
use crate::oracle::{
    estimate_stage_payoff, play_round, quadrature_alpha, HandModel, Hands, RoundRules,
    ThresholdProfile,
};
use crate::recursive::{
    duality_gap, matrix_value, termination_toolkit, value_bracket, value_map_iterate,
    Direction, MatrixGamePair,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// One row of the verification table.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Runs every check and returns the table.
pub fn run_all() -> Vec<Check> {
    vec![
        antisymmetric_games_are_fair(),
        solver_meets_the_duality_gap(),
        pure_saddles_are_exact(),
        iteration_decay_matches_the_closed_bound(),
        truncation_sides_meet_under_contraction(),
        duel_closed_form_matches_quadrature(),
        three_player_closed_form_matches_quadrature(),
        duel_best_response_landmarks(),
        three_player_defense_stays_negative(),
        bloc_identity_at_the_optimum(),
        bloc_reduction_matches_the_three_player_formula(),
        bloc_optimum_meets_the_termination_margin(),
        simulation_matches_duel_closed_form(),
        simulation_matches_three_player_closed_form(),
        round_settlement_is_zero_sum(),
        one_card_midpoint_is_a_saddle(),
        two_card_order_landmarks(),
        two_card_scan_certificate_and_proxy(),
        shared_count_log_is_clean(),
    ]
}

fn antisymmetric_games_are_fair() -> Check {
    let rps = vec![
        vec![0.0, -1.0, 1.0],
        vec![1.0, 0.0, -1.0],
        vec![-1.0, 1.0, 0.0],
    ];
    let mut worst = matrix_value(&rps).map(|s| s.value.abs()).unwrap_or(f64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let k = rng.random_range(2..=4);
        let mut a = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..i {
                let x: f64 = rng.random_range(-2.0..2.0);
                a[i][j] = x;
                a[j][i] = -x;
            }
        }
        match matrix_value(&a) {
            Ok(sol) => worst = worst.max(sol.value.abs()),
            Err(_) => worst = f64::MAX,
        }
    }
    check(
        "matrix solver: antisymmetric games have value zero",
        worst <= 1e-9,
        format!("max |value| = {worst:.2e}"),
    )
}

fn solver_meets_the_duality_gap() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let m = rng.random_range(1..=5);
        let k = rng.random_range(1..=5);
        let a: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..k).map(|_| rng.random_range(-3.0..3.0)).collect())
            .collect();
        match matrix_value(&a) {
            Ok(sol) => worst = worst.max(duality_gap(&a, &sol)),
            Err(_) => worst = f64::MAX,
        }
    }
    check(
        "matrix solver: duality gap below 1e-9 on seeded random games",
        worst <= 1e-9,
        format!("max gap = {worst:.2e}"),
    )
}

fn pure_saddles_are_exact() -> Check {
    // (0,0) entry is both its row's minimum and its column's maximum.
    let a = vec![vec![2.0, 3.0], vec![1.0, 4.0]];
    let passed = matrix_value(&a).map(|s| s.value == 2.0).unwrap_or(false);
    check(
        "matrix solver: pure saddle points are returned exactly",
        passed,
        "value([[2,3],[1,4]]) == 2".to_string(),
    )
}

fn iteration_decay_matches_the_closed_bound() -> Check {
    // Zero immediate payoff, stake 0.75: the lower iterate is -(0.75)^n
    // and the geometric termination bound is exactly the same sequence.
    let game = MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.75]], 1.0).unwrap();
    let trace = value_map_iterate(&game, Direction::Lower, 40, 0.0).unwrap();
    let payoff = crate::recursive::StagePayoff {
        alpha: 0.0,
        beta: 0.75,
    };
    let mut worst = 0.0f64;
    let mut expected = -1.0;
    for (n, &v) in trace.values.iter().enumerate() {
        worst = worst.max((v - expected).abs());
        let bound = termination_toolkit(&payoff, 0.0, 1.0, 0.25, n as u32)
            .unwrap()
            .v_n;
        worst = worst.max((v - bound).abs());
        expected *= 0.75;
    }
    check(
        "value iteration: geometric decay matches the closed-form bound",
        worst <= 1e-12,
        format!("max deviation over 41 steps = {worst:.2e}"),
    )
}

fn truncation_sides_meet_under_contraction() -> Check {
    let game = MatrixGamePair::new(
        vec![vec![1.0, -1.0], vec![0.0, 2.0]],
        vec![vec![0.5, 0.3], vec![0.2, 0.4]],
        1.0,
    )
    .unwrap();
    let (lower, upper) = value_bracket(&game, 200, 1e-13).unwrap();
    let width = upper.last() - lower.last();
    let monotone = lower.values.windows(2).all(|w| w[1] >= w[0] - 1e-15);
    check(
        "value iteration: truncation sides meet under contraction",
        lower.converged && upper.converged && width.abs() <= 1e-9 && monotone,
        format!("bracket width = {width:.2e}"),
    )
}

fn duel_closed_form_matches_quadrature() -> Check {
    let grid = [0.1, 0.3, 0.5, 0.7, 0.9];
    let mut worst = 0.0f64;
    for &p1 in &grid {
        for &p2 in &grid {
            let closed = payoff2(p1, p2).unwrap();
            let profile = ThresholdProfile::continuous(vec![p1, p2]).unwrap();
            let quad = quadrature_alpha(2, &profile).unwrap();
            worst = worst.max((closed.alpha - quad.alpha).abs());
            worst = worst.max((closed.beta - quad.beta).abs());
        }
    }
    check(
        "two-player duel: closed form matches quadrature",
        worst <= 1e-6,
        format!("max |difference| over 25 profiles = {worst:.2e}"),
    )
}

fn three_player_closed_form_matches_quadrature() -> Check {
    let tuples = [
        (0.2, 0.5, 0.8),
        (0.5, 0.5, 0.5),
        (0.7, 0.6, 0.3),
        (0.9, 0.2, 0.4),
        (0.05, 0.95, 0.5),
    ];
    let mut worst = 0.0f64;
    for &(p1, p2, p3) in &tuples {
        let closed = payoff3(p1, p2, p3).unwrap();
        let profile = ThresholdProfile::continuous(vec![p1, p2, p3]).unwrap();
        let quad = quadrature_alpha(3, &profile).unwrap();
        worst = worst.max((closed.alpha - quad.alpha).abs());
        worst = worst.max((closed.beta - quad.beta).abs());
    }
    check(
        "three-player round: closed form matches quadrature",
        worst <= 1e-6,
        format!("max |difference| over 5 profiles = {worst:.2e}"),
    )
}

fn duel_best_response_landmarks() -> Check {
    let at_half = best_response2(0.5).unwrap().value;
    let at_zero = best_response2(0.0).unwrap().value;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for i in 0..=1000 {
        let p1 = i as f64 / 1000.0;
        let v = best_response2(p1).unwrap().value;
        if v > best.0 {
            best = (v, p1);
        }
    }
    let passed = at_half.abs() <= 1e-12 && (at_zero + 0.125).abs() <= 1e-12 && best.1 == 0.5;
    check(
        "two-player best response: fair at 1/2, -1/8 at 0, argmax 1/2",
        passed,
        format!("R(0.5) = {at_half:.2e}, R(0) = {at_zero}, argmax = {}", best.1),
    )
}

fn three_player_defense_stays_negative() -> Check {
    let mut max = f64::NEG_INFINITY;
    for i in 0..=100 {
        let p1 = i as f64 / 100.0;
        max = max.max(best_response3(p1).unwrap().value);
    }
    let at_root2 = best_response3(1.0 / 2f64.sqrt()).unwrap().value;
    let passed = max < 0.0 && (at_root2 + 0.107238).abs() <= 1e-4;
    check(
        "three-player best response: strictly negative everywhere",
        passed,
        format!("grid max = {max:.4}, value at 1/sqrt(2) = {at_root2:.6}"),
    )
}

fn bloc_identity_at_the_optimum() -> Check {
    let mut worst = 0.0f64;
    for n in 2..=8usize {
        let p = bloc_optimum(n).unwrap();
        let pay = bloc_n(n, p, p).unwrap();
        let nf = n as f64;
        let identity = nf * (1.0 - p) - 1.0 + 2.0 * p.powi(n as i32);
        let reduced = (nf - 1.0) * (1.0 - p);
        worst = worst.max((pay.beta - identity).abs());
        worst = worst.max((pay.beta - reduced).abs());
        worst = worst.max(pay.alpha.abs());
    }
    check(
        "bloc optimum: symmetric stakes equal (n-1)(1-p*), payoff zero",
        worst <= 1e-12,
        format!("max deviation over n = 2..8: {worst:.2e}"),
    )
}

fn bloc_reduction_matches_the_three_player_formula() -> Check {
    let grid = [0.1, 0.25, 0.4, 0.55, 0.7, 0.85];
    let mut worst = 0.0f64;
    for &p1 in &grid {
        for &p2 in &grid {
            let bloc = bloc_n(3, p1, p2).unwrap();
            let full = payoff3(p1, p2, p2).unwrap();
            worst = worst.max((bloc.alpha - full.alpha).abs());
            worst = worst.max((bloc.beta - full.beta).abs());
        }
    }
    check(
        "bloc reduction: n=3 band series equals the full three-player formula",
        worst <= 1e-12,
        format!("max |difference| over 36 profiles = {worst:.2e}"),
    )
}

fn bloc_optimum_meets_the_termination_margin() -> Check {
    let mut ok = true;
    let mut min_margin = f64::INFINITY;
    for n in 2..=8usize {
        let p = bloc_optimum(n).unwrap();
        let pay = bloc_n(n, p, p).unwrap();
        let termination = termination_toolkit(&pay, 0.0, 1.0, 0.05, 8).unwrap();
        ok &= termination.criterion_met;
        min_margin = min_margin.min(pay.alpha - (pay.beta - 1.0));
    }
    check(
        "bloc optimum: stage margin alpha - t(beta - 1) covers eps = 0.05",
        ok && min_margin >= 0.05,
        format!("min margin over n = 2..8: {min_margin:.4}"),
    )
}

fn mc_agreement(
    name: &'static str,
    thresholds: Vec<f64>,
    seed: u64,
) -> Check {
    let n = thresholds.len();
    let closed = match n {
        2 => payoff2(thresholds[0], thresholds[1]).unwrap(),
        _ => payoff3(thresholds[0], thresholds[1], thresholds[2]).unwrap(),
    };
    let rules = RoundRules::new(n, false, HandModel::Continuous).unwrap();
    let profile = ThresholdProfile::continuous(thresholds).unwrap();
    let (alpha, beta) = estimate_stage_payoff(&rules, &profile, 200_000, seed).unwrap();
    let za = (alpha.mean - closed.alpha).abs() / alpha.stderr;
    let zb = (beta.mean - closed.beta).abs() / beta.stderr;
    check(
        name,
        za <= 4.0 && zb <= 4.0,
        format!("z-scores: alpha {za:.2}, beta {zb:.2} (200000 rounds)"),
    )
}

fn simulation_matches_duel_closed_form() -> Check {
    mc_agreement(
        "simulation: duel estimates agree with the closed form",
        vec![0.5, 0.7],
        2025,
    )
}

fn simulation_matches_three_player_closed_form() -> Check {
    mc_agreement(
        "simulation: three-player estimates agree with the closed form",
        vec![0.7, 0.6, 0.8],
        2026,
    )
}

fn round_settlement_is_zero_sum() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let profile = ThresholdProfile::continuous(vec![0.3, 0.5, 0.7, 0.9]).unwrap();
    for weenie in [false, true] {
        let rules = RoundRules::new(4, weenie, HandModel::Continuous).unwrap();
        for round in 0..100_000 {
            let hands = Hands::Continuous((0..4).map(|_| rng.random()).collect());
            let outcome = play_round(&rules, &profile, &hands).unwrap();
            let total: i64 = outcome.returns.iter().sum();
            if total != 0 {
                return check(
                    "settlement: per-round returns sum to zero exactly",
                    false,
                    format!("round {round} (weenie = {weenie}) leaked {total}"),
                );
            }
        }
    }
    check(
        "settlement: per-round returns sum to zero exactly",
        true,
        "200000 rounds, 4 players, with and without the Weenie rule".to_string(),
    )
}

fn one_card_midpoint_is_a_saddle() -> Check {
    let best = optimal_1card(52).unwrap();
    let mut min_alpha = f64::INFINITY;
    for j in 1..=52 {
        min_alpha = min_alpha.min(payoff_1card(26, j, 52).unwrap().alpha);
    }
    let name_ok = Card::from_index(26).unwrap().name() == "8H";
    check(
        "one-card deck: cutoff 26 (8H) never loses to any reply",
        best == vec![26] && min_alpha == 0.0 && name_ok,
        format!("optimal set {best:?}, worst-reply payoff {min_alpha}"),
    )
}

fn two_card_order_landmarks() -> Check {
    let order = hand_order();
    let passed = order.hand(1).name() == "3C/2C"
        && order.hand(669).name() == "JS/7C"
        && order.hand(668).name() == "JD/7S"
        && order.hand(1248).name() == "AS/KS"
        && order.hand(1326).name() == "AS/AD"
        && !order.is_pair(1248)
        && order.is_pair(1249);
    check(
        "two-card order: landmark hands sit at their indices",
        passed,
        "1, 668, 669, 1248, 1326 all named correctly".to_string(),
    )
}

fn two_card_scan_certificate_and_proxy() -> Check {
    let sol = optimal_2card(hand_order());
    let passed = sol.optimal == vec![668]
        && sol.proxy_optimal == vec![669]
        && sol.finding.is_some();
    check(
        "two-card scan: exact certificate at 668, adjacent-cutoff test at 669",
        passed,
        format!(
            "optimal {:?}, proxy {:?}, finding reported: {}",
            sol.optimal,
            sol.proxy_optimal,
            sol.finding.is_some()
        ),
    )
}

fn shared_count_log_is_clean() -> Check {
    let log = s_discrepancy_rows(hand_order());
    let rows = log.rows.len();
    let matched = log.case_totals[1] == log.case_matches[1]
        && log.case_totals[2] == log.case_matches[2]
        && log.case_totals[3] == log.case_matches[3];
    check(
        "two-card shared-count log: closed form exact wherever it applies",
        rows == 5151 && log.case_totals[0] == 0 && matched,
        format!(
            "{rows} pairs, case counts {:?}, matches {:?}",
            log.case_totals, log.case_matches
        ),
    )
}
