//! Finite mixed opponent profiles and the coalition construction that
//! pins player 1 to a strictly negative payoff.

use super::{bloc_n, bloc_optimum, check_players, check_threshold, payoff2, payoff3};
use crate::error::{input, unsupported, Result};
use crate::oracle::{quadrature_alpha, ThresholdProfile};
use crate::recursive::StagePayoff;
use serde::Serialize;

/// A finitely supported mixture over opponent threshold vectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteMixedProfile {
    atoms: Vec<(Vec<f64>, f64)>,
}

impl FiniteMixedProfile {
    /// Builds a mixture from (opponent thresholds, weight) atoms. Weights
    /// must be positive and sum to 1 within 1e-12; atoms must share one
    /// arity.
    pub fn new(atoms: Vec<(Vec<f64>, f64)>) -> Result<Self> {
        let Some(first) = atoms.first() else {
            return Err(input("mixture needs at least one atom".to_string()));
        };
        let arity = first.0.len();
        if arity == 0 {
            return Err(input("atoms need at least one opponent".to_string()));
        }
        let mut total = 0.0;
        for (thresholds, weight) in &atoms {
            if thresholds.len() != arity {
                return Err(input(format!(
                    "atom arity {} differs from {arity}",
                    thresholds.len()
                )));
            }
            for &p in thresholds {
                check_threshold("atom threshold", p)?;
            }
            if !(*weight > 0.0) {
                return Err(input(format!("atom weight must be positive, got {weight}")));
            }
            total += weight;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(input(format!("atom weights sum to {total}, expected 1")));
        }
        Ok(Self { atoms })
    }

    pub fn atoms(&self) -> &[(Vec<f64>, f64)] {
        &self.atoms
    }

    /// Number of opponents in every atom.
    pub fn arity(&self) -> usize {
        self.atoms[0].0.len()
    }
}

/// Evaluates player 1 at `p1` against a pure opponent profile, routing to
/// the cheapest exact evaluator: heads-up/three-player closed forms, the
/// bloc closed form when all opponents share a threshold, and quadrature
/// up to 6 players. Larger unequal profiles are refused rather than
/// silently approximated.
pub fn stage_payoff(n: usize, p1: f64, opponents: &[f64]) -> Result<StagePayoff> {
    check_players(n, 2)?;
    check_threshold("p1", p1)?;
    if opponents.len() != n - 1 {
        return Err(input(format!(
            "{} opponent thresholds for {n} players",
            opponents.len()
        )));
    }
    for &p in opponents {
        check_threshold("opponent threshold", p)?;
    }
    if n == 2 {
        return payoff2(p1, opponents[0]);
    }
    if n == 3 {
        return payoff3(p1, opponents[0], opponents[1]);
    }
    if opponents.iter().all(|&p| p == opponents[0]) {
        return bloc_n(n, p1, opponents[0]);
    }
    if n <= 6 {
        let mut thresholds = Vec::with_capacity(n);
        thresholds.push(p1);
        thresholds.extend_from_slice(opponents);
        return quadrature_alpha(n, &ThresholdProfile::continuous(thresholds)?);
    }
    Err(unsupported(format!(
        "no exact evaluator for {n} players with unequal opponent thresholds"
    )))
}

/// Weighted average of the pure payoffs over a mixture's atoms.
pub fn mixed_stage_payoff(
    n: usize,
    mix: &FiniteMixedProfile,
    p1: f64,
) -> Result<StagePayoff> {
    if mix.arity() != n - 1 {
        return Err(input(format!(
            "mixture has {} opponents for {n} players",
            mix.arity()
        )));
    }
    let mut alpha = 0.0;
    let mut beta = 0.0;
    for (thresholds, weight) in mix.atoms() {
        let pay = stage_payoff(n, p1, thresholds)?;
        alpha += weight * pay.alpha;
        beta += weight * pay.beta;
    }
    Ok(StagePayoff { alpha, beta })
}

/// The two-atom opponent coalition: with probability `1 - C*eps^2` all
/// opponents play slightly below the symmetric optimum, and with
/// probability `C*eps^2` one designated spoiler always holds while the
/// rest play slightly above it.
pub fn coalition(n: usize, eps: f64, delta: f64, big_c: f64) -> Result<FiniteMixedProfile> {
    check_players(n, 3)?;
    for (name, v) in [("eps", eps), ("delta", delta), ("C", big_c)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(input(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let spoiler_weight = big_c * eps * eps;
    if spoiler_weight >= 1.0 {
        return Err(input(format!(
            "C*eps^2 = {spoiler_weight} leaves no weight for the main atom"
        )));
    }
    let p_star = bloc_optimum(n)?;
    let low = p_star - eps;
    check_threshold("optimum minus eps", low)?;
    let high = p_star + delta;
    check_threshold("optimum plus delta", high)?;

    let mut spoiler = vec![high; n - 1];
    spoiler[0] = 0.0;
    FiniteMixedProfile::new(vec![
        (vec![low; n - 1], 1.0 - spoiler_weight),
        (spoiler, spoiler_weight),
    ])
}

/// Payoff at the symmetric optimum against one always-holding opponent and
/// the rest of the bloc at `optimum + h`. Zero at `h = 0`; its right
/// derivative in `h` is `-(n - 2)`.
pub fn nonbloc_probe(n: usize, h: f64) -> Result<f64> {
    check_players(n, 3)?;
    if !(h >= 0.0 && h.is_finite()) {
        return Err(input(format!("h must be nonnegative and finite, got {h}")));
    }
    let p_star = bloc_optimum(n)?;
    if p_star + h > 1.0 {
        return Err(input(format!(
            "probe threshold {} exceeds 1",
            p_star + h
        )));
    }
    let mut opponents = vec![p_star + h; n - 1];
    opponents[0] = 0.0;
    Ok(stage_payoff(n, p_star, &opponents)?.alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coalition_example_weights_and_atoms() {
        let mix = coalition(3, 0.04, 0.137, 106.25).unwrap();
        let atoms = mix.atoms();
        assert_eq!(atoms.len(), 2);
        let p_star = std::f64::consts::FRAC_1_SQRT_2;
        assert!((atoms[0].1 - 0.83).abs() <= 1e-12);
        assert!((atoms[1].1 - 0.17).abs() <= 1e-12);
        assert_eq!(atoms[0].0.len(), 2);
        assert!((atoms[0].0[0] - (p_star - 0.04)).abs() <= 1e-12);
        assert!((atoms[0].0[1] - (p_star - 0.04)).abs() <= 1e-12);
        assert_eq!(atoms[1].0[0], 0.0);
        assert!((atoms[1].0[1] - (p_star + 0.137)).abs() <= 1e-12);
    }

    #[test]
    fn coalition_matches_optimum_for_any_size() {
        let mix = coalition(4, 0.02, 0.05, 10.0).unwrap();
        let expect = 0.5f64.powf(1.0 / 3.0) - 0.02;
        assert!((mix.atoms()[0].0[0] - expect).abs() <= 1e-12);
        assert_eq!(mix.atoms()[1].0, vec![0.0, 0.5f64.powf(1.0 / 3.0) + 0.05, 0.5f64.powf(1.0 / 3.0) + 0.05]);
    }

    #[test]
    fn coalition_rejects_bad_parameters() {
        assert!(coalition(2, 0.04, 0.1, 10.0).is_err());
        assert!(coalition(3, 0.0, 0.1, 10.0).is_err());
        assert!(coalition(3, 0.1, 0.1, 100.0).is_err()); // C*eps^2 = 1
        assert!(coalition(3, 0.8, 0.1, 1.0).is_err()); // optimum - eps < 0
        assert!(coalition(3, 0.04, 0.5, 10.0).is_err()); // optimum + delta > 1
    }

    #[test]
    fn vanishing_eps_shrinks_the_spoiler_weight() {
        let mix = coalition(3, 1e-4, 0.1, 10.0).unwrap();
        assert!(mix.atoms()[1].1 <= 1e-7 * (1.0 + 1e-9));
        assert!((mix.atoms()[0].1 - 1.0).abs() <= 1e-7 * (1.0 + 1e-9));
    }

    #[test]
    fn single_atom_mixture_is_the_pure_payoff() {
        let mix = FiniteMixedProfile::new(vec![(vec![0.4, 0.9], 1.0)]).unwrap();
        let mixed = mixed_stage_payoff(3, &mix, 0.3).unwrap();
        let pure = payoff3(0.3, 0.4, 0.9).unwrap();
        assert_eq!(mixed.alpha, pure.alpha);
        assert_eq!(mixed.beta, pure.beta);
    }

    #[test]
    fn two_atom_mixture_averages() {
        let mix = FiniteMixedProfile::new(vec![
            (vec![0.2, 0.2], 0.25),
            (vec![0.8, 0.6], 0.75),
        ])
        .unwrap();
        let mixed = mixed_stage_payoff(3, &mix, 0.5).unwrap();
        let a = payoff3(0.5, 0.2, 0.2).unwrap();
        let b = payoff3(0.5, 0.8, 0.6).unwrap();
        assert!((mixed.alpha - (0.25 * a.alpha + 0.75 * b.alpha)).abs() <= 1e-15);
        assert!((mixed.beta - (0.25 * a.beta + 0.75 * b.beta)).abs() <= 1e-15);
    }

    #[test]
    fn mixture_validation() {
        assert!(FiniteMixedProfile::new(vec![]).is_err());
        assert!(FiniteMixedProfile::new(vec![(vec![], 1.0)]).is_err());
        assert!(FiniteMixedProfile::new(vec![(vec![0.5], 0.5), (vec![0.5, 0.5], 0.5)]).is_err());
        assert!(FiniteMixedProfile::new(vec![(vec![0.5], 0.9)]).is_err());
        assert!(FiniteMixedProfile::new(vec![(vec![0.5], 1.0), (vec![0.6], -0.0)]).is_err());
        assert!(FiniteMixedProfile::new(vec![(vec![1.5], 1.0)]).is_err());
    }

    #[test]
    fn dispatch_routes_agree() {
        // Bloc route vs quadrature route on (nearly) identical inputs.
        let bloc = stage_payoff(5, 0.3, &[0.7, 0.7, 0.7, 0.7]).unwrap();
        let quad = quadrature_alpha(
            5,
            &ThresholdProfile::continuous(vec![0.3, 0.7, 0.7, 0.7, 0.7]).unwrap(),
        )
        .unwrap();
        assert!((bloc.alpha - quad.alpha).abs() <= 1e-11);
        assert!((bloc.beta - quad.beta).abs() <= 1e-11);

        // Heads-up and three-player routes.
        assert_eq!(
            stage_payoff(2, 0.5, &[0.75]).unwrap().alpha,
            payoff2(0.5, 0.75).unwrap().alpha
        );
        assert_eq!(
            stage_payoff(3, 0.2, &[0.5, 0.8]).unwrap().alpha,
            payoff3(0.2, 0.5, 0.8).unwrap().alpha
        );
    }

    #[test]
    fn oversized_unequal_profiles_are_refused() {
        let opponents: Vec<f64> = (0..6).map(|j| 0.1 * j as f64).collect();
        let err = stage_payoff(7, 0.5, &opponents).unwrap_err();
        assert!(matches!(err, crate::Error::Unsupported(_)));
        // All-equal still works through the bloc form.
        assert!(stage_payoff(7, 0.5, &[0.6; 6]).is_ok());
        // And a mixture containing such an atom propagates the refusal.
        let mix = FiniteMixedProfile::new(vec![(opponents, 1.0)]).unwrap();
        assert!(matches!(
            mixed_stage_payoff(7, &mix, 0.5).unwrap_err(),
            crate::Error::Unsupported(_)
        ));
    }

    #[test]
    fn probe_vanishes_at_zero_offset() {
        for n in 3..=6 {
            let v = nonbloc_probe(n, 0.0).unwrap();
            assert!(v.abs() <= 1e-12, "n={n}: {v}");
        }
    }

    #[test]
    fn probe_slope_matches_analytic_value_at_three_players() {
        let slope = (nonbloc_probe(3, 1e-3).unwrap() - nonbloc_probe(3, 0.0).unwrap()) / 1e-3;
        assert!((slope - (-1.0)).abs() <= 0.05, "slope {slope}");
    }

    #[test]
    fn probe_range_errors() {
        assert!(nonbloc_probe(2, 0.0).is_err());
        assert!(nonbloc_probe(3, -1e-6).is_err());
        assert!(nonbloc_probe(3, 0.5).is_err()); // 1/sqrt(2) + 0.5 > 1
        assert!(nonbloc_probe(7, 1e-3).is_err()); // no evaluator
    }
}
