//! The Weenie rule fines the highest hand when everyone drops, which
//! shifts the optimal threshold down from (1/2)^(1/(n-1)) to
//! (1/3)^(1/(n-1)). This compares the two rule sets in closed form and
//! cross-checks one point against the simulator.

use guts::continuous::{bloc_n, bloc_optimum, weenie_bloc, weenie_optimum};
use guts::oracle::{estimate_stage_payoff, HandModel, RoundRules, ThresholdProfile};

fn main() -> guts::Result<()> {
    // At a common threshold the all-drop event gains a fine and a doubled
    // pot, so beta rises by exactly the all-drop probability.
    let (p1, p2) = (0.5, 0.5);
    let plain = bloc_n(3, p1, p2)?;
    let weenie = weenie_bloc(3, p1, p2)?;
    println!("n = 3 at (0.5, 0.5):");
    println!("  plain   alpha {:+.6}  beta {:.6}", plain.alpha, plain.beta);
    println!("  weenie  alpha {:+.6}  beta {:.6}", weenie.alpha, weenie.beta);
    println!("  beta shift = {:.6} (the all-drop probability 1/8)", weenie.beta - plain.beta);

    // The fine pushes the optimum toward looser play.
    println!("\n  n   plain optimum   weenie optimum");
    for n in 2..=6 {
        println!(
            "  {n}   {:.9}     {:.9}",
            bloc_optimum(n)?,
            weenie_optimum(n)?
        );
    }

    // At the Weenie optimum the payoff in p2 is nonnegative with equality
    // only at the optimum itself: the threshold is a saddle point.
    let n = 3;
    let w = weenie_optimum(n)?;
    let mut min_off = f64::INFINITY;
    for k in 0..=1000 {
        let p2 = k as f64 / 1000.0;
        let alpha = weenie_bloc(n, w, p2)?.alpha;
        if (p2 - w).abs() > 5e-3 {
            min_off = min_off.min(alpha);
        }
    }
    println!(
        "\nn = {n}: alpha({w:.6}, {w:.6}) = {:+.1e}, min alpha away from the optimum {:+.2e}",
        weenie_bloc(n, w, w)?.alpha,
        min_off
    );

    // Simulator cross-check at an asymmetric point.
    let (p1, p2) = (0.4, 0.7);
    let closed = weenie_bloc(3, p1, p2)?;
    let rules = RoundRules::new(3, true, HandModel::Continuous)?;
    let profile = ThresholdProfile::continuous(vec![p1, p2, p2])?;
    let (alpha_hat, beta_hat) = estimate_stage_payoff(&rules, &profile, 400_000, 7)?;
    println!(
        "\nsimulated (0.4 vs 0.7, 0.7): alpha {:+.5} +/- {:.5} (closed {:+.5})",
        alpha_hat.mean, alpha_hat.stderr, closed.alpha
    );
    println!(
        "                             beta  {:.5} +/- {:.5} (closed {:.5})",
        beta_hat.mean, beta_hat.stderr, closed.beta
    );
    Ok(())
}
