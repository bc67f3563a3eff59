//! A two-atom opponent mixture that beats every defender threshold: with
//! high probability the opponents crowd just below the symmetric optimum,
//! and with small probability one spoiler always holds while the others
//! sit just above it. Sweeping p1 shows the payoff ceiling stays below
//! zero while the stake multiplier stays below one.

use guts::continuous::{coalition, mixed_stage_payoff};

fn main() -> guts::Result<()> {
    let (n, eps, delta, big_c) = (3, 0.04, 0.137, 106.25);
    let mix = coalition(n, eps, delta, big_c)?;
    println!("atoms of the mixture (thresholds @ weight):");
    for (thresholds, weight) in mix.atoms() {
        let ts: Vec<String> = thresholds.iter().map(|t| format!("{t:.6}")).collect();
        println!("  [{}] @ {weight:.4}", ts.join(", "));
    }

    let mut max_alpha = f64::NEG_INFINITY;
    let mut argmax = 0.0;
    let mut max_beta = f64::NEG_INFINITY;
    println!("\np1      alpha          beta");
    for k in 0..=1000 {
        let p1 = k as f64 / 1000.0;
        let pay = mixed_stage_payoff(n, &mix, p1)?;
        if k % 100 == 0 {
            println!("{p1:.3}   {:+.6}      {:.6}", pay.alpha, pay.beta);
        }
        if pay.alpha > max_alpha {
            max_alpha = pay.alpha;
            argmax = p1;
        }
        max_beta = max_beta.max(pay.beta);
    }

    println!("\nmax alpha over the sweep: {max_alpha:+.9} at p1 = {argmax:.3}");
    println!("max beta  over the sweep: {max_beta:.9}");
    println!(
        "every defender threshold loses: {}",
        if max_alpha < 0.0 { "yes" } else { "NO" }
    );
    println!(
        "the game still terminates (beta < 1): {}",
        if max_beta < 1.0 { "yes" } else { "NO" }
    );
    Ok(())
}
