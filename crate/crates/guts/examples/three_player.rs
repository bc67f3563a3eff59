//! Three-player Guts: exact corner payoffs, the defender's guaranteed
//! floor against two independent opponents, and why no threshold is safe.

use guts::continuous::{best_response3, payoff3};

fn main() -> guts::Result<()> {
    // Corner and interior evaluations of the closed-form stage payoff.
    let corners = [
        (0.0, 1.0, 1.0),
        (1.0, 0.0, 1.0),
        (0.0, 0.5, 1.0),
        (0.2, 0.5, 0.8),
    ];
    println!("p1    p2    p3      alpha        beta");
    for (p1, p2, p3) in corners {
        let s = payoff3(p1, p2, p3)?;
        println!("{p1:.1}   {p2:.1}   {p3:.1}    {:+.6}    {:.6}", s.alpha, s.beta);
    }

    // Best response against the worst pair of opponent thresholds. The
    // maximum over p1 stays strictly negative: with two opponents there
    // is no guaranteed-nonlosing threshold.
    let mut max = (f64::NEG_INFINITY, 0.0);
    println!("\np1      floor value    minimizer            branch");
    for i in 0..=100 {
        let p1 = i as f64 / 100.0;
        let r = best_response3(p1)?;
        if i % 10 == 0 {
            println!(
                "{p1:.2}    {:+.6}      [{:.3}, {:.3}]    {:?}",
                r.value, r.minimizer[0], r.minimizer[1], r.branch
            );
        }
        if r.value > max.0 {
            max = (r.value, p1);
        }
    }
    println!(
        "max over the grid: {:+.6} at p1 = {:.2}  (still negative)",
        max.0, max.1
    );

    // The symmetric-optimum threshold from the bloc analysis lands close
    // to the least-bad single threshold here as well.
    let at_root = best_response3(std::f64::consts::FRAC_1_SQRT_2)?;
    println!(
        "\nat p1 = 1/sqrt(2): floor {:+.9}, minimizer [{:.3}, {:.9}]",
        at_root.value, at_root.minimizer[0], at_root.minimizer[1]
    );
    Ok(())
}
