//! Two-player Guts in closed form: the stage payoff surface, the best
//! response to a fixed opponent threshold, and the fair point at 1/2.

use guts::continuous::{best_response2, payoff2};

fn main() -> guts::Result<()> {
    // Stage payoff (alpha, beta) for a grid of threshold pairs. alpha is
    // the expected one-round return to player 1, beta the expected stake
    // multiplier carried into the next round.
    println!("p1 \\ p2    0.25            0.50            0.75");
    for p1 in [0.25, 0.5, 0.75] {
        let mut row = format!("{p1:.2}    ");
        for p2 in [0.25, 0.5, 0.75] {
            let s = payoff2(p1, p2)?;
            row += &format!("  a={:+.4} b={:.4}", s.alpha + 0.0, s.beta);
        }
        println!("{row}");
    }

    // Against a known threshold the worst case over replies has a closed
    // form. Sweeping it shows the guaranteed floor for player 1.
    println!("\np1      guaranteed alpha   worst reply");
    let mut best = (f64::NEG_INFINITY, 0.0);
    for i in 0..=20 {
        let p1 = i as f64 / 20.0;
        let r = best_response2(p1)?;
        if i % 2 == 0 {
            println!("{p1:.2}    {:+.6}          {:.3}", r.value, r.minimizer[0]);
        }
        if r.value > best.0 {
            best = (r.value, p1);
        }
    }
    println!("coarse maximum {:+.6} at p1 = {:.2}", best.0, best.1);

    // The exact landmarks: holding above the median is fair, always
    // holding concedes an eighth of the stake.
    let fair = best_response2(0.5)?;
    let always_hold = best_response2(0.0)?;
    println!("\nR(0.5) = {:+.12}  (fair)", fair.value);
    println!("R(0.0) = {:+.12}  (= -1/8)", always_hold.value);
    Ok(())
}
