//! Symmetric opposition: when all opponents hold at one shared threshold,
//! the stage payoff has a closed form for every table size. This prints
//! the optimal shared threshold, the termination margin it leaves, and
//! the payoff geometry around it.

use guts::continuous::{bloc_n, bloc_optimum, bloc_slope, nonbloc_probe};

fn main() -> guts::Result<()> {
    // Per table size: the threshold where the symmetric slope vanishes,
    // the multiplier left on the table there, and the worst-case
    // termination margin alpha - beta + 1 over all opponent replies.
    println!("  n   optimum p*     beta at p*     min margin over replies");
    for n in 2..=8 {
        let p = bloc_optimum(n)?;
        let s = bloc_n(n, p, p)?;
        let mut margin = f64::INFINITY;
        for k in 0..=1000 {
            let pay = bloc_n(n, p, k as f64 / 1000.0)?;
            margin = margin.min(pay.alpha - pay.beta + 1.0);
        }
        println!("  {n}   {p:.9}    {:.9}    {margin:+.6}", s.beta);
    }

    // The slope of alpha along the diagonal, against a left finite
    // difference (the surface has a kink at p1 = p2, so the difference
    // is taken from the linear side). At the optimum the slope vanishes.
    let n = 4;
    let p_star = bloc_optimum(n)?;
    println!("\nn = {n}: optimum {p_star:.9}");
    let h = 1e-8;
    for q in [0.5, 0.7, p_star, 0.95] {
        let exact = bloc_slope(n, q)?;
        let fd = (bloc_n(n, q, q)?.alpha - bloc_n(n, q - h, q)?.alpha) / h;
        println!("slope at p = {q:.4}: exact {exact:+.6}, finite difference {fd:+.6}");
    }

    // If one opponent defects to always-hold while the rest sit slightly
    // above the optimum, the payoff leaves zero at a linear rate.
    for n in [3, 4, 5] {
        let h = 1e-6;
        let slope = nonbloc_probe(n, h)? / h;
        println!(
            "n = {n} defection probe: alpha(h)/h = {slope:+.4} (expected -(n-2) = {})",
            -((n as f64) - 2.0)
        );
    }
    Ok(())
}
