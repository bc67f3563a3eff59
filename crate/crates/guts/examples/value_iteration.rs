//! Recursive game values by iteration: run the truncated value map from
//! both settlement sides, watch the bracket close, and compare the decay
//! with the closed-form geometric bound.

use guts::recursive::{
    matrix_value, termination_toolkit, value_bracket, MatrixGamePair, StagePayoff,
};

fn main() -> guts::Result<()> {
    // A plain matrix game first: the solver returns value and optimal
    // mixtures for both sides.
    let a = vec![vec![3.0, 1.0], vec![0.0, 2.0]];
    let solution = matrix_value(&a)?;
    println!(
        "matrix game [[3,1],[0,2]]: value {}, row mix {:?}",
        solution.value,
        solution.row_strategy.probs()
    );

    // The simplest recursive game: no immediate payoff, stake multiplier
    // 0.75. Starting from a settlement of -t the n-round value is exactly
    // -(0.75)^n, rising to the true value 0.
    let game = MatrixGamePair::new(vec![vec![0.0]], vec![vec![0.75]], 1.0)?;
    let (lower, upper) = value_bracket(&game, 100, 1e-12)?;
    println!("\n  n   lower value      upper value");
    for n in [0usize, 1, 2, 5, 10, 20, 40] {
        let cell = |t: &guts::recursive::ValueTrace| {
            t.values.get(n).map(|v| format!("{v:+.9e}")).unwrap_or_default()
        };
        println!("{n:>3}   {:<14}   {:<14}", cell(&lower), cell(&upper));
    }
    println!(
        "bracket after {} / {} steps: [{:+.2e}, {:+.2e}]",
        lower.steps(),
        upper.steps(),
        lower.last(),
        upper.last()
    );

    // The termination criterion turns a per-round guarantee (alpha, beta)
    // into the same geometric bound without any iteration.
    let payoff = StagePayoff {
        alpha: 0.0,
        beta: 0.75,
    };
    let check = termination_toolkit(&payoff, 0.0, 1.0, 0.25, 20)?;
    println!(
        "\nstage guarantee alpha 0, beta 0.75: criterion met = {}, 20-round bound {:+.3e}",
        check.criterion_met, check.v_n
    );

    // A 2x2 recursive game with genuinely mixed play at every step.
    let game = MatrixGamePair::new(
        vec![vec![1.0, -1.0], vec![0.0, 2.0]],
        vec![vec![0.5, 0.3], vec![0.2, 0.4]],
        1.0,
    )?;
    let (lower, upper) = value_bracket(&game, 200, 1e-13)?;
    println!(
        "\nmixed 2x2 recursive game: value {:.9} (bracket width {:.1e}, {} steps)",
        lower.last(),
        upper.last() - lower.last(),
        lower.steps()
    );
    Ok(())
}
