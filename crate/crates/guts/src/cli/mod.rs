//! Command-line front end: every subcommand is a thin wrapper over one
//! library call, emitting a deterministic JSON [`RunReport`] (and CSV
//! tables where a command sweeps a grid).
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid input,
//! 3 unsupported configuration.

mod report;
mod verify;

pub use report::RunReport;
pub use verify::Check;

use crate::continuous::{
    best_response2, best_response3, bloc_n, bloc_optimum, coalition, mixed_stage_payoff,
    stage_payoff, weenie_bloc, weenie_optimum,
};
use crate::discrete::{
    hand_order, optimal_1card, optimal_2card, payoff_1card, s_discrepancy_rows, Card,
};
use crate::error::{input, unsupported, Error, Result};
use crate::oracle::{
    estimate_stage_payoff, estimate_total_return, quadrature_alpha, HandModel,
    RecursiveSimConfig, RoundRules, ThresholdProfile,
};
use crate::recursive::{value_bracket, value_map_iterate, Direction, MatrixGamePair};
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{fmt9, parse_sweep, write_csv};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "guts",
    version,
    about = "Game-theoretic engine for Guts poker",
    disable_help_subcommand = true
)]
struct Cli {
    /// Write the JSON report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate the truncated value map of a recursive matrix game.
    Value(ValueArgs),
    /// Exact one-round payoff for a continuous threshold profile.
    Payoff(PayoffArgs),
    /// Worst-case opponent reply to a fixed player-1 threshold.
    BestResponse(BestResponseArgs),
    /// Stage payoff against a symmetric opponent bloc.
    Bloc(BlocArgs),
    /// Two-atom opponent coalition and its payoff sweep over player 1.
    Coalition(CoalitionArgs),
    /// Seeded Monte-Carlo estimate of stage payoffs or total returns.
    Simulate(SimulateArgs),
    /// Exact analysis of Guts dealt from a real deck.
    Discrete(DiscreteArgs),
    /// Run the self-check suite and print a pass/fail table.
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Lower,
    Upper,
    Both,
}

#[derive(Args)]
struct ValueArgs {
    /// JSON game file: {"A": [[...]], "B": [[...]], "t": 1.0}.
    #[arg(long, value_name = "FILE")]
    game: PathBuf,
    /// Truncation side to iterate from (-t, +t, or both).
    #[arg(long, value_enum, default_value_t = DirectionArg::Lower)]
    direction: DirectionArg,
    /// Maximum number of iterations.
    #[arg(long, default_value_t = 10_000)]
    n_max: usize,
    /// Stop once a step moves less than this.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Write the iteration trace as CSV to FILE.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvaluatorArg {
    /// Closed forms, falling back to quadrature where none applies.
    Closed,
    /// Force the quadrature evaluator (at most 6 players).
    Quadrature,
}

#[derive(Args)]
struct PayoffArgs {
    /// Number of players at the table.
    #[arg(long)]
    players: usize,
    /// Comma-separated hold thresholds, one per player.
    #[arg(long)]
    profile: String,
    #[arg(long, value_enum, default_value_t = EvaluatorArg::Closed)]
    evaluator: EvaluatorArg,
}

#[derive(Args)]
struct BestResponseArgs {
    /// Number of players (closed forms cover 2 and 3).
    #[arg(long)]
    players: usize,
    /// Player 1's hold threshold.
    #[arg(long)]
    p1: f64,
}

#[derive(Args)]
struct BlocArgs {
    /// Number of players at the table.
    #[arg(long)]
    n: usize,
    /// Player 1's hold threshold.
    #[arg(long)]
    p1: f64,
    /// Common threshold of the opponent bloc.
    #[arg(long)]
    p2: f64,
    /// Apply the Weenie rule (all-fold rounds fine the best hand).
    #[arg(long)]
    weenie: bool,
}

#[derive(Args)]
struct CoalitionArgs {
    /// Number of players at the table.
    #[arg(long)]
    n: usize,
    /// Distance below the symmetric optimum for the main atom.
    #[arg(long)]
    eps: f64,
    /// Distance above the optimum for the spoiler atom's bloc.
    #[arg(long)]
    delta: f64,
    /// Spoiler weight coefficient: the spoiler atom has weight C*eps^2.
    #[arg(long = "C")]
    big_c: f64,
    /// Player-1 threshold grid LO:HI:STEP (half-open at HI unless HI
    /// lands on the grid).
    #[arg(long)]
    sweep: String,
    /// Write the sweep as CSV rows p1,alpha,beta to FILE.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Number of players at the table.
    #[arg(long)]
    players: usize,
    /// Comma-separated thresholds (or hold-min hand indices with
    /// --discrete), one per player.
    #[arg(long)]
    profile: String,
    /// Number of simulated rounds (stage mode) or plays (total mode).
    #[arg(long)]
    samples: u64,
    /// Seed for the counter-based random streams.
    #[arg(long)]
    seed: u64,
    /// Apply the Weenie rule.
    #[arg(long)]
    weenie: bool,
    /// Estimate the total compounded return of repeated play instead of
    /// one round's payoff.
    #[arg(long)]
    total: bool,
    /// Round budget per play before truncation (total mode).
    #[arg(long, requires = "total")]
    max_rounds: Option<u32>,
    /// Settlement charged per unit stake on truncated plays (total mode).
    #[arg(long, requires = "total")]
    t: Option<f64>,
    /// Deal hands from a deck without replacement.
    #[arg(long)]
    discrete: bool,
    /// Cards per hand in discrete mode: 1 or 2.
    #[arg(long, requires = "discrete")]
    cards: Option<u8>,
    /// Deck size in discrete mode (two-card play requires 52).
    #[arg(long, requires = "discrete")]
    deck_size: Option<u32>,
}

#[derive(Args)]
struct DiscreteArgs {
    #[command(subcommand)]
    command: DiscreteCommand,
}

#[derive(Subcommand)]
enum DiscreteCommand {
    /// Find the optimal hold cutoff by exact scan, with certificates.
    Solve(SolveArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Cards per hand: 1 or 2.
    #[arg(long)]
    cards: u8,
    /// Deck size for the one-card game (default 52).
    #[arg(long)]
    deck_size: Option<u32>,
    /// Two-card mode: write the full shared-count log as CSV rows
    /// i1,i2,S_oracle,S_closed,case to FILE.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

/// Parses the process arguments, runs one subcommand, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 2;
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Input(_) => 2,
                Error::Unsupported(_) => 3,
                Error::NoConvergence { .. } => 1,
            }
        }
    }
}

/// Applies GUTS_THREADS to the global thread pool. Thread count affects
/// speed only; every parallel reduction in the library is
/// schedule-independent.
fn configure_threads() -> std::result::Result<(), String> {
    let Some(raw) = std::env::var_os("GUTS_THREADS") else {
        return Ok(());
    };
    let text = raw.to_string_lossy();
    match text.trim().parse::<usize>() {
        Ok(k) if k >= 1 => {
            // A second initialization (tests, repeated calls) keeps the
            // existing pool; results do not depend on the pool size.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
            Ok(())
        }
        _ => Err(format!(
            "GUTS_THREADS must be a positive integer, got {text:?}"
        )),
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    if matches!(cli.command, Command::Verify) {
        return run_verify(cli.out.as_deref());
    }
    let (name, parameters, results) = match &cli.command {
        Command::Value(args) => run_value(args)?,
        Command::Payoff(args) => run_payoff(args)?,
        Command::BestResponse(args) => run_best_response(args)?,
        Command::Bloc(args) => run_bloc(args)?,
        Command::Coalition(args) => run_coalition(args)?,
        Command::Simulate(args) => run_simulate(args)?,
        Command::Discrete(args) => match &args.command {
            DiscreteCommand::Solve(args) => run_solve(args)?,
        },
        Command::Verify => unreachable!("handled above"),
    };
    let text = RunReport::new(name, parameters, results).render();
    match &cli.out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| input(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(0)
}

type CommandOutput = (&'static str, Value, Value);

fn run_value(args: &ValueArgs) -> Result<CommandOutput> {
    let text = fs::read_to_string(&args.game)
        .map_err(|e| input(format!("cannot read {}: {e}", args.game.display())))?;
    let game: MatrixGamePair = serde_json::from_str(&text)
        .map_err(|e| input(format!("{} is not a valid game file: {e}", args.game.display())))?;
    game.validate()?;
    let direction_name = match args.direction {
        DirectionArg::Lower => "lower",
        DirectionArg::Upper => "upper",
        DirectionArg::Both => "both",
    };
    let parameters = json!({
        "game": args.game.display().to_string(),
        "direction": direction_name,
        "n_max": args.n_max,
        "tol": args.tol,
    });
    let results = match args.direction {
        DirectionArg::Both => {
            let (lower, upper) = value_bracket(&game, args.n_max, args.tol)?;
            if let Some(path) = &args.csv {
                let rows = (0..lower.values.len().max(upper.values.len()))
                    .map(|n| {
                        let cell = |t: &crate::recursive::ValueTrace| {
                            t.values.get(n).map(|&v| fmt9(v)).unwrap_or_default()
                        };
                        format!("{n},{},{}", cell(&lower), cell(&upper))
                    })
                    .collect::<Vec<_>>();
                write_csv(path, "n,V_lower,V_upper", &rows)?;
            }
            json!({
                "contractive": game.max_stake() < 1.0,
                "width": upper.last() - lower.last(),
                "lower": serde_json::to_value(&lower).expect("trace serializes"),
                "upper": serde_json::to_value(&upper).expect("trace serializes"),
            })
        }
        single => {
            let direction = if single == DirectionArg::Lower {
                Direction::Lower
            } else {
                Direction::Upper
            };
            let trace = value_map_iterate(&game, direction, args.n_max, args.tol)?;
            if let Some(path) = &args.csv {
                let rows = trace
                    .values
                    .iter()
                    .enumerate()
                    .map(|(n, &v)| format!("{n},{}", fmt9(v)))
                    .collect::<Vec<_>>();
                write_csv(path, "n,V_n", &rows)?;
            }
            let mut results = serde_json::to_value(&trace).expect("trace serializes");
            let map = results.as_object_mut().expect("trace is an object");
            map.insert("limit".to_string(), json!(trace.last()));
            map.insert("steps".to_string(), json!(trace.steps()));
            results
        }
    };
    Ok(("value", parameters, results))
}

fn run_payoff(args: &PayoffArgs) -> Result<CommandOutput> {
    let thresholds = parse_f64_list(&args.profile)?;
    if thresholds.len() != args.players {
        return Err(input(format!(
            "profile has {} thresholds for {} players",
            thresholds.len(),
            args.players
        )));
    }
    let pay = match args.evaluator {
        EvaluatorArg::Closed => stage_payoff(args.players, thresholds[0], &thresholds[1..])?,
        EvaluatorArg::Quadrature => quadrature_alpha(
            args.players,
            &ThresholdProfile::continuous(thresholds.clone())?,
        )?,
    };
    let parameters = json!({
        "players": args.players,
        "profile": thresholds,
        "evaluator": match args.evaluator {
            EvaluatorArg::Closed => "closed",
            EvaluatorArg::Quadrature => "quadrature",
        },
    });
    Ok(("payoff", parameters, json!({"alpha": pay.alpha, "beta": pay.beta})))
}

fn run_best_response(args: &BestResponseArgs) -> Result<CommandOutput> {
    let report = match args.players {
        2 => best_response2(args.p1)?,
        3 => best_response3(args.p1)?,
        n => {
            return Err(unsupported(format!(
                "closed-form best responses cover 2 or 3 players, got {n}"
            )))
        }
    };
    let parameters = json!({"players": args.players, "p1": args.p1});
    Ok((
        "best-response",
        parameters,
        serde_json::to_value(&report).expect("report serializes"),
    ))
}

fn run_bloc(args: &BlocArgs) -> Result<CommandOutput> {
    let (pay, optimum) = if args.weenie {
        (weenie_bloc(args.n, args.p1, args.p2)?, weenie_optimum(args.n)?)
    } else {
        (bloc_n(args.n, args.p1, args.p2)?, bloc_optimum(args.n)?)
    };
    let parameters = json!({
        "n": args.n,
        "p1": args.p1,
        "p2": args.p2,
        "weenie": args.weenie,
    });
    let results = json!({
        "alpha": pay.alpha,
        "beta": pay.beta,
        "optimum": optimum,
    });
    Ok(("bloc", parameters, results))
}

fn run_coalition(args: &CoalitionArgs) -> Result<CommandOutput> {
    let mix = coalition(args.n, args.eps, args.delta, args.big_c)?;
    let grid = parse_sweep(&args.sweep)?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_alpha = f64::NEG_INFINITY;
    let mut argmax_p1 = f64::NAN;
    let mut max_beta = f64::NEG_INFINITY;
    for &p1 in &grid {
        let pay = mixed_stage_payoff(args.n, &mix, p1)?;
        if pay.alpha > max_alpha {
            max_alpha = pay.alpha;
            argmax_p1 = p1;
        }
        max_beta = max_beta.max(pay.beta);
        rows.push(format!(
            "{},{},{}",
            fmt9(p1),
            fmt9(pay.alpha),
            fmt9(pay.beta)
        ));
    }
    if let Some(path) = &args.csv {
        write_csv(path, "p1,alpha,beta", &rows)?;
    }
    let parameters = json!({
        "n": args.n,
        "eps": args.eps,
        "delta": args.delta,
        "C": args.big_c,
        "sweep": args.sweep,
    });
    let results = json!({
        "coalition": serde_json::to_value(&mix).expect("mixture serializes"),
        "points": grid.len(),
        "max_alpha": max_alpha,
        "argmax_p1": argmax_p1,
        "max_beta": max_beta,
        "all_alpha_negative": max_alpha < 0.0,
        "beta_below_one": max_beta < 1.0,
    });
    Ok(("coalition", parameters, results))
}

fn run_simulate(args: &SimulateArgs) -> Result<CommandOutput> {
    let mut parameters = json!({
        "players": args.players,
        "samples": args.samples,
        "seed": args.seed,
        "weenie": args.weenie,
        "total": args.total,
        "discrete": args.discrete,
    });
    let params = parameters.as_object_mut().expect("object literal");

    let (rules, profile) = if args.discrete {
        let cards = args
            .cards
            .ok_or_else(|| input("--discrete needs --cards 1 or --cards 2"))?;
        let deck_size = args.deck_size.unwrap_or(52);
        let cutoffs = parse_u32_list(&args.profile)?;
        if cutoffs.len() != args.players {
            return Err(input(format!(
                "profile has {} cutoffs for {} players",
                cutoffs.len(),
                args.players
            )));
        }
        params.insert("cards".to_string(), json!(cards));
        params.insert("deck_size".to_string(), json!(deck_size));
        params.insert("profile".to_string(), json!(cutoffs));
        let model = HandModel::Discrete {
            deck_size,
            cards_per_hand: cards,
        };
        (
            RoundRules::new(args.players, args.weenie, model)?,
            ThresholdProfile::discrete(cutoffs)?,
        )
    } else {
        let thresholds = parse_f64_list(&args.profile)?;
        if thresholds.len() != args.players {
            return Err(input(format!(
                "profile has {} thresholds for {} players",
                thresholds.len(),
                args.players
            )));
        }
        params.insert("profile".to_string(), json!(thresholds));
        (
            RoundRules::new(args.players, args.weenie, HandModel::Continuous)?,
            ThresholdProfile::continuous(thresholds)?,
        )
    };

    let results = if args.total {
        let config = RecursiveSimConfig {
            max_rounds: args.max_rounds.unwrap_or(64),
            t: args.t.unwrap_or(1.0),
            seed: args.seed,
        };
        params.insert("max_rounds".to_string(), json!(config.max_rounds));
        params.insert("t".to_string(), json!(config.t));
        let total = estimate_total_return(&rules, &profile, &config, args.samples)?;
        json!({
            "total_return": serde_json::to_value(total.estimate).expect("estimate serializes"),
            "truncated_fraction": total.truncated_fraction,
        })
    } else {
        let (alpha, beta) = estimate_stage_payoff(&rules, &profile, args.samples, args.seed)?;
        json!({
            "alpha": serde_json::to_value(alpha).expect("estimate serializes"),
            "beta": serde_json::to_value(beta).expect("estimate serializes"),
        })
    };
    Ok(("simulate", parameters, results))
}

fn run_solve(args: &SolveArgs) -> Result<CommandOutput> {
    match args.cards {
        1 => {
            let n = args.deck_size.unwrap_or(52);
            let best = optimal_1card(n)?;
            let lo = best[0].saturating_sub(3).max(1);
            let hi = (best[best.len() - 1] + 3).min(n);
            let mut table = Vec::new();
            for i in lo..=hi {
                let mut min_alpha = f64::INFINITY;
                let mut worst_reply = 0;
                for j in 1..=n {
                    let alpha = payoff_1card(i, j, n)?.alpha;
                    if alpha < min_alpha {
                        min_alpha = alpha;
                        worst_reply = j;
                    }
                }
                table.push(json!({
                    "index": i,
                    "card": card_name(i, n),
                    "min_alpha": min_alpha,
                    "worst_reply": worst_reply,
                    "saddle_ok": min_alpha >= 0.0,
                }));
            }
            let parameters = json!({"cards": 1, "deck_size": n});
            let results = json!({
                "deck_size": n,
                "optimal_index": best[0],
                "optimal_indices": best,
                "hand_name": card_name(best[0], n),
                "conditions_table": table,
            });
            Ok(("discrete solve", parameters, results))
        }
        2 => {
            if let Some(d) = args.deck_size {
                if d != 52 {
                    return Err(unsupported(format!(
                        "two-card analysis is fixed to the standard 52-card deck, got {d}"
                    )));
                }
            }
            let order = hand_order();
            let solution = optimal_2card(order);
            let log = s_discrepancy_rows(order);
            if let Some(path) = &args.csv {
                let rows = log
                    .rows
                    .iter()
                    .map(|r| format!("{},{},{},{},{}", r.i1, r.i2, r.s_oracle, r.s_closed, r.case))
                    .collect::<Vec<_>>();
                write_csv(path, "i1,i2,S_oracle,S_closed,case", &rows)?;
            }
            let name_of = |set: &[u32]| set.first().map(|&i| order.hand(i).name());
            let parameters = json!({"cards": 2, "deck_size": 52});
            let results = json!({
                "optimal_index": solution.optimal.first(),
                "optimal_indices": solution.optimal,
                "hand_name": name_of(&solution.optimal),
                "proxy_index": solution.proxy_optimal.first(),
                "proxy_hand_name": name_of(&solution.proxy_optimal),
                "finding": solution.finding,
                "window": solution.window,
                "conditions_table": serde_json::to_value(&solution.rows)
                    .expect("rows serialize"),
                "shared_count_log": {
                    "rows": log.rows.len(),
                    "case_totals": log.case_totals,
                    "case_matches": log.case_matches,
                    "alternate_constant_matches": log.case1_matches_with_alternate_constant,
                },
            });
            Ok(("discrete solve", parameters, results))
        }
        c => Err(input(format!("cards must be 1 or 2, got {c}"))),
    }
}

fn card_name(index: u32, deck_size: u32) -> Option<String> {
    // Card names only exist on the standard deck.
    (deck_size == 52).then(|| Card::from_index(index).expect("index <= 52").name())
}

fn run_verify(out: Option<&Path>) -> Result<i32> {
    let checks = verify::run_all();
    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    for c in &checks {
        println!(
            "{}  {} ({})",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    println!("{passed} passed, {failed} failed");
    if let Some(path) = out {
        let results = json!({
            "checks": serde_json::to_value(&checks).expect("checks serialize"),
            "passed": passed,
            "failed": failed,
        });
        let text = RunReport::new("verify", json!({}), results).render();
        fs::write(path, text + "\n")
            .map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| input(format!("profile entry {tok:?} is not a number")))
        })
        .collect()
}

fn parse_u32_list(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| input(format!("profile entry {tok:?} is not a hand index")))
        })
        .collect()
}
