//! Recursive zero-sum games and their value iteration.
//!
//! The core objects are a matrix game solver ([`matrix_value`]), the
//! recursive game `(A, B, t)` whose value solves `V = Value(A + B V)`
//! ([`MatrixGamePair`], [`value_map_iterate`]), and the geometric termination
//! bound for strategies with a guaranteed stage payoff
//! ([`termination_toolkit`]).

mod matrix;
mod value_map;

pub use matrix::{duality_gap, expected_payoff, matrix_value, MatrixSolution, MixedStrategyVector};
pub use value_map::{
    value_map_iterate, termination_toolkit, value_bracket, Direction, MatrixGamePair, StagePayoff,
    TerminationCheck, ValueTrace,
};
