//! Game-theoretic engine for Guts poker.
//!
//! Guts is a multi-round gambling game: each player antes, receives a hand,
//! and simultaneously declares "hold" or "drop". With two or more holders the
//! best hand takes the pot and every losing holder re-funds it, so the stakes
//! compound from round to round. This crate models that structure at three
//! levels:
//!
//! * [`recursive`] treats the whole game as a fixed-point problem. A single
//!   round is summarized by a payoff matrix `A` and a stakes matrix `B`; the
//!   full game value solves `V = Value(A + B V)`, approached from below and
//!   above by iterating on terminated games.
//! * [`continuous`] gives closed-form stage payoffs `alpha` (expected round
//!   winnings) and `beta` (expected continuation stakes) for threshold
//!   strategies over uniform hands: exact two- and three-player formulas,
//!   the symmetric-opponent "bloc" reduction for any table size, best
//!   responses, mixed (coalition-beating) profiles, and the Weenie variant.
//! * [`discrete`] replays the same analysis on real decks, where hands are
//!   dealt without replacement: the 52-card single-card game and the
//!   1326-hand two-card game with exact card-removal corrections.
//!
//! [`oracle`] sits apart from the closed forms: a simulation and quadrature
//! engine that re-derives every stage payoff from nothing but the table
//! rules, used to validate the algebra and to estimate what it cannot reach.
//!
//! The [`cli`] module backs the `guts` binary; every subcommand is a thin
//! wrapper over one library call.

pub mod cli;
pub mod continuous;
pub mod discrete;
mod error;
pub mod oracle;
pub mod recursive;

pub use error::{Error, Result};
