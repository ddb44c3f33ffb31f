//! The membership game on sets: players alternately pick an element of the
//! previous pick, and whoever picks the empty set wins.
//!
//! * [`hf`]: hereditarily finite sets, Ackermann codes, brace notation
//! * [`game`]: winner and winning index of hereditarily finite sets
//! * [`census`]: exact level counts and probability ratios
//! * [`apg`]: finite, possibly non-well-founded sets as pointed graphs
//! * [`model`]: bounded stages of a cumulative construction over a seed
//! * [`verify`]: the check harness

pub mod apg;
pub mod census;
mod error;
pub mod game;
pub mod hf;
pub mod model;
pub mod verify;

pub use apg::{Apg, Outcome};
pub use census::{CensusTable, RatioTable};
pub use error::{Error, Result};
pub use game::{Classification, Player};
pub use hf::{HFSet, SetCode};
pub use model::Model;
