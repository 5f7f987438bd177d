//! Multi-hash proof-of-work consensus analysis.
//!
//! A blockchain where links can be formed by several different hash types
//! assigns each type a score constant, and miners follow the
//! highest-chain-score fork-choice rule. This crate models that protocol's
//! security: block arrivals are Poisson processes parameterized by
//! per-type blockrates, the network delays every honest block by up to Δ
//! seconds, and the protocol resists a private-mining attack exactly when
//! the adversary's score growth rate stays below the honest fully-delayed
//! rate.
//!
//! Modules:
//!
//! * [`model`]: block types, blockrate configurations, the scored block
//!   tree and its fork-choice query.
//! * [`arrivals`]: seeded multi-type Poisson traces with a textual
//!   fixture format.
//! * [`chainsim`]: fully-delayed chain construction and Monte Carlo
//!   growth-rate estimation.
//! * [`oracles`]: the interval-deletion and small-block-increase
//!   processes bracketing the growth rate per trace.
//! * [`bounds`]: closed-form lower/upper growth-rate bounds and the
//!   adversary rate.
//! * [`security`]: secure/insecure classification, private-mining attack
//!   races, and hardware-backdoor tail probabilities.
//! * [`economics`]: linear cost-per-hash attack costs, score and
//!   difficulty setting rules, minimum-fraction difficulty adjustment.

pub mod arrivals;
pub mod bounds;
pub mod chainsim;
pub mod economics;
mod error;
pub mod model;
pub mod oracles;
mod rng;
pub mod security;

pub use error::{Error, Result};
pub use model::{Block, BlockId, BlockTree, BlockTypeSpec, BlockrateConfiguration, HashResourceSpec, GENESIS};
