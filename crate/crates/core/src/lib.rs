//! Exact-rational toolkit for finite Bayesian games and multi-games.
//!
//! The crate represents normal-form, Bayesian, and multi-game payoffs as
//! exact fractions, computes Nash equilibria of small games, performs the
//! type-linear-to-multi-game equivalence transforms, and checks or
//! constructs prior-independent Bayesian Nash equilibria via vertex
//! type-regularity and barycentric witness extension.
//!
//! # Modules
//!
//! - [`game`] - action spaces, normal-form games, mixed strategies
//! - [`simplex`] - simplex points and barycentric grids
//! - [`multi`] - multi-games and generalized multi-games
//! - [`bayes`] - finite Bayesian games, priors, strategy maps, BNE checks
//! - [`solver`] - pure enumeration and 2-agent support enumeration
//! - [`transform`] - type normalization and the equivalence constructions
//! - [`regularity`] - witness search, extension, grid verification, audits
//! - [`staged`] - the two-stage trust double game and the PD builder
//! - [`catalog`] - bundled reference instances

pub mod bayes;
pub mod catalog;
pub mod error;
pub mod game;
pub mod multi;
pub mod rational;
pub mod regularity;
pub mod simplex;
pub mod solver;
pub mod staged;
pub mod transform;

pub use error::GameError;
pub use game::{ActionSpace, MixedStrategy, NormalFormGame};
pub use rational::{format_rational, parse_rational, Rational};
pub use simplex::SimplexPoint;
