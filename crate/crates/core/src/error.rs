//! Error type shared by all modules. Everything here is an *input* error:
//! the functions themselves are total on valid inputs.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid rational literal {literal:?}: {reason}")]
    InvalidRational { literal: String, reason: String },

    #[error("agent index {agent} out of range ({agents} agents)")]
    AgentOutOfRange { agent: usize, agents: usize },

    #[error("action {action} out of range for agent {agent} ({count} actions)")]
    ActionOutOfRange {
        agent: usize,
        action: usize,
        count: usize,
    },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid simplex point: {0}")]
    InvalidSimplexPoint(String),

    #[error("invalid type profile: {0}")]
    InvalidTypeProfile(String),

    #[error("conditional undefined: agent {agent} has zero marginal at type {type_index}")]
    ZeroMarginal { agent: usize, type_index: usize },

    #[error("{0} violated{1}")]
    Precondition(String, String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("not a Nash equilibrium: {0}")]
    NotAnEquilibrium(String),
}

impl GameError {
    /// Named-inequality precondition failure, e.g. `precondition("t > r", "(t=3, r=5)")`.
    pub fn precondition(name: &str, detail: String) -> Self {
        GameError::Precondition(name.to_string(), format!(" {detail}"))
    }
}
