//! Library side of the command-line tool: the game-file format, the
//! structured report schema, and the command implementations. The `multigame`
//! binary is a thin argument-parsing shell over this.

pub mod commands;
pub mod gamefile;
pub mod report;
