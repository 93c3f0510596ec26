//! Text formats and the command-line front end over `cgt-diamond-core`.

pub mod commands;
pub mod error;
pub mod expr;
pub mod graph_file;

pub use error::CliError;
pub use expr::{canonical_braces, canonical_expr, elaborate, parse_game, print_value, GameExpr};
pub use graph_file::{parse_graph, print_graph};
