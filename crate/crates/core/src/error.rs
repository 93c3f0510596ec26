use crate::game::GameId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A stop was requested for a non-member whose relevant option set is
    /// empty. Cannot happen for positions built through [`crate::GameStore`].
    #[error("position {0} has no options on the side its stop recursion needs")]
    Malformed(GameId),
    #[error("no witness found with denominator up to 2^{max_exponent}")]
    SearchExhausted { max_exponent: u32 },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("set is not closed under options: {missing} is an option of {member}")]
    NotClosed { member: GameId, missing: GameId },
    #[error("partition is inconsistent at {0}")]
    InvalidPartition(GameId),
    #[error("invalid state: {0}")]
    InvalidState(&'static str),
    #[error("enumeration needs about {estimate} states, budget is {budget}")]
    BoundsTooLarge { estimate: u64, budget: u64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
