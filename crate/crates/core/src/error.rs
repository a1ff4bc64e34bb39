use thiserror::Error;

use crate::transducer::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed transducer: {0}")]
    Malformed(#[from] Violation),
    #[error("transducer is not trim")]
    NotTrim,
    #[error("transducer is not minimal")]
    NotMinimal,
    #[error("no terminal state is reachable from the initial state")]
    NoTerminal,
    #[error("state {0} is terminal")]
    TerminalState(u32),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
