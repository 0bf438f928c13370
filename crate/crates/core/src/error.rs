use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("operation is undefined for the empty partition")]
    EmptyPartition,

    #[error("value {value} is outside the domain of {what} (requires {requirement})")]
    Domain {
        what: &'static str,
        value: u64,
        requirement: &'static str,
    },

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("duplicate generator `{0}` inside one alternating set")]
    DuplicateName(String),

    #[error("alternating set `{0}` is referenced but not declared")]
    UnknownSet(char),

    #[error("generator `{0}` has no assigned value")]
    Unassigned(String),

    #[error("generator `{0}` does not occur in the expression")]
    AbsentVariable(String),

    #[error("generator `{var}` occurs with different multiplicities across terms")]
    NonHomogeneous { var: String },

    #[error("fresh name `{0}` collides with an existing generator")]
    NameCollision(String),

    #[error("unknown catalog element `{0}`")]
    UnknownElement(String),

    #[error("bad parameters for {id}: {reason}")]
    BadParams { id: String, reason: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
