use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {parts:?} is not 2-regular: part {repeated} occurs more than once")]
    NotRegular { parts: Vec<u32>, repeated: u32 },

    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("box ({row}, {col}) does not lie in the diagram")]
    BoxOutOfDiagram { row: u32, col: u32 },

    #[error("charge {0} is not in {{0, 1}}")]
    InvalidCharge(u8),

    #[error("expected charge {expected}, got {found}")]
    ChargeMismatch { expected: u8, found: u8 },

    #[error("invalid LS path data: {0}")]
    InvalidPath(String),

    #[error("time {0} lies outside [0, 1]")]
    TimeOutOfRange(String),

    #[error("p = {p} is not a minimal double-coset index for {lambda} (needs p = 0 or p {parity})")]
    InvalidKkSpec {
        lambda: String,
        p: u32,
        parity: &'static str,
    },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
