use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {0} out of range (expected {1}..={2})")]
    ArityOutOfRange(u32, u32, u32),
    #[error("truth table has {actual} bits, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid hex digit {0:?}")]
    BadHexDigit(char),
    #[error("hex truth table has {actual} digits, expected {expected}")]
    HexLength { expected: usize, actual: usize },
    #[error("hex truth table sets bits beyond 2^{0}")]
    HexExcessBits(u32),
    #[error("point has {actual} coordinates, expected {expected}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("coordinate value {0} is not +1 or -1")]
    NotSign(i64),
    #[error("coordinate {coordinate} out of range for arity {arity}")]
    CoordinateOutOfRange { coordinate: u32, arity: u32 },
    #[error("subset mask {mask:#x} out of range for arity {arity}")]
    MaskOutOfRange { mask: u64, arity: u32 },
    #[error("unknown function family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: String, reason: String },
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot merge scan results from different configurations")]
    ConfigMismatch,
    /// An internal identity failed. Always a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
