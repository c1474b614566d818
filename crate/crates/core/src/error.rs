use alloc::string::String;
use core::fmt;

/// Errors raised by the combinatorial and linear-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p = 1` is not a usable modulus.
    DegenerateModulus,
    /// The operation needs `p >= 2` but got `p = 0`.
    NeedsPositiveModulus(&'static str),
    /// Parts were not weakly decreasing.
    InvalidPartition(String),
    /// Box coordinates are 1-indexed.
    InvalidCell {
        row: usize,
        col: usize,
    },
    ResidueOutOfRange {
        value: i64,
        p: u32,
    },
    /// `sigma_lambda` of the empty partition.
    EmptyPartition,
    /// The given cells are not a removable rim hook of the requested length.
    NotARimHook(String),
    /// Two objects carry different moduli.
    MixedModulus {
        left: u32,
        right: u32,
    },
    NotPrime(u64),
    SingularMatrix,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Tensor space exceeds the desk-scale cap.
    CapExceeded {
        dim: usize,
        cap: usize,
    },
    /// The Casimir and Hecke checks need characteristic different from 2.
    CharacteristicTwo,
    InvalidParameters(String),
    /// An operator that should preserve a subspace did not.
    RestrictionFailure(String),
    Parse {
        position: usize,
        message: String,
    },
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateModulus => write!(f, "p = 1 is not a valid modulus (use 0 or p >= 2)"),
            Error::NeedsPositiveModulus(what) => write!(f, "{} requires p >= 2", what),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {}", msg),
            Error::InvalidCell { row, col } => {
                write!(f, "invalid box ({}, {}): rows and columns are 1-indexed", row, col)
            }
            Error::ResidueOutOfRange { value, p } => {
                write!(f, "residue {} out of range for p = {}", value, p)
            }
            Error::EmptyPartition => write!(f, "operation undefined on the empty partition"),
            Error::NotARimHook(msg) => write!(f, "not a removable rim hook: {}", msg),
            Error::MixedModulus { left, right } => {
                write!(f, "mixed moduli: p = {} vs p = {}", left, right)
            }
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
            Error::CapExceeded { dim, cap } => {
                write!(f, "tensor space of dimension {} exceeds the cap of {}", dim, cap)
            }
            Error::CharacteristicTwo => {
                write!(f, "characteristic 2 is excluded (pass allow-char2 to run anyway)")
            }
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {}", msg),
            Error::RestrictionFailure(msg) => write!(f, "restriction failure: {}", msg),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {}: {}", position, message)
            }
            Error::Internal(msg) => write!(f, "internal error: {}", msg),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
