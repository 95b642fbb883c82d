use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("gcd({n}, {q}) != 1: length must be coprime to the field order")]
    NotCoprime { n: u64, q: u64 },

    #[error("inconsistent factor data: {0}")]
    Inconsistent(String),

    #[error("no Euclidean self-dual left dihedral code exists when q is odd")]
    NoSelfDualExists,

    #[error("invalid factor index: {0}")]
    InvalidIndex(String),

    #[error("codeword budget exceeded: need {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
