#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("modulus {modulus:?} is not irreducible over GF({p})")]
    Reducible { p: u32, modulus: Vec<u32> },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("search budget of {0} subsets exhausted")]
    BudgetExhausted(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
