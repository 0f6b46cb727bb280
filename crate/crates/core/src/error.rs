use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("gcd(0, 0) has no Bezout cofactors")]
    BothZero,
    #[error("{x} is not invertible modulo {m} (gcd {gcd})")]
    NotInvertible { x: i64, m: u64, gcd: u64 },
    #[error("modulus {0} is too small")]
    ModulusTooSmall(u64),
    #[error("intermediate value does not fit in 64 bits")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("generators {gens:?} share the common divisor {gcd}")]
    NotCoprime { gens: Vec<u64>, gcd: u64 },
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("no generators given")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfuncError {
    #[error("residues mod {a} cannot all be covered: gcd(a, b, c) = {gcd}")]
    NotCoverable { a: u64, gcd: u64 },
    #[error("reduction to N_a(1, t) needs gcd(a, b) = 1 or gcd(a, c) = 1")]
    NotInvertible(#[from] ArithError),
    #[error("multiples {first} and {second} of t coincide modulo a")]
    DuplicateMultiple { first: u64, second: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Nfunc(#[from] NfuncError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
