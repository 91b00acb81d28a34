use crate::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("pi powers differ ({0} vs {1})")]
    PiPowerMismatch(u32, u32),
    #[error("cross-check {routes} disagrees at n = {n}: {lhs} vs {rhs}")]
    CrossCheckMismatch {
        routes: String,
        n: usize,
        lhs: Box<Rational>,
        rhs: Box<Rational>,
    },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("polynomial is not homogeneous of weight {0}")]
    NotHomogeneous(u32),
    #[error("basis matrix is singular")]
    SingularSystem,
    #[error("decomposition residual mismatch at q^{0}")]
    ResidualMismatch(usize),
    #[error("quasi-modular input (contains A or E2) cannot be decomposed in the modular basis")]
    QuasiModular,
    #[error("series order {have} too small, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("recursion constant alpha for E*_{{2m}} is not positive at m = {0}")]
    NonPositiveAlpha(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
    #[error("unknown series or table `{0}`")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
