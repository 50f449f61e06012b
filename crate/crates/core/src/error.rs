use num_bigint::BigInt;
use thiserror::Error;

use crate::base::K0Class;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a unit in the numerical K0 ring (rank must be +1 or -1)")]
    NotAUnit(K0Class),

    #[error("constant coefficient {0} is not a unit, the series cannot be inverted")]
    NonUnitConstantTerm(K0Class),

    #[error("polynomial has a term of negative exponent {0}")]
    NegativeExponent(i64),

    #[error("rank constraint violated: {what} has rank {found}, expected {expected}")]
    RankConstraintViolation {
        what: String,
        expected: BigInt,
        found: BigInt,
    },

    #[error("class {0} has nonzero degree but the base is a point")]
    DegreeOnPoint(K0Class),

    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),

    #[error("relation {0}")]
    InvalidRelation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
