use thiserror::Error;

use crate::group::GroupTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid token {0:?}: expected a nonzero integer")]
    BadToken(String),

    #[error("empty word")]
    EmptyWord,

    #[error("absolute value {0} appears more than once")]
    RepeatedValue(u32),

    #[error("entry {value} out of range: absolute values must be 1..={n}")]
    OutOfRange { value: i64, n: usize },

    #[error("negative entry {0} is not allowed in type A")]
    NegativeInTypeA(i32),

    #[error("type D word has {0} negative entries; the count must be even")]
    OddNegatives(usize),

    #[error("operands differ: {left_tag}{left_n} vs {right_tag}{right_n}")]
    Mismatch {
        left_tag: GroupTag,
        left_n: usize,
        right_tag: GroupTag,
        right_n: usize,
    },

    #[error("t({i},{j}) is not a valid transposition in type {tag} with n = {n}")]
    BadTransposition {
        i: i32,
        j: i32,
        tag: GroupTag,
        n: usize,
    },

    #[error("rank n = {n} is not supported for type {tag}")]
    BadRank { tag: GroupTag, n: usize },

    #[error("{what} needs {needed} elements, above the limit of {limit}")]
    CapExceeded {
        what: String,
        needed: u128,
        limit: u128,
    },

    #[error("statistic {stat} is not defined for type {tag}")]
    StatUnsupported { stat: &'static str, tag: GroupTag },

    #[error("unknown statistic {0:?}")]
    UnknownStat(String),

    #[error("factor index {index} is out of range for type {tag} with n = {n}")]
    BadFactorIndex {
        tag: GroupTag,
        n: usize,
        index: usize,
    },

    #[error("empty exponent list")]
    EmptyExponents,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
