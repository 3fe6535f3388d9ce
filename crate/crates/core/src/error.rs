use thiserror::Error;

use crate::shapes::{Cell, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed {what} literal at token {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("parts {0:?} are not weakly decreasing positive integers")]
    NotPartition(Vec<usize>),

    #[error("partition {0} does not have distinct parts")]
    NotStrict(Partition),

    #[error("invalid ambient space: {0}")]
    InvalidSpace(String),

    #[error("partition {partition} is not in the basis of {space}")]
    OutsideAmbient { partition: Partition, space: String },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("{outer}/{inner} is not a horizontal strip")]
    NotHorizontalStrip { inner: Partition, outer: Partition },

    #[error("skew shape {outer}/{inner} is empty")]
    EmptySkew { inner: Partition, outer: Partition },

    #[error("cell {0:?} is not an inner corner")]
    NotInnerCorner(Cell),

    #[error("cell {0:?} is not an outer corner")]
    NotOuterCorner(Cell),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not a Littlewood-Richardson tableau")]
    NotLr,

    #[error("tableau is not a Littlewood-Richardson-Stembridge tableau")]
    NotLrs,

    #[error("invalid hole strip: {0}")]
    InvalidHoleStrip(String),

    #[error("ring elements live in different spaces ({0} and {1})")]
    MixedSpaces(String, String),

    #[error("special class index {p} out of range 1..={max}")]
    PieriOutOfRange { p: usize, max: usize },

    #[error("coefficient arithmetic overflowed")]
    Overflow,

    #[error("type C constant 2^{exponent} * {f} is not an integer")]
    NonIntegral { exponent: i64, f: u64 },
}
