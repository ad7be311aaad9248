use thiserror::Error;

use crate::rep::Interval;
use crate::stable::Arc;
use crate::zgon::Point;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("point {point} lies in copy {}, but the gon has only {m} copies", point.copy)]
    CopyOutOfRange { point: Point, m: u32 },

    #[error("{0} is not a member of the interval set")]
    NotAnInterval(Interval),

    #[error("{0} is not an admissible arc")]
    NotAdmissible(Arc),

    #[error("{0} is projective-injective")]
    Projective(Interval),

    /// An operation was called outside the hypotheses under which its
    /// answer is known.
    #[error("domain error: {0}")]
    Domain(String),

    /// A finite sample chain does not reach far enough for the request.
    #[error("range error: {0}")]
    Range(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
