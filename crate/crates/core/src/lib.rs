//! Exact combinatorics of string modules on the ∞-gon and of their stable
//! category, with a brute-force linear-algebra oracle to check them against.

pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod par;
pub mod rep;
pub mod stable;
pub mod verify;
pub mod zgon;

pub use error::{Error, Result};
pub use rep::{HomReport, Interval};
pub use stable::Arc;
pub use zgon::{GonConfig, Point};
