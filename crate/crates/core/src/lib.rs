//! Sorting index and companion statistics on the signed permutation groups
//! `S_n`, `B_n` and `D_n`, with exhaustive checks of their factorizations
//! and generating functions.

pub mod algebra;
pub mod bijection;
pub mod error;
pub mod group;
pub mod oracle;
pub mod qpoly;
pub mod sorting;
pub mod stats;
pub mod suite;

pub use error::{Error, Result};
pub use group::{parse_element, Element, GroupTag, Limits, SignedTransposition};
pub use qpoly::BivarPoly;
pub use stats::Stat;
