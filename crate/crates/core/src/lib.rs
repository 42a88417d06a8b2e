//! Exact enumeration of restricted lattice walks.
//!
//! Each dimension of a walk is constrained by one of five classes written
//! `a`..`e` (excursion, bridge, meander, one-way, free); a walk type is a
//! multiset of those letters. Counts come from two independent routes, a
//! memoized state-space oracle ([`oracle`]) and a general summation formula
//! ([`closedforms`]), and are cross-checked against the golden tables in
//! [`catalog`].

pub mod bijections;
pub mod catalog;
pub mod closedforms;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod walks;

pub use error::{Error, Result};
pub use exactmath::Natural;
pub use oracle::Guards;
pub use walks::{Walk, WalkType};
