//! Harmonic weight enumerators and support designs of extremal binary
//! doubly even self-dual (Type II) codes.

pub mod classifier;
pub mod codes;
pub mod error;
pub mod exactnum;
pub mod gleason;
pub mod harmonic_design;
pub mod harmonic_enum;
pub mod vanishing;
pub mod xypoly;

pub use error::{Error, Result};
