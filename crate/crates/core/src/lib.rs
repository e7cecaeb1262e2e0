//! Exact base-10 arithmetic for Ball's magic numbers and reverse divisors.
//!
//! A Ball number comes from one round of "subtract the reverse, then add the
//! reverse of the difference" on a fixed-width digit string. Every such value
//! is `99` times the numeral formed by the borrow bits of the subtraction (the
//! truncated code). The crate provides:
//!
//! - [`digits`]: fixed-width digit strings, reversal and borrow-tracking subtraction
//! - [`ball`]: the reverse/subtract/add procedure, codes of concrete inputs, lifting
//! - [`codes`]: the 0/1 code predicate, censuses, repunits and undulating numbers
//! - [`revdiv`]: reverse divisors (palintuples), permultiples, closed-form families
//! - [`squares`]: integer square roots, repunit gcds and non-square certificates
//!
//! The crate is `no_std` and only needs `alloc`. Parallel sweeps, file formats
//! and the command line live in the companion `ballnum` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod ball;
pub mod codes;
pub mod digits;
mod error;
pub mod revdiv;
pub mod squares;

pub use ball::{ball_number, code_of, lift_ball, verify_ball_identity, BallResult};
pub use codes::{Code, CodeCensus, CodeKind};
pub use digits::{BorrowRecord, DigitString};
pub use error::Error;
pub use revdiv::{Family, RevDivRecord};
pub use squares::{integer_sqrt, SquareReport};

pub use num_bigint::BigUint;

pub type Result<T> = core::result::Result<T, Error>;
