//! Exact combinatorics and linear algebra for the level-one Fock space of
//! `sl_infinity` (`p = 0`) and affine `sl_p` (`p >= 2`), and for the
//! operators `X` and `T` acting on tensor and Schur functors.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod crystal;
pub mod error;
pub mod exactla;
pub mod fock;
pub mod functorlab;
pub mod partitions;
pub mod weights;

pub use num_bigint;

pub use error::{Error, Result};
pub use partitions::{Cell, Modulus, Partition, Residue};
