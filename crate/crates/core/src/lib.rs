//! Exact verification of tridiagonal-pair identities.
//!
//! Everything here is generic over an exact [`scalars::Field`]: either the
//! rationals or a prime field. Randomized checks draw their evaluation
//! points from a seeded [`scalars::Sampler`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod appendix;
pub mod params;
pub mod polykit;
pub mod report;
pub mod scalars;
pub mod tdsystem;
pub mod zigzag;
