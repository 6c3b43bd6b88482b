//! Exact arithmetic in the maximal class 3-groups `B(r; beta, gamma, delta)`
//! of order `3^r`, `r >= 5`, with the automorphism family
//! `theta(e,d,f; v; w)` and the fusion-system candidate analysis built on top.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod automorphism;
pub mod consistency;
pub mod element;
pub mod error;
pub mod fusion;
pub mod group;
pub mod ops;
pub mod params;
pub mod structure;
pub mod table;

pub use automorphism::{AutMap, Automorphism};
pub use element::GroupElement;
pub use error::{Error, Result};
pub use group::{Group, RewriteSystem};
pub use ops::GroupOps;
pub use params::GroupParams;
pub use table::MulTable;
