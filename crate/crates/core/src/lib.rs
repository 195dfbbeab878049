//! Exact combinatorial activity computations.
//!
//! This crate implements, with exact integer arithmetic throughout:
//!
//! * integral gain graphs `K_n^[a,b]`, their balanced circles, broken
//!   circuits, and no-broken-circuit (NBC) sets ([`gain`], [`nbc`]);
//! * r-covering systems and their activities, activity vectors, and
//!   cardinality vectors ([`covering`]);
//! * colored labeled rooted forests with class predicates and tree
//!   statistics ([`forest`]);
//! * Prüfer-style and consecutive-marking codecs for rooted labeled
//!   trees ([`codec`]);
//! * local binary search trees and their rotation to non-increasing
//!   trees ([`lbs`]);
//! * exact integer polynomials and closed-form region counts ([`poly`]).
//!
//! Everything is desk-scale exhaustive enumeration: families are
//! materialized explicitly and all verifications are exact, so the crate
//! is `no_std` (with `alloc`) and fully deterministic.

#![no_std]

extern crate alloc;

pub mod codec;
pub mod covering;
pub mod forest;
pub mod gain;
pub mod lbs;
pub mod nbc;
pub mod poly;

pub use num_bigint::BigInt;

pub use covering::{ActivityAssignment, ActivityVector, CoveringSystem};
pub use forest::{ClassMode, ColoredForest, ForestClass};
pub use gain::{GainEdge, GainGraph};
pub use lbs::LbsTree;
pub use poly::IntPolynomial;
