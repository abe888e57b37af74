//! Construction, scheduling and verification of carry-lookahead quantum adders
//! laid out on a 2D nearest-neighbor grid.
//!
//! The crate builds two adder variants (a baseline and an optimized one) from
//! reusable blocks, expands block-level Toffoli gates into adjacent Clifford+T
//! gates, schedules circuits under a parametric cost model and checks the
//! result with a basis-state simulator and a dense statevector simulator.

pub mod adder;
pub mod blocks;
pub mod decompose;
pub mod error;
pub mod ir;
pub mod layout;
pub mod qec;
pub mod schedule;
pub mod sim;

pub use error::{Error, Result};
