//! Exact combinatorics of extended multi-segments for local Arthur packets
//! of `Sp(2n)` and split `SO(2n+1)` over a p-adic field.
//!
//! The layers build on each other:
//!
//! * [`halfint`] and [`segments`]: exact numbers, integer segments and
//!   extended segments with their total order, adjacency and intervals.
//! * [`nv`] and [`sequences`]: the pairwise and sequence-level
//!   non-vanishing criteria, row exchange, orbits and the (P'') form.
//! * [`multisegment`]: cuspidal symbols, Arthur parameters, extended
//!   multi-segments, non-vanishing of `pi(E)` and its character.
//! * [`induction`]: decomposition of unitary induction, reducibility and
//!   signed component counts.
//! * [`unitarity`] and [`glconstraints`]: the Hermitian/unitary decision
//!   procedure and the parity constraint on GL local components.
//! * [`oracle`]: slow, independently written reference implementations.
//! * [`schema`]: JSON documents consumed and produced by the CLI.

pub mod error;
pub mod glconstraints;
pub mod halfint;
pub mod induction;
pub mod multisegment;
pub mod nv;
pub mod oracle;
pub mod schema;
pub mod segments;
pub mod sequences;
pub mod unitarity;

pub use error::{ArthurError, ErrorFamily, Result};
pub use halfint::{Exponent, HalfInt, Sign};
pub use segments::{EsegInterval, ExtZSeg, VExtZSeg, ZSegment};
pub use sequences::{ZSeq, DEFAULT_CAP};
