//! Scalar linear index coding over small finite fields.
//!
//! The crate builds the digraph family `H_k^q` whose vertices are pairs of
//! normal vectors `(v, w)` over `F_q^k` with `<v, w> != 0`, and decides
//! `lind_q(G) <= k` for a side-information digraph `G` two ways:
//!
//! * [`lind::minrank`] searches fitting matrices through an enumeration of
//!   subspaces of `F_q^m`;
//! * [`lind::lind_via_hom`] looks for a homomorphism from the complement of
//!   `G` into the complement of `H_k^q`.
//!
//! On top of that sit the structural facts about `H_k^q` (vertex
//! transitivity, the first-component colouring of the complement, large
//! independent and `l`-colourable sets) in [`hkq`], and the lower bounds on
//! `lind_q` in [`bounds`].
//!
//! Everything here is exact. Searches that can blow up carry explicit size
//! caps and fail with [`Error::SizeLimitExceeded`] instead of guessing.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod digraph;
mod error;
pub mod gf;
pub mod hkq;
pub mod hom;
pub mod lind;

pub use digraph::{Coloring, Digraph};
pub use error::{Error, Result};
pub use gf::{FVector, Fe, FiniteField, Matrix};
pub use hkq::HkqGraph;
pub use hom::HomWitness;
