//! Exact combinatorics of parahoric Lie-algebra lattices attached to the
//! wonderful compactification of an adjoint group and to its affine
//! (Kac-Moody) analogue.
//!
//! Everything is computed over `i64` and `Ratio<i64>`; no floating point is
//! used anywhere. The crate is organised bottom-up:
//!
//! - [`rootsys`]: root systems from Cartan matrices, Weyl groups, and the
//!   integers `c_α`, `e_α`, `d_α`.
//! - [`apartment`]: the fundamental alcove, its facets, barycenters and the
//!   affine Weyl group action.
//! - [`parahoric`]: root-space shift lattices over the formal disc and the
//!   loop-limit oracle that characterises them.
//! - [`wonderful`]: orbit poset of the compactification, standard curves, and
//!   the toric multidegree model of the Lie-algebra bundle on the
//!   Weyl-chamber chart.
//! - [`affine`]: alcove charts, rotation-twisted parahorics, and finite
//!   windows of the Bruhat-Tits building.
//! - [`covers`]: parabolic weights, local cyclic covers and invariant direct
//!   images at one divisor.
//! - [`verify`]: seeded invariant suites shared by the CLI and the tests.

#![allow(clippy::needless_range_loop)] // matrix code indexes several arrays at once

pub mod affine;
pub mod apartment;
pub mod covers;
mod error;
pub mod parahoric;
pub mod rational;
pub mod rootsys;
pub mod sample;
pub mod verify;
pub mod wonderful;

pub use apartment::{AffineFunctional, AffineWeylElement, DenominatorPair, FacetLabel};
pub use error::{Error, Result};
pub use parahoric::{AffineParahoricLattice, LoopMonomial, ParahoricLattice, SimpleSubset};
pub use rational::{Coweight, Q};
pub use rootsys::{CartanMatrix, RootSystem, RootVector, WeylElement};
pub use wonderful::{CurveDatum, MultidegreeBundle, OrbitPoset};
