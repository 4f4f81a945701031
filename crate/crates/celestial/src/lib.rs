//! Exact computation of singular loci of celestial surfaces.
//!
//! A celestial surface contains at least two circles through a general
//! point. This crate constructs exact biquadratic parametrizations of such
//! surfaces from rational circle data, computes their double-point curves by
//! Groebner elimination over the rationals, and classifies the singular type
//! D1..D5 together with candidate visible types. It also ships a
//! Neron-Severi lattice calculator for del Pezzo class bookkeeping and
//! OBJ/SVG exporters for visual inspection.
//!
//! Everything upstream of `mesh` is exact: the only number type in the
//! symbolic kernel is an arbitrary-precision rational.

pub mod arith;
pub mod classifier;
pub mod elim;
pub mod factor;
pub mod geom;
pub mod lattice;
pub mod mesh;
pub mod poly;
pub mod quadext;

pub use arith::{BigInt, BigRational};
