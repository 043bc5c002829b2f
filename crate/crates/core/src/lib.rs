//! Exact computation of effective cones of divisors on moduli spaces of
//! semistable sheaves on the projective plane.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! rationals are arbitrary precision and the only irrational numbers that
//! show up (interval endpoints of exceptional slopes and the slope where a
//! character's orthogonal parabola crosses `Δ = 1/2`) are real quadratic
//! irrationals, which are compared exactly.
//!
//! Module map:
//!
//! * [`arith`]: rationals and [`QuadraticNumber`].
//! * [`kgroup`]: Chern characters, Riemann–Roch and the Euler pairing.
//! * [`exceptional`]: exceptional slopes, the dyadic tree, `δ(μ)`.
//! * [`cfrac`]: left-right words and continued fractions of exceptional slopes.
//! * [`cone`]: classification and the effective cone pipeline.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod cfrac;
pub mod cone;
mod error;
pub mod exceptional;
pub mod kgroup;

pub use arith::{sqrt_exact, QuadraticNumber, Rational};
pub use cfrac::{CFWord, LRWord, Letter};
pub use cone::{cone_report, ConeReport};
pub use error::{Error, Result};
pub use exceptional::{DyadicRational, ExceptionalSlope, DEFAULT_MAX_ORDER};
pub use kgroup::{ChernCharacter, SlopeDisc};
