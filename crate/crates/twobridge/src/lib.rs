//! Two-bridge knot minimality toolkit.
//!
//! Decides whether a two-bridge knot b(p, q) is minimal with respect to
//! epimorphisms between knot groups, combining:
//!
//! - Alexander polynomial criteria (irreducibility / divisibility),
//! - symbolic SL(2) character-variety computations via Riley representations
//!   and Chebyshev polynomials of the second kind,
//! - a continued-fraction search for Ohtsuki-Riley-Sakuma epimorphisms onto
//!   smaller two-bridge knots.

pub mod alexander;
pub mod charvar;
pub mod cheb;
pub mod classify;
pub mod contfrac;
pub mod error;
pub mod knot;
pub mod ors;
pub mod poly;

pub use error::{Error, Result};
pub use knot::{Fraction, TwoBridgeKnot};
