//! Exact computations of high-dimensional expansion for finite simplicial complexes over F₂.
//!
//! The crate is organised bottom-up:
//!
//! - [`complex`]: pure simplicial complexes, links and the facet-degree weight function.
//! - [`bits`] and [`f2`]: bit vectors, F₂ row reduction and minimum-weight coset search.
//! - [`cochain`]: coboundary maps, cohomology, norms, expansion constants and systoles.
//! - [`local`]: restriction to links, local minimization and the triangle/thin-thick analysis.
//! - [`spectral`]: graph spectra, exact Cheeger constants, Alon–Milman and Ramanujan checks.
//! - [`generators`]: complete complexes, flag complexes of F_q^m, Cayley clique complexes, fixtures.
//! - [`overlap`]: geometric overlap (maximum point depth) of affine facet images.
//! - [`suite`]: the deterministic verification suite used by the `hdx verify` command.
//!
//! All weights, norms and expansion constants are exact [`Rational`]s; floating point only
//! appears in [`spectral`].

pub mod bits;
pub mod caps;
pub mod cochain;
pub mod complex;
pub mod error;
pub mod f2;
pub mod generators;
pub mod io;
pub mod local;
pub mod overlap;
pub mod rational;
pub mod report;
pub mod spectral;
pub mod suite;

pub use bits::BitVec;
pub use caps::Caps;
pub use cochain::{Cochain, ExpansionReport};

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use f2::{F2Matrix, SubspaceBasis};
pub use rational::Rational;
