//! Exact computation of Grothendieck groups of quantum projective-space
//! bundles over a curve or a point, and of the intersection theory of
//! quantum ruled surfaces.
//!
//! Everything is numerical: a class on the base curve is its
//! `(rank, degree)` pair, and all arithmetic is done with arbitrary-precision
//! integers.

pub mod base;
pub mod bundle;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod ruled;
pub mod series;
pub mod verify;

pub use base::{euler_form_base, BaseSpace, K0Class};
pub use bundle::{BundleClass, GroupStructure, K0Presentation, PnBundleSpec};
pub use error::{Error, Result};
pub use lattice::IntMatrix;
pub use ruled::{IntersectionLattice, IntersectionTable, RuledSurface, SurfaceClass};
pub use series::{
    hilbert_coeff_ruled, hilbert_coeffs_ruled, hilbert_series_pn, series_invert, LaurentPolyK0,
    TruncatedSeriesK0,
};
