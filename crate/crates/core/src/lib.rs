//! Signal model and angle estimators for a single-antenna FMCW radar aided
//! by a pair of preconfigured (fixed phase profile) metasurfaces.
//!
//! A monostatic single-antenna radar alone measures range only. Placing two
//! passive phase-steered surfaces in the scene adds a second, surface-bounced
//! propagation path whose interference with frequency across the chirp encodes
//! the target bearing. This crate provides:
//!
//! - [`geometry`]: the planar scene, exact path lengths, and the far-field
//!   angular model (with the exact-coordinate oracle used to validate it);
//! - [`array`]: ULA steering vectors, fixed surface phase profiles, and the
//!   frequency-dependent pattern gains (beam squint);
//! - [`wavefield`]: FMCW waveform/dechirp validation and the frequency-domain
//!   two-path echo synthesizer with seeded noise;
//! - [`model`]: estimation-side model vectors, sensing matrices over an angle
//!   grid, and mutual-coherence diagnostics;
//! - [`estimate`]: brute-force angle search and sparse recovery (LASSO, OMP).
//!
//! The crate is `no_std` (requires `alloc`); all file formats, configuration,
//! and parallel experiment drivers live in the companion `msense-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod array;
pub mod estimate;
pub mod geometry;
mod linalg;
pub mod model;
pub mod wavefield;

/// Speed of light in vacuum (m/s), exact by SI definition.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

pub use num_complex::Complex64;
