//! Counting eigenvalues of linearized wave operators by geometric phase.
//!
//! The number of eigenvalues (with multiplicity) of a linearized
//! reaction-diffusion operator inside a closed contour equals the winding of
//! a loop of analytically chosen eigenvector data, forward-propagated
//! through the system and projected to the unit sphere: the accumulated
//! geometric phase of the projected loop is an integer, and that integer is
//! the eigenvalue count. This crate implements the machinery end to end —
//! exterior-power phase spaces, contour sampling, analytic eigenvector
//! loops, stiff-safe propagation with rescalings, phase estimators — plus an
//! independent cross-check that locates the same count as the winding number
//! of a classical matching determinant.
//!
//! Start with the runnable examples:
//!
//! - `bistable_count` — count the eigenvalues of the bistable pulse inside a
//!   contour by geometric phase, cross-checked against the determinant route.
//! - `degenerate_scaling` — shift a known phase by a scalar gauge loop.
//! - `phase_transition` — watch the phase accumulate along the line and find
//!   where it locks in.
//! - `second_eigenvalue` — isolate the eigenvalue at 3 on its own contour.
//! - `wedge_systems` — exterior-power arithmetic: induced operators,
//!   spectra, pairings.
//! - `evans_crosscheck` — the matching-determinant oracle on its own.
//! - `dirichlet_modes` — count Sturm-Liouville eigenvalues on an interval
//!   via boundary-subspace phases.
//! - `custom_problem` — define a problem from expression strings and run the
//!   full pipeline.

pub mod contour;
pub mod error;
pub mod expr;
pub mod exterior;
pub mod spectral;
pub mod util;

pub use error::{Error, Result};
