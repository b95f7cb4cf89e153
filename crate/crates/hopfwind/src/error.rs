use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide error type.
///
/// Variants split into two families that the command-line driver maps onto
/// exit codes: configuration problems (bad input shapes, malformed config,
/// I/O on inputs) exit with 1, while method failures detected at run time
/// (lost spectral splitting, degenerate reference paths, under-resolved
/// loops, numerical breakdown) exit with 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent configuration / input data.
    #[error("configuration: {0}")]
    Config(String),

    /// A dimension or length did not match what the operation requires.
    #[error("shape mismatch in {context}: expected {expected}, got {got}")]
    Shape {
        context: &'static str,
        expected: String,
        got: String,
    },

    /// A supplied formula or problem definition failed a consistency check.
    #[error("validation at lambda = {lambda}: {what}")]
    Validation { what: String, lambda: Complex64 },

    /// The asymptotic spectra do not split cleanly along the contour.
    #[error("spectral splitting: {0}")]
    Splitting(String),

    /// Eigenvector continuation around the contour broke down.
    #[error("continuation at sample {sample}: {reason}")]
    Continuation { sample: usize, reason: String },

    /// A reference path failed to close up around the contour.
    #[error("path fails to close: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    Degenerate { defect: f64, tol: f64 },

    /// Adjacent loop samples are too far apart for a trustworthy phase sum.
    #[error(
        "loop under-resolved at step {step}: |phase increment| {increment:.4} rad >= {max:.4}; \
         increase the contour sample count"
    )]
    UnderResolved {
        step: usize,
        increment: f64,
        max: f64,
    },

    /// Loop vectors are not ray-aligned with the supplied reference path.
    #[error(
        "loop not aligned with reference at sample {sample}: ray angle {angle:.3e} exceeds {tol:.3e}"
    )]
    NotAligned { sample: usize, angle: f64, tol: f64 },

    /// The adaptive integrator could not meet its tolerances.
    #[error("step size underflow at xi = {xi:.6}: step {step:.3e} below minimum {min:.3e}")]
    StepUnderflow { xi: f64, step: f64, min: f64 },

    /// The contour appears to pass through (or too near) the spectrum.
    #[error(
        "contour touches the spectrum: |D| = {magnitude:.3e} at sample {sample} is below the \
         floor {floor:.3e}"
    )]
    SpectrumOnContour {
        sample: usize,
        magnitude: f64,
        floor: f64,
    },

    /// A winding/phase total landed too far from an integer to trust.
    #[error(
        "winding residual {residual:.3} exceeds {tol}: increase contour resolution or move the \
         contour away from the spectrum"
    )]
    WindingResolution { residual: f64, tol: f64 },

    /// Fixed-pattern elimination hit a vanishing pivot.
    #[error("pivot breakdown at sample {sample}: |pivot| = {magnitude:.3e} below {tol:.3e}")]
    PivotBreakdown {
        sample: usize,
        magnitude: f64,
        tol: f64,
    },

    /// A dense linear-algebra kernel failed or produced non-finite values.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Numerical(e.to_string())
    }
}

impl Error {
    /// Exit code contract for the command-line driver: configuration errors
    /// exit 1, method errors exit 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Shape { .. } | Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
