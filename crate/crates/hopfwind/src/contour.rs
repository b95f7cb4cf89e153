//! Closed contours in the spectral plane.
//!
//! A contour is a smooth, simple, positively oriented closed curve sampled at
//! N points `lambda_0, .., lambda_{N-1}` with the uniform parametrization
//! `s_j = j / N`; the loop closes by convention (`lambda_N = lambda_0`).
//! Everything downstream — eigenvector loops, propagated loops, phase sums,
//! winding counts — is indexed by these samples.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Minimum number of samples for any contour. Below this, phase increments
/// can approach the under-resolution guard even for benign loops.
pub const MIN_SAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    samples: Vec<Complex64>,
}

impl Contour {
    /// Counterclockwise circle `center + radius * exp(2 pi i j / n)`.
    pub fn circle(center: Complex64, radius: f64, n: usize) -> Result<Contour> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Config(format!(
                "contour radius must be positive and finite, got {radius}"
            )));
        }
        check_count(n)?;
        let samples = (0..n)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                center + Complex64::from_polar(radius, theta)
            })
            .collect();
        Ok(Contour { samples })
    }

    /// A contour from an explicit closed sample list (the last point connects
    /// back to the first; do not repeat the first point at the end).
    ///
    /// Validates sample count, finiteness, rough uniformity of the spacing
    /// (no gap more than ten times the mean — phase sums assume comparable
    /// increments), distinct consecutive points, and positive orientation
    /// (counterclockwise, by the shoelace signed area).
    pub fn from_samples(samples: Vec<Complex64>) -> Result<Contour> {
        check_count(samples.len())?;
        if samples
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Config("contour contains non-finite samples".into()));
        }
        let n = samples.len();
        let mut gaps = Vec::with_capacity(n);
        let mut area = 0.0;
        for j in 0..n {
            let a = samples[j];
            let b = samples[(j + 1) % n];
            gaps.push((b - a).norm());
            area += a.re * b.im - b.re * a.im;
        }
        let max_gap = gaps.iter().cloned().fold(0.0f64, f64::max);
        let min_gap = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
        let mut sorted = gaps.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median_gap = sorted[n / 2];
        if min_gap == 0.0 {
            return Err(Error::Config(
                "contour has repeated consecutive samples".into(),
            ));
        }
        // Uniformity heuristic: phase sums assume comparable increments, so a
        // gap an order of magnitude beyond the median marks bad sampling.
        if max_gap > 10.0 * median_gap {
            return Err(Error::Config(format!(
                "contour sampling is far from uniform: max gap {max_gap:.3e} vs median {median_gap:.3e}"
            )));
        }
        if area <= 0.0 {
            return Err(Error::Config(
                "contour must be positively oriented (counterclockwise)".into(),
            ));
        }
        Ok(Contour { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn sample(&self, j: usize) -> Complex64 {
        self.samples[j % self.samples.len()]
    }

    /// Loop parameter of sample j, `s_j = j / N`.
    pub fn s(&self, j: usize) -> f64 {
        j as f64 / self.samples.len() as f64
    }

    /// Winding number of the contour about a point, by summed principal
    /// argument increments of `lambda_j - point`. Used to report how a
    /// degenerate scaling factor winds, and in tests.
    pub fn winding_about(&self, point: Complex64) -> Result<i32> {
        let n = self.samples.len();
        let mut total = 0.0;
        for j in 0..n {
            let a = self.samples[j] - point;
            let b = self.samples[(j + 1) % n] - point;
            if a.norm() == 0.0 || b.norm() == 0.0 {
                return Err(Error::Config(
                    "winding undefined: contour passes through the point".into(),
                ));
            }
            total += (b / a).arg();
        }
        Ok((total / (2.0 * std::f64::consts::PI)).round() as i32)
    }
}

fn check_count(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::Config(format!(
            "contour needs at least {MIN_SAMPLES} samples, got {n}"
        )));
    }
    Ok(())
}
