//! Small numeric helpers shared across modules.

use ndarray::{Array1, Array2, ArrayView1};
use num_complex::Complex64;

/// Hermitian inner product `<a, b> = sum_j a_j * conj(b_j)`, linear in the
/// first argument and conjugate-linear in the second. Every phase and
/// pairing computation in the crate uses this convention.
pub fn hdot(a: ArrayView1<Complex64>, b: ArrayView1<Complex64>) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
}

/// Euclidean norm of a complex vector (a nonnegative real).
pub fn norm(a: ArrayView1<Complex64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Divide by the (positive real) Euclidean norm in place, returning the norm.
/// Rescaling by a positive real is the only normalization the geometric-phase
/// machinery is allowed to apply: a complex unit factor would rotate the
/// fiber and contaminate the measured winding.
pub fn normalize_real(a: &mut Array1<Complex64>) -> f64 {
    let n = norm(a.view());
    if n > 0.0 {
        a.mapv_inplace(|z| z / n);
    }
    n
}

/// Rotate a vector by the unit phase that makes its largest-magnitude entry
/// real and positive. Used only to pick a deterministic gauge for the *first*
/// sample of a continued eigenvector path (a global phase does not affect any
/// loop phase); for real matrices it lands on a real vector.
pub fn canonicalize_phase(a: &mut Array1<Complex64>) {
    let mut best = 0usize;
    let mut best_mag = -1.0f64;
    for (i, z) in a.iter().enumerate() {
        let m = z.norm();
        if m > best_mag + 1e-15 {
            best_mag = m;
            best = i;
        }
    }
    if best_mag <= 0.0 {
        return;
    }
    let phase = a[best] / best_mag;
    a.mapv_inplace(|z| z / phase);
}

/// Angle in [0, pi/2] between the complex rays (one-dimensional subspaces)
/// spanned by two unit vectors.
pub fn ray_angle(a: ArrayView1<Complex64>, b: ArrayView1<Complex64>) -> f64 {
    hdot(a, b).norm().min(1.0).acos()
}

/// Frobenius norm of a complex matrix.
pub fn fro_norm(m: &Array2<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// True when every entry is finite.
pub fn all_finite(a: ArrayView1<Complex64>) -> bool {
    a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Residual of the Cauchy-Riemann equations for a map `f: C -> C^d` at a
/// point, estimated by central differences: `|| df/d(conj lambda) ||`.
/// Holomorphic maps return ~0; anti-holomorphic maps return ~||df/dlambda||.
pub fn cauchy_riemann_residual<F>(f: F, lambda: Complex64, h: f64) -> f64
where
    F: Fn(Complex64) -> Array1<Complex64>,
{
    let re_p = f(lambda + Complex64::new(h, 0.0));
    let re_m = f(lambda - Complex64::new(h, 0.0));
    let im_p = f(lambda + Complex64::new(0.0, h));
    let im_m = f(lambda - Complex64::new(0.0, h));
    let dx = (&re_p - &re_m) / Complex64::new(2.0 * h, 0.0);
    let dy = (&im_p - &im_m) / Complex64::new(2.0 * h, 0.0);
    // d/d(conj lambda) = (d/dx + i d/dy) / 2
    let dbar = (&dx + &(&dy * Complex64::new(0.0, 1.0))) / Complex64::new(2.0, 0.0);
    norm(dbar.view())
}
