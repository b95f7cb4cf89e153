//! Spectral problems: first-order linear systems `Y' = A(lambda, xi) Y` on
//! the line whose bounded solutions at an eigenvalue parameter `lambda`
//! encode eigenfunctions of a linearized wave operator.
//!
//! A reaction-diffusion operator `L p = p'' + c p' + F(U(xi)) p` linearized
//! about a traveling wave `U` becomes, in the phase-space variables
//! `(p, p')`, the system with block coefficient
//!
//! ```text
//! A(lambda, xi) = [ 0                     I   ]
//!                 [ lambda I - F(U(xi))  -c I ]
//! ```
//!
//! As `xi -> +-inf` the coefficient converges exponentially to constant
//! matrices `A_-(lambda)`, `A_+(lambda)` whose spectra must split into k
//! unstable (positive real part) and n-k stable eigenvalues, uniformly along
//! the chosen contour — that splitting is what makes eigenvector loops and
//! their transported phases well defined.

use crate::contour::Contour;
use crate::error::{Error, Result};
use crate::util::{cauchy_riemann_residual, fro_norm};
use ndarray::{Array1, Array2};
use ndarray_linalg::EigVals;
use num_complex::Complex64;
use std::sync::Arc;

/// Minimum distance of asymptotic eigenvalues from the imaginary axis for
/// the stable/unstable splitting to count as resolved.
pub const GAP_TOL: f64 = 1e-6;

/// Tolerance for the numerical Cauchy-Riemann (holomorphy) spot checks.
pub const CR_TOL: f64 = 1e-6;

/// Tolerance for the decay spot check of `A(lambda, xi) -> A_+-(lambda)`.
pub const DECAY_TOL: f64 = 1e-6;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Which end of the line an asymptotic quantity belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Minus,
    Plus,
}

pub type CoefficientFn = dyn Fn(Complex64, f64) -> Array2<Complex64> + Send + Sync;
pub type AsymptoticFn = dyn Fn(Complex64) -> Array2<Complex64> + Send + Sync;
/// An analytically known eigenpair of an asymptotic matrix:
/// `lambda -> (eigenvalue, eigenvector)`, the eigenvector not necessarily
/// normalized.
pub type EigenFormula = dyn Fn(Complex64) -> (Complex64, Array1<Complex64>) + Send + Sync;

/// A first-order spectral problem on the line.
#[derive(Clone)]
pub struct SpectralProblem {
    n: usize,
    k: usize,
    coefficient: Arc<CoefficientFn>,
    asym_minus: Arc<AsymptoticFn>,
    asym_plus: Arc<AsymptoticFn>,
    decay_rate: f64,
    label: String,
    /// xi-range actually covered by sampled wave data, if the wave came from
    /// samples (evaluation clamps outside it).
    wave_coverage: Option<(f64, f64)>,
    closed_form_minus: Option<Arc<EigenFormula>>,
    closed_form_plus: Option<Arc<EigenFormula>>,
}

impl std::fmt::Debug for SpectralProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralProblem")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("k", &self.k)
            .field("decay_rate", &self.decay_rate)
            .finish()
    }
}

impl SpectralProblem {
    pub fn new(
        n: usize,
        k: usize,
        coefficient: Arc<CoefficientFn>,
        asym_minus: Arc<AsymptoticFn>,
        asym_plus: Arc<AsymptoticFn>,
        decay_rate: f64,
        label: impl Into<String>,
    ) -> Result<SpectralProblem> {
        if n == 0 || k == 0 || k >= n {
            return Err(Error::Shape {
                context: "SpectralProblem::new",
                expected: "0 < k < n".into(),
                got: format!("n = {n}, k = {k}"),
            });
        }
        if !(decay_rate > 0.0) {
            return Err(Error::Config(format!(
                "decay rate must be positive, got {decay_rate}"
            )));
        }
        Ok(SpectralProblem {
            n,
            k,
            coefficient,
            asym_minus,
            asym_plus,
            decay_rate,
            label: label.into(),
            wave_coverage: None,
            closed_form_minus: None,
            closed_form_plus: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Expected dimension of the unstable asymptotic subspaces.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn decay_rate(&self) -> f64 {
        self.decay_rate
    }

    pub fn wave_coverage(&self) -> Option<(f64, f64)> {
        self.wave_coverage
    }

    pub fn coefficient(&self, lambda: Complex64, xi: f64) -> Array2<Complex64> {
        (self.coefficient)(lambda, xi)
    }

    pub fn asymptotic(&self, end: End, lambda: Complex64) -> Array2<Complex64> {
        match end {
            End::Minus => (self.asym_minus)(lambda),
            End::Plus => (self.asym_plus)(lambda),
        }
    }

    /// Analytically known unstable eigenpair at an end, when registered.
    pub fn closed_form(&self, end: End) -> Option<Arc<EigenFormula>> {
        match end {
            End::Minus => self.closed_form_minus.clone(),
            End::Plus => self.closed_form_plus.clone(),
        }
    }

    pub fn with_closed_form(mut self, end: End, formula: Arc<EigenFormula>) -> Self {
        match end {
            End::Minus => self.closed_form_minus = Some(formula),
            End::Plus => self.closed_form_plus = Some(formula),
        }
        self
    }

    pub fn with_decay_rate(mut self, rate: f64) -> Self {
        self.decay_rate = rate;
        self
    }

    pub fn with_wave_coverage(mut self, coverage: (f64, f64)) -> Self {
        self.wave_coverage = Some(coverage);
        self
    }

    /// Default integration window `[-L, L]` with `exp(-a L) < 1e-8`.
    pub fn default_window(&self) -> (f64, f64) {
        let l = (1e8f64).ln() / self.decay_rate;
        (-l, l)
    }

    /// The xi-reversed, sign-flipped problem `B(lambda, z) = -A(lambda, -z)`.
    ///
    /// Forward integration of the reversed problem from `-xi1` to `-xi0`
    /// reproduces backward integration of the original from `xi1` to `xi0`,
    /// and the reversed problem's unstable dimension is `n - k` (its minus
    /// end is the original plus end with the spectrum negated). This is how
    /// the stable subspace at `+inf` is transported to a matching point.
    pub fn reversed(&self) -> SpectralProblem {
        let coefficient = Arc::clone(&self.coefficient);
        let asym_minus = Arc::clone(&self.asym_minus);
        let asym_plus = Arc::clone(&self.asym_plus);
        SpectralProblem {
            n: self.n,
            k: self.n - self.k,
            coefficient: Arc::new(move |lambda, z| {
                coefficient(lambda, -z).mapv(|x| -x)
            }),
            asym_minus: Arc::new({
                let a = Arc::clone(&asym_plus);
                move |lambda| a(lambda).mapv(|x| -x)
            }),
            asym_plus: Arc::new({
                let a = Arc::clone(&asym_minus);
                move |lambda| a(lambda).mapv(|x| -x)
            }),
            decay_rate: self.decay_rate,
            label: format!("{}/reversed", self.label),
            wave_coverage: self.wave_coverage.map(|(a, b)| (-b, -a)),
            closed_form_minus: None,
            closed_form_plus: None,
        }
    }

    /// Consistency spot checks: coefficient and asymptotic shapes, holomorphy
    /// in `lambda` (numerical Cauchy-Riemann residual), and exponential
    /// approach of the coefficient to its asymptotic limits.
    pub fn validate(&self, probes: &[Complex64]) -> Result<()> {
        let n = self.n;
        for &lambda in probes {
            for xi in [0.0, 0.7] {
                let a = self.coefficient(lambda, xi);
                if a.nrows() != n || a.ncols() != n {
                    return Err(Error::Shape {
                        context: "SpectralProblem::validate coefficient",
                        expected: format!("{n} x {n}"),
                        got: format!("{} x {}", a.nrows(), a.ncols()),
                    });
                }
                let scale = 1.0 + fro_norm(&a);
                let flat = |l: Complex64| {
                    Array1::from_iter(self.coefficient(l, xi).iter().cloned())
                };
                let residual = cauchy_riemann_residual(flat, lambda, 1e-5);
                if residual > CR_TOL * scale {
                    return Err(Error::Validation {
                        what: format!(
                            "coefficient is not holomorphic in lambda at xi = {xi}: \
                             Cauchy-Riemann residual {residual:.3e}"
                        ),
                        lambda,
                    });
                }
            }
            for end in [End::Minus, End::Plus] {
                let limit = self.asymptotic(end, lambda);
                if limit.nrows() != n || limit.ncols() != n {
                    return Err(Error::Shape {
                        context: "SpectralProblem::validate asymptotic",
                        expected: format!("{n} x {n}"),
                        got: format!("{} x {}", limit.nrows(), limit.ncols()),
                    });
                }
                let flat = |l: Complex64| {
                    Array1::from_iter(self.asymptotic(end, l).iter().cloned())
                };
                let residual = cauchy_riemann_residual(flat, lambda, 1e-5);
                if residual > CR_TOL * (1.0 + fro_norm(&limit)) {
                    return Err(Error::Validation {
                        what: format!(
                            "asymptotic matrix is not holomorphic in lambda: \
                             Cauchy-Riemann residual {residual:.3e}"
                        ),
                        lambda,
                    });
                }
                // Decay spot check at a point deep enough that the limit
                // should hold to well below tolerance.
                let xi_star = 2.0 / self.decay_rate * (1e8f64).ln() / 2.0;
                let xi_probe = match end {
                    End::Minus => -xi_star,
                    End::Plus => xi_star,
                };
                let there = self.coefficient(lambda, xi_probe);
                let diff = fro_norm(&(&there - &limit));
                if diff > DECAY_TOL * (1.0 + fro_norm(&limit)) {
                    return Err(Error::Validation {
                        what: format!(
                            "coefficient has not reached its {end:?} limit at xi = {xi_probe:.2}: \
                             difference {diff:.3e}; decay rate {} looks optimistic",
                            self.decay_rate
                        ),
                        lambda,
                    });
                }
            }
        }
        Ok(())
    }
}

pub type WaveFn = dyn Fn(f64) -> Array1<f64> + Send + Sync;
pub type JacobianFn = dyn Fn(&Array1<f64>) -> Array2<f64> + Send + Sync;

/// A reaction-diffusion linearization: wave profile, nonlinearity Jacobian,
/// wave speed, and the exponential rate at which the profile approaches its
/// end states.
#[derive(Clone)]
pub struct ReactionDiffusionSpec {
    m: usize,
    speed: f64,
    decay_rate: f64,
    wave: Arc<WaveFn>,
    jacobian: Arc<JacobianFn>,
    limit_minus: Array1<f64>,
    limit_plus: Array1<f64>,
    label: String,
    wave_coverage: Option<(f64, f64)>,
}

impl ReactionDiffusionSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        m: usize,
        speed: f64,
        decay_rate: f64,
        wave: Arc<WaveFn>,
        jacobian: Arc<JacobianFn>,
        limit_minus: Array1<f64>,
        limit_plus: Array1<f64>,
        label: impl Into<String>,
    ) -> Result<ReactionDiffusionSpec> {
        if m == 0 {
            return Err(Error::Config("component count m must be positive".into()));
        }
        if limit_minus.len() != m || limit_plus.len() != m {
            return Err(Error::Shape {
                context: "ReactionDiffusionSpec::new",
                expected: format!("end states of length {m}"),
                got: format!("{} and {}", limit_minus.len(), limit_plus.len()),
            });
        }
        if !(decay_rate > 0.0) {
            return Err(Error::Config(format!(
                "decay rate must be positive, got {decay_rate}"
            )));
        }
        Ok(ReactionDiffusionSpec {
            m,
            speed,
            decay_rate,
            wave,
            jacobian,
            limit_minus,
            limit_plus,
            label: label.into(),
            wave_coverage: None,
        })
    }

    /// Build the spec from per-component `(xi, U_i(xi))` samples, fitting a
    /// natural cubic spline per component. End states are taken from the
    /// first/last samples; evaluation clamps outside the sampled range, so
    /// the samples should extend to where the wave has numerically converged.
    pub fn from_samples(
        m: usize,
        speed: f64,
        decay_rate: f64,
        jacobian: Arc<JacobianFn>,
        samples: &[Vec<(f64, f64)>],
        label: impl Into<String>,
    ) -> Result<ReactionDiffusionSpec> {
        if samples.len() != m {
            return Err(Error::Shape {
                context: "ReactionDiffusionSpec::from_samples",
                expected: format!("{m} sample tracks"),
                got: format!("{}", samples.len()),
            });
        }
        let mut splines = Vec::with_capacity(m);
        let mut limit_minus = Array1::zeros(m);
        let mut limit_plus = Array1::zeros(m);
        let mut cover_lo = f64::NEG_INFINITY;
        let mut cover_hi = f64::INFINITY;
        for (i, track) in samples.iter().enumerate() {
            let xs: Vec<f64> = track.iter().map(|p| p.0).collect();
            let ys: Vec<f64> = track.iter().map(|p| p.1).collect();
            let spline = CubicSpline::fit(xs, ys)?;
            limit_minus[i] = spline.first_value();
            limit_plus[i] = spline.last_value();
            cover_lo = cover_lo.max(spline.first_x());
            cover_hi = cover_hi.min(spline.last_x());
            splines.push(spline);
        }
        if cover_lo >= cover_hi {
            return Err(Error::Config(
                "wave sample tracks have no common xi range".into(),
            ));
        }
        let wave = Arc::new(move |xi: f64| {
            Array1::from_iter(splines.iter().map(|s| s.eval(xi)))
        });
        let mut spec = ReactionDiffusionSpec::new(
            m,
            speed,
            decay_rate,
            wave,
            jacobian,
            limit_minus,
            limit_plus,
            label,
        )?;
        spec.wave_coverage = Some((cover_lo, cover_hi));
        Ok(spec)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn wave(&self, xi: f64) -> Array1<f64> {
        (self.wave)(xi)
    }
}

/// Assemble the first-order system for a reaction-diffusion linearization.
/// The phase space is `n = 2m` dimensional and, to the right of the
/// essential spectrum, each end splits into `k = m` unstable and `m` stable
/// directions.
pub fn assemble_rd_system(spec: &ReactionDiffusionSpec) -> Result<SpectralProblem> {
    let m = spec.m;
    let n = 2 * m;
    let c = spec.speed;

    let block = move |f_at: Array2<f64>, lambda: Complex64| -> Array2<Complex64> {
        let mut a = Array2::from_elem((n, n), ZERO);
        for i in 0..m {
            a[[i, m + i]] = ONE;
            a[[m + i, m + i]] = Complex64::new(-c, 0.0);
            for j in 0..m {
                let mut v = -Complex64::new(f_at[[i, j]], 0.0);
                if i == j {
                    v += lambda;
                }
                a[[m + i, j]] = v;
            }
        }
        a
    };

    let coefficient = {
        let wave = Arc::clone(&spec.wave);
        let jac = Arc::clone(&spec.jacobian);
        Arc::new(move |lambda: Complex64, xi: f64| block(jac(&wave(xi)), lambda))
    };
    let asym_minus = {
        let jac = Arc::clone(&spec.jacobian);
        let u = spec.limit_minus.clone();
        Arc::new(move |lambda: Complex64| block(jac(&u), lambda))
    };
    let asym_plus = {
        let jac = Arc::clone(&spec.jacobian);
        let u = spec.limit_plus.clone();
        Arc::new(move |lambda: Complex64| block(jac(&u), lambda))
    };

    let mut problem = SpectralProblem::new(
        n,
        m,
        coefficient,
        asym_minus,
        asym_plus,
        spec.decay_rate,
        spec.label.clone(),
    )?;
    if let Some(cov) = spec.wave_coverage {
        problem = problem.with_wave_coverage(cov);
    }
    Ok(problem)
}

/// Splitting diagnostics along a contour: unstable eigenvalue counts of both
/// asymptotic matrices at every sample, and the minimum distance of any
/// asymptotic eigenvalue from the imaginary axis.
#[derive(Debug, Clone)]
pub struct SplittingReport {
    pub k_minus: Vec<usize>,
    pub k_plus: Vec<usize>,
    pub min_spectral_gap: f64,
    /// Counts constant along the contour, equal at both ends, and gap above
    /// [`GAP_TOL`].
    pub ok: bool,
}

impl SplittingReport {
    /// The common unstable count, when it is consistent.
    pub fn consistent_k(&self) -> Option<usize> {
        let first = *self.k_minus.first()?;
        if self.ok {
            Some(first)
        } else {
            None
        }
    }
}

/// Check the stable/unstable splitting of both asymptotic matrices at every
/// contour sample.
pub fn check_splitting(problem: &SpectralProblem, contour: &Contour) -> Result<SplittingReport> {
    let mut k_minus = Vec::with_capacity(contour.len());
    let mut k_plus = Vec::with_capacity(contour.len());
    let mut gap = f64::INFINITY;
    for &lambda in contour.samples() {
        for (end, out) in [(End::Minus, &mut k_minus), (End::Plus, &mut k_plus)] {
            let matrix = problem.asymptotic(end, lambda);
            let eigs = matrix.eigvals().map_err(|e| {
                Error::Numerical(format!(
                    "eigenvalue computation failed at lambda = {lambda}: {e}"
                ))
            })?;
            let unstable = eigs.iter().filter(|mu| mu.re > 0.0).count();
            for mu in eigs.iter() {
                gap = gap.min(mu.re.abs());
            }
            out.push(unstable);
        }
    }
    let constant = k_minus.windows(2).all(|w| w[0] == w[1])
        && k_plus.windows(2).all(|w| w[0] == w[1]);
    let equal_ends = !k_minus.is_empty() && k_minus[0] == k_plus[0];
    let ok = constant && equal_ends && gap > GAP_TOL;
    Ok(SplittingReport {
        k_minus,
        k_plus,
        min_spectral_gap: gap,
        ok,
    })
}

/// Sum of the unstable eigenvalues of an asymptotic matrix — the growth rate
/// removed by the rescaled ("shifted") systems, and the dominant eigenvalue
/// of the induced drift on the k-th exterior power.
pub fn unstable_sum(problem: &SpectralProblem, lambda: Complex64, end: End) -> Result<Complex64> {
    let matrix = problem.asymptotic(end, lambda);
    let eigs = matrix.eigvals().map_err(|e| {
        Error::Numerical(format!(
            "eigenvalue computation failed at lambda = {lambda}: {e}"
        ))
    })?;
    let mut sum = ZERO;
    let mut count = 0usize;
    for mu in eigs.iter() {
        if mu.re.abs() < GAP_TOL {
            return Err(Error::Splitting(format!(
                "asymptotic eigenvalue {mu} at lambda = {lambda} sits on the imaginary axis \
                 (|Re| < {GAP_TOL:.0e}); the contour is too close to the essential spectrum"
            )));
        }
        if mu.re > 0.0 {
            sum += mu;
            count += 1;
        }
    }
    if count != problem.k() {
        return Err(Error::Splitting(format!(
            "expected {} unstable eigenvalues at lambda = {lambda} ({:?} end), found {count}",
            problem.k(),
            end
        )));
    }
    Ok(sum)
}

/// Built-in problem registry.
pub fn registry(name: &str) -> Result<SpectralProblem> {
    match name {
        "bistable" => Ok(bistable()),
        other => Err(Error::Config(format!(
            "unknown problem `{other}` (built-in: \"bistable\")"
        ))),
    }
}

/// The scalar bistable problem: standing pulse `U(xi) = sqrt(2) sech(xi)` of
/// `u_t = u_xx + u (u^2 - 1)`, zero wave speed. The linearization has point
/// eigenvalues 0 (translation) and 3, with essential spectrum on
/// `Re lambda <= -1`. The asymptotic matrices share the unstable eigenpair
/// `mu = sqrt(lambda + 1)`, eigenvector `(1, mu)` — registered as the
/// closed-form reference at both ends.
pub fn bistable() -> SpectralProblem {
    let wave: Arc<WaveFn> = Arc::new(|xi: f64| {
        let sech = 1.0 / xi.cosh();
        Array1::from_elem(1, std::f64::consts::SQRT_2 * sech)
    });
    let jacobian: Arc<JacobianFn> = Arc::new(|u: &Array1<f64>| {
        Array2::from_elem((1, 1), 3.0 * u[0] * u[0] - 1.0)
    });
    let spec = ReactionDiffusionSpec::new(
        1,
        0.0,
        1.0,
        wave,
        jacobian,
        Array1::zeros(1),
        Array1::zeros(1),
        "bistable",
    )
    .expect("valid built-in spec");
    let formula: Arc<EigenFormula> = Arc::new(|lambda: Complex64| {
        let mu = (lambda + 1.0).sqrt();
        (mu, ndarray::array![ONE, mu])
    });
    assemble_rd_system(&spec)
        .expect("valid built-in assembly")
        // The coefficient approaches its limits at twice the wave's decay
        // rate: the deviation enters through U^2.
        .with_decay_rate(2.0)
        .with_closed_form(End::Minus, Arc::clone(&formula))
        .with_closed_form(End::Plus, formula)
}

/// Natural cubic spline through strictly increasing sample points, clamped
/// to the end values outside the sampled range.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    y2: Vec<f64>,
}

impl CubicSpline {
    pub fn fit(xs: Vec<f64>, ys: Vec<f64>) -> Result<CubicSpline> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::Config(format!(
                "spline needs >= 2 equal-length sample arrays, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Config(
                "spline sample abscissae must be strictly increasing".into(),
            ));
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Config("spline samples must be finite".into()));
        }
        let n = xs.len();
        let mut y2 = vec![0.0; n];
        if n > 2 {
            // Tridiagonal solve for natural boundary conditions.
            let mut u = vec![0.0; n - 1];
            for i in 1..n - 1 {
                let sig = (xs[i] - xs[i - 1]) / (xs[i + 1] - xs[i - 1]);
                let p = sig * y2[i - 1] + 2.0;
                y2[i] = (sig - 1.0) / p;
                let d = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
                    - (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
                u[i] = (6.0 * d / (xs[i + 1] - xs[i - 1]) - sig * u[i - 1]) / p;
            }
            y2[n - 1] = 0.0;
            for i in (1..n - 1).rev() {
                y2[i] = y2[i] * y2[i + 1] + u[i];
            }
        }
        Ok(CubicSpline { xs, ys, y2 })
    }

    pub fn first_x(&self) -> f64 {
        self.xs[0]
    }

    pub fn last_x(&self) -> f64 {
        *self.xs.last().unwrap()
    }

    pub fn first_value(&self) -> f64 {
        self.ys[0]
    }

    pub fn last_value(&self) -> f64 {
        *self.ys.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x <= self.first_x() {
            return self.first_value();
        }
        if x >= self.last_x() {
            return self.last_value();
        }
        let mut lo = 0usize;
        let mut hi = self.xs.len() - 1;
        while hi - lo > 1 {
            let mid = (hi + lo) / 2;
            if self.xs[mid] > x {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.xs[hi] - self.xs[lo];
        let a = (self.xs[hi] - x) / h;
        let b = (x - self.xs[lo]) / h;
        a * self.ys[lo]
            + b * self.ys[hi]
            + ((a * a * a - a) * self.y2[lo] + (b * b * b - b) * self.y2[hi]) * h * h / 6.0
    }
}

/// Read a two-column CSV of `(xi, value)` wave samples. The first line may
/// be a header; every other line must parse as two comma-separated floats.
pub fn read_wave_csv(path: &std::path::Path) -> Result<Vec<(f64, f64)>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let parse = |s: Option<&str>| -> Option<f64> { s?.trim().parse().ok() };
        match (parse(parts.next()), parse(parts.next())) {
            (Some(x), Some(y)) => out.push((x, y)),
            _ if idx == 0 => continue, // header
            _ => {
                return Err(Error::Config(format!(
                    "bad wave sample at {}:{}: `{line}`",
                    path.display(),
                    idx + 1
                )))
            }
        }
    }
    if out.len() < 2 {
        return Err(Error::Config(format!(
            "wave sample file {} has fewer than 2 samples",
            path.display()
        )));
    }
    Ok(out)
}
