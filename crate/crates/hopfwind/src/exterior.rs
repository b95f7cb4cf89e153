//! Exterior powers of `C^n` in coordinates.
//!
//! The k-th exterior power is represented on the orthonormal basis
//! `e_{s_1} ^ ... ^ e_{s_k}` indexed by strictly increasing k-subsets of
//! `{0, .., n-1}` in lexicographic order, so wedge vectors live in
//! `C^(n choose k)`. The wedge of k column vectors has the k-by-k minors of
//! the column matrix as its coordinates, and a linear drift on `C^n` induces
//! a drift on the exterior power by the Leibniz rule (the classical compound
//! matrix). These are exactly the tools needed to transport k-dimensional
//! subspaces as single vectors: a subspace's wedge is one ray, no matter
//! which basis spans it.

use crate::error::{Error, Result};
use crate::util::hdot;
use itertools::Itertools;
use ndarray::{Array1, Array2};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Largest exterior-power dimension we are willing to enumerate. The
/// pipelines here use single-digit `n`; the guard catches typos, not limits
/// of the algorithm.
const MAX_DIM: usize = 100_000;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// The lexicographic basis of strictly increasing k-subsets of {0, .., n-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasis {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(n: usize, k: usize) -> Result<WedgeBasis> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::Shape {
                context: "WedgeBasis::new",
                expected: "1 <= k <= n with n >= 1".into(),
                got: format!("n = {n}, k = {k}"),
            });
        }
        let dim = binomial(n, k);
        if dim > MAX_DIM {
            return Err(Error::Shape {
                context: "WedgeBasis::new",
                expected: format!("dimension at most {MAX_DIM}"),
                got: format!("C({n},{k}) = {dim}"),
            });
        }
        let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        debug_assert_eq!(subsets.len(), dim);
        Ok(WedgeBasis { n, k, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension of the exterior power, `C(n, k)`.
    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    /// The index sets, each strictly increasing, in lexicographic order.
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Position of a strictly increasing subset in the basis.
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        self.subsets
            .binary_search_by(|s| s.as_slice().cmp(subset))
            .ok()
    }

    /// Wedge product of k vectors in `C^n`: the coordinate on basis subset S
    /// is the k-by-k minor of the column matrix `[y_1 .. y_k]` with rows S.
    pub fn wedge(&self, factors: &[Array1<Complex64>]) -> Result<WedgeVector> {
        if factors.len() != self.k {
            return Err(Error::Shape {
                context: "wedge",
                expected: format!("{} factors", self.k),
                got: format!("{}", factors.len()),
            });
        }
        for f in factors {
            if f.len() != self.n {
                return Err(Error::Shape {
                    context: "wedge",
                    expected: format!("factors of length {}", self.n),
                    got: format!("{}", f.len()),
                });
            }
        }
        let k = self.k;
        let mut coords = Array1::from_elem(self.dim(), ZERO);
        let mut minor = vec![ZERO; k * k];
        for (j, subset) in self.subsets.iter().enumerate() {
            for (row, &s) in subset.iter().enumerate() {
                for (col, f) in factors.iter().enumerate() {
                    minor[row * k + col] = f[s];
                }
            }
            coords[j] = det_in_place(&mut minor, k);
        }
        Ok(WedgeVector {
            n: self.n,
            k,
            coords,
        })
    }

    /// The drift induced on the exterior power by the Leibniz rule:
    /// `M (y_1 ^ ... ^ y_k) = sum_j y_1 ^ ... ^ A y_j ^ ... ^ y_k`,
    /// expressed as a `dim x dim` matrix (the compound of A). Its spectrum is
    /// exactly the set of k-fold sums of eigenvalues of A, which is what
    /// makes the exterior power the right home for transported subspaces:
    /// the sum of the k rightmost eigenvalues becomes a simple dominant one.
    pub fn induced_matrix(&self, a: &Array2<Complex64>) -> Result<Array2<Complex64>> {
        if a.nrows() != self.n || a.ncols() != self.n {
            return Err(Error::Shape {
                context: "induced_matrix",
                expected: format!("{0} x {0} matrix", self.n),
                got: format!("{} x {}", a.nrows(), a.ncols()),
            });
        }
        let d = self.dim();
        let mut out = Array2::from_elem((d, d), ZERO);
        let mut target = vec![0usize; self.k];
        for (j, subset) in self.subsets.iter().enumerate() {
            for (pos, &col) in subset.iter().enumerate() {
                for r in 0..self.n {
                    let entry = a[[r, col]];
                    if entry == ZERO {
                        continue;
                    }
                    if r == col {
                        out[[j, j]] += entry;
                        continue;
                    }
                    // Replacing index `col` by `r`: zero if `r` already
                    // appears; otherwise re-sort and track the permutation
                    // sign (r moves from slot `pos` to its sorted slot).
                    if subset.binary_search(&r).is_ok() {
                        continue;
                    }
                    let mut q = 0usize;
                    for (t, &s) in subset.iter().enumerate() {
                        if t != pos && s < r {
                            q += 1;
                        }
                    }
                    let mut w = 0usize;
                    for (t, &s) in subset.iter().enumerate() {
                        if t == pos {
                            continue;
                        }
                        if w == q && r < s {
                            target[w] = r;
                            w += 1;
                        }
                        target[w] = s;
                        w += 1;
                    }
                    if w == self.k - 1 {
                        target[w] = r;
                    }
                    let i = self
                        .index_of(&target)
                        .expect("replacement subset is a valid basis index");
                    let sign = if (pos + q) % 2 == 0 { ONE } else { -ONE };
                    out[[i, j]] += sign * entry;
                }
            }
        }
        Ok(out)
    }

    /// Maximum normalized Grassmann-Pluecker relation residual of a wedge
    /// vector: ~0 exactly when the vector is decomposable (a genuine wedge of
    /// k independent vectors, i.e. it still names a k-dimensional subspace).
    /// Every vector is decomposable for k = 1, k = n-1 and k = n, where this
    /// returns 0.
    pub fn decomposability_residual(&self, v: &WedgeVector) -> Result<f64> {
        self.check_vector(v, "decomposability_residual")?;
        let norm_sq: f64 = v.coords.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq == 0.0 {
            return Ok(0.0);
        }
        if self.k + 1 > self.n {
            return Ok(0.0);
        }
        let mut worst = 0.0f64;
        let mut with_a = vec![0usize; self.k];
        let mut without = vec![0usize; self.k];
        for small in (0..self.n).combinations(self.k - 1) {
            for big in (0..self.n).combinations(self.k + 1) {
                let mut acc = ZERO;
                for (t, &a) in big.iter().enumerate() {
                    if small.binary_search(&a).is_ok() {
                        continue;
                    }
                    // sorted(small + {a}), sign from insertion position
                    let q = small.iter().filter(|&&s| s < a).count();
                    let mut w = 0usize;
                    for &s in &small {
                        if w == q {
                            with_a[w] = a;
                            w += 1;
                        }
                        with_a[w] = s;
                        w += 1;
                    }
                    if w == self.k - 1 {
                        with_a[w] = a;
                    }
                    // big with `a` removed keeps its order
                    let mut w2 = 0usize;
                    for (t2, &b) in big.iter().enumerate() {
                        if t2 != t {
                            without[w2] = b;
                            w2 += 1;
                        }
                    }
                    let sign_small = if (small.len() - q) % 2 == 0 { ONE } else { -ONE };
                    let sign_pos = if t % 2 == 0 { ONE } else { -ONE };
                    let ia = self.index_of(&with_a).expect("valid subset");
                    let ib = self.index_of(&without).expect("valid subset");
                    acc += sign_pos * sign_small * v.coords[ia] * v.coords[ib];
                }
                worst = worst.max(acc.norm() / norm_sq);
            }
        }
        Ok(worst)
    }

    fn check_vector(&self, v: &WedgeVector, context: &'static str) -> Result<()> {
        if v.n != self.n || v.k != self.k || v.coords.len() != self.dim() {
            return Err(Error::Shape {
                context: "wedge vector/basis mismatch",
                expected: format!("({}, {}) with {} coords in {}", self.n, self.k, self.dim(), context),
                got: format!("({}, {}) with {} coords", v.n, v.k, v.coords.len()),
            });
        }
        Ok(())
    }
}

/// A coordinate vector in the k-th exterior power of `C^n`, on the
/// lexicographic subset basis of its [`WedgeBasis`].
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector {
    n: usize,
    k: usize,
    pub coords: Array1<Complex64>,
}

impl WedgeVector {
    pub fn from_coords(basis: &WedgeBasis, coords: Array1<Complex64>) -> Result<WedgeVector> {
        if coords.len() != basis.dim() {
            return Err(Error::Shape {
                context: "WedgeVector::from_coords",
                expected: format!("{} coordinates", basis.dim()),
                got: format!("{}", coords.len()),
            });
        }
        Ok(WedgeVector {
            n: basis.n,
            k: basis.k,
            coords,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn norm(&self) -> f64 {
        crate::util::norm(self.coords.view())
    }
}

/// Inner product on the exterior power via the factor Gram matrix:
/// `<<x, y>>_k = det [ <x_i, y_j> ]`, linear in the first family and
/// conjugate-linear in the second. Coincides with the Hermitian coordinate
/// pairing of the corresponding wedge vectors (Cauchy-Binet).
pub fn wedge_inner_product(
    x: &[Array1<Complex64>],
    y: &[Array1<Complex64>],
) -> Result<Complex64> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::Shape {
            context: "wedge_inner_product",
            expected: "two equal-length nonempty factor families".into(),
            got: format!("{} and {}", x.len(), y.len()),
        });
    }
    let n = x[0].len();
    for f in x.iter().chain(y.iter()) {
        if f.len() != n {
            return Err(Error::Shape {
                context: "wedge_inner_product",
                expected: format!("factors of length {n}"),
                got: format!("{}", f.len()),
            });
        }
    }
    let k = x.len();
    let mut gram = vec![ZERO; k * k];
    for i in 0..k {
        for j in 0..k {
            gram[i * k + j] = hdot(x[i].view(), y[j].view());
        }
    }
    Ok(det_in_place(&mut gram, k))
}

/// Pair a k-wedge against an (n-k)-wedge into the top exterior power
/// (one complex number): the coefficient of `e_0 ^ ... ^ e_{n-1}` in
/// `front ^ back`. Bilinear — no conjugation — so holomorphic inputs give a
/// holomorphic scalar; this is the determinant pairing behind the
/// eigenvalue-detection function.
pub fn full_pairing(
    front_basis: &WedgeBasis,
    front: &WedgeVector,
    back_basis: &WedgeBasis,
    back: &WedgeVector,
) -> Result<Complex64> {
    front_basis.check_vector(front, "full_pairing")?;
    back_basis.check_vector(back, "full_pairing")?;
    let n = front_basis.n;
    if back_basis.n != n || front_basis.k + back_basis.k != n {
        return Err(Error::Shape {
            context: "full_pairing",
            expected: format!("complementary degrees summing to n = {n}"),
            got: format!("k = {} and {}", front_basis.k, back_basis.k),
        });
    }
    let mut total = ZERO;
    let mut complement = vec![0usize; back_basis.k];
    for (jf, subset) in front_basis.subsets.iter().enumerate() {
        let f = front.coords[jf];
        if f == ZERO {
            continue;
        }
        let mut w = 0usize;
        for t in 0..n {
            if subset.binary_search(&t).is_err() {
                complement[w] = t;
                w += 1;
            }
        }
        let jb = back_basis
            .index_of(&complement)
            .expect("complement is a valid basis subset");
        let b = back.coords[jb];
        if b == ZERO {
            continue;
        }
        // Sign of the permutation (subset, complement) relative to (0..n):
        // count inversions between the two sorted halves.
        let mut inversions = 0usize;
        for &t in &complement {
            inversions += subset.iter().filter(|&&s| s > t).count();
        }
        let sign = if inversions % 2 == 0 { ONE } else { -ONE };
        total += sign * f * b;
    }
    Ok(total)
}

/// Determinant of a k-by-k complex matrix stored row-major in `m`,
/// destroying `m`: Gaussian elimination with partial pivoting.
fn det_in_place(m: &mut [Complex64], k: usize) -> Complex64 {
    debug_assert_eq!(m.len(), k * k);
    let mut det = ONE;
    for col in 0..k {
        let mut pivot = col;
        let mut best = m[col * k + col].norm();
        for row in (col + 1)..k {
            let mag = m[row * k + col].norm();
            if mag > best {
                best = mag;
                pivot = row;
            }
        }
        if best == 0.0 {
            return ZERO;
        }
        if pivot != col {
            for j in col..k {
                m.swap(pivot * k + j, col * k + j);
            }
            det = -det;
        }
        let diag = m[col * k + col];
        det *= diag;
        for row in (col + 1)..k {
            let factor = m[row * k + col] / diag;
            if factor == ZERO {
                continue;
            }
            for j in (col + 1)..k {
                let sub = factor * m[col * k + j];
                m[row * k + j] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e(n: usize, i: usize) -> Array1<Complex64> {
        let mut v = Array1::from_elem(n, ZERO);
        v[i] = ONE;
        v
    }

    /// Independent oracle: determinant by recursive cofactor expansion.
    fn cofactor_det(m: &Array2<Complex64>) -> Complex64 {
        let n = m.nrows();
        if n == 1 {
            return m[[0, 0]];
        }
        let mut acc = ZERO;
        for col in 0..n {
            let mut minor = Array2::from_elem((n - 1, n - 1), ZERO);
            for r in 1..n {
                let mut cc = 0;
                for ccol in 0..n {
                    if ccol == col {
                        continue;
                    }
                    minor[[r - 1, cc]] = m[[r, ccol]];
                    cc += 1;
                }
            }
            let sign = if col % 2 == 0 { ONE } else { -ONE };
            acc += sign * m[[0, col]] * cofactor_det(&minor);
        }
        acc
    }

    /// Independent oracle for wedge coordinates: cofactor minors.
    fn wedge_oracle(basis: &WedgeBasis, factors: &[Array1<Complex64>]) -> Array1<Complex64> {
        let k = basis.k();
        let mut coords = Array1::from_elem(basis.dim(), ZERO);
        for (j, subset) in basis.subsets().iter().enumerate() {
            let mut minor = Array2::from_elem((k, k), ZERO);
            for (row, &s) in subset.iter().enumerate() {
                for (col, f) in factors.iter().enumerate() {
                    minor[[row, col]] = f[s];
                }
            }
            coords[j] = cofactor_det(&minor);
        }
        coords
    }

    fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Array1<Complex64> {
        Array1::from_iter((0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Array2<Complex64> {
        Array2::from_shape_fn((n, n), |_| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    #[test]
    fn basis_dimensions_and_order() {
        let b = WedgeBasis::new(4, 2).unwrap();
        assert_eq!(b.dim(), 6);
        assert_eq!(
            b.subsets(),
            &[
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(b.index_of(&[1, 3]), Some(4));
        assert_eq!(b.index_of(&[3, 1]), None);
        assert!(WedgeBasis::new(3, 0).is_err());
        assert!(WedgeBasis::new(3, 4).is_err());
    }

    #[test]
    fn k1_is_the_identity_representation() {
        let b = WedgeBasis::new(3, 1).unwrap();
        assert_eq!(b.dim(), 3);
        let v = array![c(1.0, 2.0), c(0.5, 0.0), c(0.0, -1.0)];
        let w = b.wedge(&[v.clone()]).unwrap();
        assert_eq!(w.coords, v);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_matrix(&mut rng, 3);
        let m = b.induced_matrix(&a).unwrap();
        assert_eq!(m, a);
    }

    #[test]
    fn wedge_of_basis_vectors() {
        let b = WedgeBasis::new(3, 2).unwrap();
        let w = b.wedge(&[e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(w.coords, array![ONE, ZERO, ZERO]);
        let w2 = b.wedge(&[e(3, 1), e(3, 0)]).unwrap();
        assert_eq!(w2.coords, array![-ONE, ZERO, ZERO]);
    }

    #[test]
    fn wedge_coordinates_worked_example() {
        // Factors (1, i, 0) and (0, 1, i) in C^3: minors over row pairs
        // {0,1}, {0,2}, {1,2} are 1, i, -1.
        let b = WedgeBasis::new(3, 2).unwrap();
        let x = array![ONE, c(0.0, 1.0), ZERO];
        let y = array![ZERO, ONE, c(0.0, 1.0)];
        let w = b.wedge(&[x, y]).unwrap();
        assert!((w.coords[0] - ONE).norm() < 1e-15);
        assert!((w.coords[1] - c(0.0, 1.0)).norm() < 1e-15);
        assert!((w.coords[2] - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn wedge_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &(n, k) in &[(2usize, 1usize), (3, 2), (4, 2), (5, 3), (6, 4)] {
            let b = WedgeBasis::new(n, k).unwrap();
            let factors: Vec<_> = (0..k).map(|_| random_vector(&mut rng, n)).collect();
            let got = b.wedge(&factors).unwrap();
            let want = wedge_oracle(&b, &factors);
            for j in 0..b.dim() {
                assert!((got.coords[j] - want[j]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn repeated_factor_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = WedgeBasis::new(4, 2).unwrap();
        let v = random_vector(&mut rng, 4);
        let w = b.wedge(&[v.clone(), v]).unwrap();
        assert!(w.norm() < 1e-14);
    }

    #[test]
    fn gram_determinant_equals_coordinate_pairing() {
        // 200 random instances across shapes, fixed seed.
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let shapes = [(2usize, 1usize), (3, 2), (4, 2), (5, 3)];
        for trial in 0..200 {
            let (n, k) = shapes[trial % shapes.len()];
            let b = WedgeBasis::new(n, k).unwrap();
            let x: Vec<_> = (0..k).map(|_| random_vector(&mut rng, n)).collect();
            let y: Vec<_> = (0..k).map(|_| random_vector(&mut rng, n)).collect();
            let via_gram = wedge_inner_product(&x, &y).unwrap();
            let wx = b.wedge(&x).unwrap();
            let wy = b.wedge(&y).unwrap();
            let via_coords = hdot(wx.coords.view(), wy.coords.view());
            assert!(
                (via_gram - via_coords).norm() < 1e-10,
                "trial {trial}: {via_gram} vs {via_coords}"
            );
        }
    }

    #[test]
    fn self_pairing_is_real_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x: Vec<_> = (0..2).map(|_| random_vector(&mut rng, 4)).collect();
            let p = wedge_inner_product(&x, &x).unwrap();
            assert!(p.im.abs() < 1e-12);
            assert!(p.re >= -1e-12);
        }
    }

    #[test]
    fn induced_matrix_golden_six_by_six() {
        // Generic 4x4 with distinct exact entries a[r][c] = 10(r+1) + (c+1);
        // all sums below are exact in f64, so equality is exact.
        let a = Array2::from_shape_fn((4, 4), |(r, c)| c((10 * (r + 1) + c + 1) as f64, 0.0));
        let g = |r: usize, cc: usize| a[[r - 1, cc - 1]]; // 1-based view
        let b = WedgeBasis::new(4, 2).unwrap();
        let m = b.induced_matrix(&a).unwrap();
        #[rustfmt::skip]
        let expected = [
            [g(1,1)+g(2,2), g(2,3),        g(2,4),        -g(1,3),       -g(1,4),       ZERO          ],
            [g(3,2),        g(1,1)+g(3,3), g(3,4),        g(1,2),        ZERO,          -g(1,4)       ],
            [g(4,2),        g(4,3),        g(1,1)+g(4,4), ZERO,          g(1,2),        g(1,3)        ],
            [-g(3,1),       g(2,1),        ZERO,          g(2,2)+g(3,3), g(3,4),        -g(2,4)       ],
            [-g(4,1),       ZERO,          g(2,1),        g(4,3),        g(2,2)+g(4,4), g(2,3)        ],
            [ZERO,          -g(4,1),       g(3,1),        -g(4,2),       g(3,2),        g(3,3)+g(4,4) ],
        ];
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(m[[i, j]], expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn induced_matrix_of_diagonal_is_diagonal_of_sums() {
        let d = Array2::from_diag(&array![c(1.0, 0.5), c(-2.0, 0.0), c(0.0, 3.0)]);
        let b = WedgeBasis::new(3, 2).unwrap();
        let m = b.induced_matrix(&d).unwrap();
        let want = [
            d[[0, 0]] + d[[1, 1]],
            d[[0, 0]] + d[[2, 2]],
            d[[1, 1]] + d[[2, 2]],
        ];
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { want[i] } else { ZERO };
                assert_eq!(m[[i, j]], expect);
            }
        }
    }

    #[test]
    fn full_pairing_matches_full_determinant() {
        // front ^ back assembled from columns x1..xn equals det [x1 .. xn].
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for &(n, k) in &[(2usize, 1usize), (4, 2), (5, 2), (5, 3)] {
            let bf = WedgeBasis::new(n, k).unwrap();
            let bb = WedgeBasis::new(n, n - k).unwrap();
            let cols: Vec<_> = (0..n).map(|_| random_vector(&mut rng, n)).collect();
            let front = bf.wedge(&cols[..k]).unwrap();
            let back = bb.wedge(&cols[k..]).unwrap();
            let paired = full_pairing(&bf, &front, &bb, &back).unwrap();
            let mut full = Array2::from_elem((n, n), ZERO);
            for (j, col) in cols.iter().enumerate() {
                full.column_mut(j).assign(col);
            }
            let det = cofactor_det(&full);
            assert!(
                (paired - det).norm() < 1e-10 * (1.0 + det.norm()),
                "n={n} k={k}: {paired} vs {det}"
            );
        }
    }

    #[test]
    fn decomposability_residual_detects_non_wedges() {
        let b = WedgeBasis::new(4, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let x = random_vector(&mut rng, 4);
        let y = random_vector(&mut rng, 4);
        let w = b.wedge(&[x, y]).unwrap();
        assert!(b.decomposability_residual(&w).unwrap() < 1e-12);
        // e0^e1 + e2^e3 is the classical non-decomposable 2-vector.
        let mut coords = Array1::from_elem(6, ZERO);
        coords[b.index_of(&[0, 1]).unwrap()] = ONE;
        coords[b.index_of(&[2, 3]).unwrap()] = ONE;
        let nd = WedgeVector::from_coords(&b, coords).unwrap();
        assert!(b.decomposability_residual(&nd).unwrap() > 0.1);
    }

    #[test]
    fn k_sum_spectrum_single_instance() {
        use ndarray_linalg::Eig;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = random_matrix(&mut rng, 4);
        let b = WedgeBasis::new(4, 2).unwrap();
        let m = b.induced_matrix(&a).unwrap();
        let (base, _) = a.eig().unwrap();
        let (induced, _) = m.eig().unwrap();
        let mut sums: Vec<Complex64> = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                sums.push(base[i] + base[j]);
            }
        }
        let mut got: Vec<Complex64> = induced.to_vec();
        // Greedy nearest matching between the two multisets.
        for s in &sums {
            let (best, _) = got
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    (*a - s).norm().partial_cmp(&(*b - s).norm()).unwrap()
                })
                .unwrap();
            let diff = (got[best] - s).norm();
            assert!(diff < 1e-8, "eigenvalue sum {s} unmatched: nearest {diff:.3e}");
            got.remove(best);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn swapping_factors_negates(seed in 0u64..1_000_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b = WedgeBasis::new(4, 3).unwrap();
            let mut factors: Vec<_> = (0..3).map(|_| random_vector(&mut rng, 4)).collect();
            let w1 = b.wedge(&factors).unwrap();
            factors.swap(0, 2);
            let w2 = b.wedge(&factors).unwrap();
            for j in 0..b.dim() {
                prop_assert!((w1.coords[j] + w2.coords[j]).norm() < 1e-12);
            }
        }

        #[test]
        fn wedge_is_linear_in_each_factor(seed in 0u64..1_000_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b = WedgeBasis::new(4, 2).unwrap();
            let x1 = random_vector(&mut rng, 4);
            let x2 = random_vector(&mut rng, 4);
            let y = random_vector(&mut rng, 4);
            let alpha = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let lhs = b.wedge(&[&x1 + &x2.mapv(|z| z * alpha), y.clone()]).unwrap();
            let w1 = b.wedge(&[x1, y.clone()]).unwrap();
            let w2 = b.wedge(&[x2, y]).unwrap();
            for j in 0..b.dim() {
                let want = w1.coords[j] + alpha * w2.coords[j];
                prop_assert!((lhs.coords[j] - want).norm() < 1e-12);
            }
        }

        #[test]
        fn leibniz_action_matches_induced_matrix(seed in 0u64..1_000_000, nk in 0usize..4) {
            let shapes = [(3usize, 2usize), (4, 2), (5, 3), (4, 3)];
            let (n, k) = shapes[nk];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b = WedgeBasis::new(n, k).unwrap();
            let a = random_matrix(&mut rng, n);
            let factors: Vec<_> = (0..k).map(|_| random_vector(&mut rng, n)).collect();
            let m = b.induced_matrix(&a).unwrap();
            let w = b.wedge(&factors).unwrap();
            let via_matrix = m.dot(&w.coords);
            // Leibniz: sum_j y_1 ^ .. ^ A y_j ^ .. ^ y_k
            let mut via_leibniz = Array1::from_elem(b.dim(), ZERO);
            for j in 0..k {
                let mut modified = factors.clone();
                modified[j] = a.dot(&factors[j]);
                via_leibniz = via_leibniz + b.wedge(&modified).unwrap().coords;
            }
            for t in 0..b.dim() {
                prop_assert!(
                    (via_matrix[t] - via_leibniz[t]).norm() < 1e-10,
                    "coordinate {}: {} vs {}", t, via_matrix[t], via_leibniz[t]
                );
            }
        }
    }
}
