use nalgebra::{DMatrix, DVector};
use rand::Rng;

use super::SearchBudget;
use crate::error::{Error, Result};
use crate::linalg::{rational_approximation, Vector};
use crate::metric::MetricLieAlgebra;
use crate::random;

/// Result of the numeric geodesic search.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericGeodesic {
    /// Unit vector (for the metric) in the defining coordinates.
    pub vector: Vec<f64>,
    /// Metric norm of the geodesic defect at `vector`.
    pub residual: f64,
    pub converged: bool,
    /// A rational vector near `vector` whose exact defect vanishes, if one
    /// was recovered.
    pub exact: Option<Vector>,
    pub starts_used: usize,
}

/// The defect map written in coordinates `u = L^T y` where `G = L L^T`, so
/// that the metric becomes the Euclidean one. In these coordinates
/// `f_k(u) = u^T S_k u` with symmetric `S_k`.
#[derive(Clone, Debug)]
pub struct OrthonormalFrame {
    n: usize,
    /// `y = back * u`
    back: DMatrix<f64>,
    s: Vec<DMatrix<f64>>,
}

impl OrthonormalFrame {
    pub fn new(mg: &MetricLieAlgebra) -> Result<Self> {
        let n = mg.dim();
        let gram = mg.metric().gram().to_f64();
        let g = DMatrix::from_fn(n, n, |i, j| gram[i][j]);
        let chol = g.cholesky().ok_or_else(|| Error::NotPositiveDefinite("Cholesky factorization failed".into()))?;
        let l = chol.l();
        let lt = l.transpose();
        let back = lt.clone().try_inverse().ok_or(Error::Singular)?;
        // structure constants of the algebra in floating point
        let mut consts = vec![0.0; n * n * n];
        for (i, j, k, c) in mg.algebra().nonzero_constants() {
            let c = crate::linalg::to_f64(c);
            consts[((i - 1) * n + (j - 1)) * n + (k - 1)] = c;
            consts[((j - 1) * n + (i - 1)) * n + (k - 1)] = -c;
        }
        let bracket = |x: &DVector<f64>, y: &DVector<f64>| {
            let mut out = DVector::zeros(n);
            for p in 0..n {
                if x[p] == 0.0 {
                    continue;
                }
                for q in 0..n {
                    let w = x[p] * y[q];
                    if w == 0.0 {
                        continue;
                    }
                    for k in 0..n {
                        out[k] += w * consts[(p * n + q) * n + k];
                    }
                }
            }
            out
        };
        let b: Vec<DVector<f64>> = (0..n).map(|i| back.column(i).into_owned()).collect();
        let mut s = Vec::with_capacity(n);
        for k in 0..n {
            let mut m = DMatrix::zeros(n, n);
            for i in 0..n {
                let col = &lt * bracket(&b[k], &b[i]);
                for j in 0..n {
                    m[(i, j)] = col[j];
                }
            }
            s.push((&m + m.transpose()) * 0.5);
        }
        Ok(OrthonormalFrame { n, back, s })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Defect in orthonormal coordinates.
    pub fn defect(&self, u: &DVector<f64>) -> DVector<f64> {
        DVector::from_iterator(self.n, self.s.iter().map(|s| u.dot(&(s * u))))
    }

    fn jacobian(&self, u: &DVector<f64>) -> DMatrix<f64> {
        let mut j = DMatrix::zeros(self.n, self.n);
        for (k, s) in self.s.iter().enumerate() {
            let row = s * u * 2.0;
            j.set_row(k, &row.transpose());
        }
        j
    }

    pub fn to_defining(&self, u: &DVector<f64>) -> Vec<f64> {
        (&self.back * u).iter().copied().collect()
    }
}

/// Low-discrepancy start directions: a Halton sequence with a seeded
/// Cranley-Patterson shift, mapped to the sphere.
fn starts(n: usize, count: usize, seed: u64) -> Vec<DVector<f64>> {
    const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    let mut rng = random::rng(seed);
    let shift: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let radical_inverse = |mut i: u64, b: u64| {
        let (mut f, mut r) = (1.0, 0.0);
        while i > 0 {
            f /= b as f64;
            r += f * (i % b) as f64;
            i /= b;
        }
        r
    };
    let mut out = Vec::with_capacity(count);
    let mut i = 1u64;
    while out.len() < count {
        let v = DVector::from_fn(n, |d, _| {
            let base = PRIMES[d % PRIMES.len()];
            // extra dimensions reuse primes at a different index stride
            let idx = if d < PRIMES.len() { i } else { i * 7 + d as u64 };
            let h = (radical_inverse(idx, base) + shift[d]).fract();
            2.0 * h - 1.0
        });
        i += 1;
        let norm = v.norm();
        if norm > 1e-3 {
            out.push(v / norm);
        }
    }
    out
}

fn objective(frame: &OrthonormalFrame, u: &DVector<f64>) -> f64 {
    frame.defect(u).norm_squared()
}

/// Projected gradient with Armijo backtracking, then Levenberg-Marquardt on
/// the system `(f(u), (|u|^2 - 1)/2) = 0`.
fn solve_from(frame: &OrthonormalFrame, mut u: DVector<f64>, budget: &SearchBudget) -> (DVector<f64>, f64) {
    let tol = budget.tol;
    let gradient_steps = budget.max_iterations / 4;
    let mut step = 1.0;
    let mut phi = objective(frame, &u);
    for _ in 0..gradient_steps {
        if phi.sqrt() <= tol || phi.sqrt() < 1e-4 {
            break;
        }
        let a = frame.defect(&u);
        let grad = frame.jacobian(&u).transpose() * &a;
        let tangent = &grad - &u * u.dot(&grad);
        let gsq = tangent.norm_squared();
        if gsq < 1e-30 {
            break;
        }
        let mut accepted = false;
        for _ in 0..40 {
            let cand = (&u - &tangent * step).normalize();
            let cphi = objective(frame, &cand);
            if cphi <= phi - 1e-4 * step * gsq {
                u = cand;
                phi = cphi;
                step *= 2.0;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }

    let n = frame.dim();
    let mut lambda = 1e-3;
    for _ in 0..budget.max_iterations {
        let a = frame.defect(&u);
        let r = a.norm();
        if r <= tol {
            break;
        }
        let mut j = DMatrix::zeros(n + 1, n);
        j.view_mut((0, 0), (n, n)).copy_from(&frame.jacobian(&u));
        j.set_row(n, &u.transpose());
        let mut res = DVector::zeros(n + 1);
        res.rows_mut(0, n).copy_from(&a);
        res[n] = 0.5 * (u.norm_squared() - 1.0);
        let jt = j.transpose();
        let jtj = &jt * &j;
        let rhs = &jt * &res;
        let mut improved = false;
        for _ in 0..30 {
            let mut sys = jtj.clone();
            for d in 0..n {
                sys[(d, d)] += lambda * (1.0 + jtj[(d, d)]);
            }
            if let Some(delta) = sys.lu().solve(&rhs) {
                let cand = (&u - delta).normalize();
                if frame.defect(&cand).norm() < r {
                    u = cand;
                    lambda = (lambda / 3.0).max(1e-15);
                    improved = true;
                    break;
                }
            }
            lambda *= 4.0;
        }
        if !improved {
            break;
        }
    }
    let r = frame.defect(&u).norm();
    (u, r)
}

fn reconstruct(mg: &MetricLieAlgebra, y: &[f64]) -> Option<Vector> {
    let pivot = y.iter().copied().max_by(|a, b| a.abs().total_cmp(&b.abs()))?;
    if pivot == 0.0 || !pivot.is_finite() {
        return None;
    }
    let coords = y.iter().map(|c| rational_approximation(c / pivot, 1_000_000)).collect::<Option<Vec<_>>>()?;
    let v = Vector::new(coords);
    if v.is_zero() {
        return None;
    }
    mg.geodesic_defect(&v).ok()?.is_zero().then(|| v.primitive())
}

/// Multi-start minimization of `|f(Y)|^2` on the metric unit sphere.
pub fn find_geodesic_numeric(mg: &MetricLieAlgebra, budget: &SearchBudget) -> Result<NumericGeodesic> {
    let n = mg.dim();
    if n == 0 {
        return Err(Error::InvalidArgument("algebra has dimension 0".into()));
    }
    let frame = OrthonormalFrame::new(mg)?;
    let count = (8 * n.saturating_sub(1)).max(1);
    let mut best: Option<(DVector<f64>, f64)> = None;
    let mut used = 0;
    for u0 in starts(n, count, budget.seed) {
        used += 1;
        let (u, r) = solve_from(&frame, u0, budget);
        if best.as_ref().is_none_or(|(_, br)| r < *br) {
            best = Some((u, r));
        }
        if r <= budget.tol {
            break;
        }
    }
    let (u, residual) = best.expect("at least one start");
    let vector = frame.to_defining(&u);
    let exact = reconstruct(mg, &vector);
    Ok(NumericGeodesic { vector, residual, converged: residual <= budget.tol, exact, starts_used: used })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filiform::catalog;
    use crate::linalg::{int, Matrix};
    use crate::metric::Metric;

    #[test]
    fn solvable_example_converges_to_x() {
        let mg = MetricLieAlgebra::standard(catalog::solv_exp());
        let r = find_geodesic_numeric(&mg, &SearchBudget::default()).unwrap();
        assert!(r.converged, "{r:?}");
        assert_eq!(r.exact, Some(Vector::from_ints(&[1, 0, 0])));
    }

    #[test]
    fn abelian_is_immediate() {
        let mg = MetricLieAlgebra::standard(crate::algebra::LieAlgebra::abelian(4));
        let r = find_geodesic_numeric(&mg, &SearchBudget::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.starts_used, 1);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn so3_principal_axis() {
        let gram = Matrix::diagonal(&[int(1), int(2), int(3)]);
        let mg = MetricLieAlgebra::new(catalog::so3(), Metric::new(gram).unwrap()).unwrap();
        let r = find_geodesic_numeric(&mg, &SearchBudget::default()).unwrap();
        assert!(r.converged);
        let e = r.exact.expect("axis is rational");
        assert_eq!(e.coords().iter().filter(|c| **c != int(0)).count(), 1);
    }

    #[test]
    fn defect_is_orthogonal_to_point() {
        let mut rng = random::rng(5);
        let mg = MetricLieAlgebra::new(catalog::dim6_example(), random::metric(&mut rng, 6, 2)).unwrap();
        let frame = OrthonormalFrame::new(&mg).unwrap();
        for u in starts(6, 50, 3) {
            assert!(frame.defect(&u).dot(&u).abs() <= 1e-12);
        }
    }
}
