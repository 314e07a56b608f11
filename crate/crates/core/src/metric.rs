//! Inner products on Lie algebras, the Levi-Civita connection of the
//! associated left-invariant metric, and the geodesic / totally geodesic
//! predicates.
//!
//! Everything is exact. Orthogonal (never orthonormal) bases are used
//! throughout: all predicates here are invariant under rescaling individual
//! basis vectors, so no square roots are needed.

use num_traits::{One, Signed, Zero};

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

/// Symmetric positive-definite Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    gram: Matrix,
    inverse: Matrix,
}

impl Metric {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotPositiveDefinite("Gram matrix is not square".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotPositiveDefinite("Gram matrix is not symmetric".into()));
        }
        if let Some((k, m)) = gram
            .leading_principal_minors()
            .into_iter()
            .enumerate()
            .find(|(_, m)| !m.is_positive())
        {
            return Err(Error::NotPositiveDefinite(format!("leading principal minor {} is {m}", k + 1)));
        }
        let inverse = gram.inverse().ok_or(Error::Singular)?;
        Ok(Metric { gram, inverse })
    }

    pub fn standard(n: usize) -> Self {
        Metric { gram: Matrix::identity(n), inverse: Matrix::identity(n) }
    }

    /// The inner product for which the given basis is orthonormal.
    pub fn declaring_orthonormal(basis: &[Vector]) -> Result<Self> {
        let ones = vec![Scalar::one(); basis.len()];
        Self::declaring_orthogonal(basis, &ones)
    }

    /// The inner product for which `basis` is orthogonal with the given
    /// squared norms.
    pub fn declaring_orthogonal(basis: &[Vector], norms_sq: &[Scalar]) -> Result<Self> {
        let n = basis.len();
        if norms_sq.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: norms_sq.len() });
        }
        if basis.iter().any(|b| b.len() != n) {
            return Err(Error::InvalidArgument("basis vectors must have length equal to their count".into()));
        }
        // rows of P are the basis vectors; P G P^T = D  =>  G = P^{-1} D P^{-T}
        let p = Matrix::from_rows(basis, n);
        let p_inv = p.inverse().ok_or(Error::Singular)?;
        let d = Matrix::diagonal(norms_sq);
        Self::new(p_inv.mul(&d).mul(&p_inv.transpose()))
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.gram.apply(y))
    }

    pub fn norm_sq(&self, x: &Vector) -> Scalar {
        self.inner(x, x)
    }

    /// The vector `v` with `<v, w> = a . w` for all `w`.
    pub fn dual(&self, functional: &Vector) -> Vector {
        self.inverse.apply(functional)
    }

    pub fn lower(&self, v: &Vector) -> Vector {
        self.gram.apply(v)
    }

    /// Gram matrix of a list of vectors.
    pub fn gram_of(&self, vs: &[Vector]) -> Matrix {
        let lowered: Vec<Vector> = vs.iter().map(|v| self.lower(v)).collect();
        let mut m = Matrix::zeros(vs.len(), vs.len());
        for i in 0..vs.len() {
            for j in i..vs.len() {
                let x = vs[i].dot(&lowered[j]);
                m.set(i, j, x.clone());
                m.set(j, i, x);
            }
        }
        m
    }
}

/// Witness for a failed totally-geodesic check: `X` in the complement,
/// `Y`, `Z` in the subalgebra, with `<[X,Y],Z> + <[X,Z],Y> = value != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TgWitness {
    pub x: Vector,
    pub y: Vector,
    pub z: Vector,
    /// 1-based positions of `x` in the complement basis and of `y`, `z` in the
    /// subalgebra basis.
    pub indices: (usize, usize, usize),
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TgReport {
    pub totally_geodesic: bool,
    pub witness: Option<TgWitness>,
    pub complement_invariant: bool,
    pub complement: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicReport {
    pub geodesic: bool,
    /// `f(y)`, the metric dual of `X -> <[X, y], y>`.
    pub defect: Vector,
    /// `<f(y), f(y)>`
    pub residual_norm_sq: Scalar,
}

#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    metric: Metric,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: Metric) -> Result<Self> {
        if algebra.dim() != metric.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: metric.dim() });
        }
        Ok(MetricLieAlgebra { algebra, metric })
    }

    pub fn standard(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        MetricLieAlgebra { algebra, metric: Metric::standard(n) }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Scalar {
        self.metric.inner(x, y)
    }

    pub fn orthogonal_complement(&self, w: &Subspace) -> Subspace {
        let n = self.dim();
        if w.is_zero() {
            return Subspace::full(n);
        }
        let lowered: Vec<Vector> = w.basis().iter().map(|b| self.metric.lower(b)).collect();
        Subspace::span(n, Matrix::from_rows(&lowered, n).kernel())
    }

    /// Orthogonal projection of `x` onto `w`.
    pub fn project(&self, w: &Subspace, x: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        if w.is_zero() {
            return Err(Error::InvalidArgument("projection onto the zero subspace".into()));
        }
        Ok(Projector::new(&self.metric, w).project(x))
    }

    /// `∇_x y` for left-invariant fields, solved from the Koszul formula.
    pub fn levi_civita(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let g = &self.algebra;
        let gx = self.metric.lower(x);
        let gy = self.metric.lower(y);
        let gxy = self.metric.lower(&g.br(x, y));
        let two = Scalar::from_integer(2.into());
        let (ax, ay) = (g.ad_transpose(x, &gy), g.ad_transpose(y, &gx));
        let rhs: Vec<Scalar> = (0..self.dim()).map(|k| (&gxy[k] + &ax[k] + &ay[k]) / &two).collect();
        Ok(self.metric.dual(&Vector::new(rhs)))
    }

    /// `f(y)`: the metric dual of `X -> <[X, y], y>`.
    pub fn geodesic_defect(&self, y: &Vector) -> Result<Vector> {
        self.check_len(y)?;
        let g = &self.algebra;
        let gy = self.metric.lower(y);
        Ok(self.metric.dual(&g.ad_transpose(y, &gy)))
    }

    pub fn is_geodesic(&self, y: &Vector) -> Result<GeodesicReport> {
        self.check_len(y)?;
        if y.is_zero() {
            return Err(Error::ZeroVector);
        }
        let defect = self.geodesic_defect(y)?;
        let residual_norm_sq = if defect.is_zero() { Scalar::zero() } else { self.metric.norm_sq(&defect) };
        Ok(GeodesicReport { geodesic: defect.is_zero(), defect, residual_norm_sq })
    }

    fn require_subalgebra(&self, h: &Subspace) -> Result<()> {
        if h.ambient() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: h.ambient() });
        }
        if !self.algebra.is_subalgebra(h) {
            return Err(Error::NotSubalgebra);
        }
        Ok(())
    }

    /// Checks `<[X,Y],Z> + <[X,Z],Y> = 0` for `X` in `h⊥` and `Y, Z` in `h`
    /// over basis triples; the first violation in lexicographic order is kept.
    pub fn is_totally_geodesic(&self, h: &Subspace) -> Result<TgReport> {
        self.require_subalgebra(h)?;
        let g = &self.algebra;
        let perp = self.orthogonal_complement(h);
        let hb = h.basis();
        let lowered: Vec<Vector> = hb.iter().map(|v| self.metric.lower(v)).collect();
        let mut witness = None;
        'outer: for (a, x) in perp.basis().iter().enumerate() {
            let brackets: Vec<Vector> = hb.iter().map(|y| g.br(x, y)).collect();
            for b in 0..hb.len() {
                for c in b..hb.len() {
                    let value = brackets[b].dot(&lowered[c]) + brackets[c].dot(&lowered[b]);
                    if !value.is_zero() {
                        witness = Some(TgWitness {
                            x: x.clone(),
                            y: hb[b].clone(),
                            z: hb[c].clone(),
                            indices: (a + 1, b + 1, c + 1),
                            value,
                        });
                        break 'outer;
                    }
                }
            }
        }
        let complement_invariant = self.complement_invariant(h, &perp);
        let totally_geodesic = witness.is_none();
        if complement_invariant && !totally_geodesic {
            return Err(Error::Internal(format!("invariant complement but {h} fails the totally geodesic test")));
        }
        Ok(TgReport { totally_geodesic, witness, complement_invariant, complement: perp })
    }

    fn complement_invariant(&self, h: &Subspace, perp: &Subspace) -> bool {
        let g = &self.algebra;
        perp.basis().iter().all(|x| h.basis().iter().all(|y| perp.contains(&g.br(x, y))))
    }

    /// Whether `[X, Y] ∈ h⊥` for all `X ∈ h⊥`, `Y ∈ h`.
    pub fn is_invariant_complement(&self, h: &Subspace) -> Result<bool> {
        Ok(self.is_totally_geodesic(h)?.complement_invariant)
    }

    /// `φ(x): Y -> π_h [x, Y]` as a matrix in the canonical basis of `h`
    /// (column `j` holds the image of the `j`-th basis vector).
    pub fn phi_map(&self, h: &Subspace, x: &Vector) -> Result<Matrix> {
        self.require_subalgebra(h)?;
        self.check_len(x)?;
        let perp = self.orthogonal_complement(h);
        if !perp.contains(x) {
            return Err(Error::NotInSubspace("orthogonal complement of h"));
        }
        let proj = Projector::new(&self.metric, h);
        let cols: Vec<Vec<Scalar>> = h.basis().iter().map(|y| proj.coordinates(&self.algebra.br(x, y))).collect();
        Ok(columns_to_matrix(&cols, h.dim()))
    }

    /// `ψ(y): X -> π_⊥ [y, X]` as a matrix in the canonical basis of `h⊥`.
    pub fn psi_map(&self, h: &Subspace, y: &Vector) -> Result<Matrix> {
        self.require_subalgebra(h)?;
        self.check_len(y)?;
        if !h.contains(y) {
            return Err(Error::NotInSubspace("h"));
        }
        let perp = self.orthogonal_complement(h);
        if perp.is_zero() {
            return Ok(Matrix::zeros(0, 0));
        }
        let proj = Projector::new(&self.metric, &perp);
        let cols: Vec<Vec<Scalar>> =
            perp.basis().iter().map(|x| proj.coordinates(&self.algebra.br(y, x))).collect();
        Ok(columns_to_matrix(&cols, perp.dim()))
    }

    /// Every `ad(X_i)` skew-adjoint.
    pub fn is_bi_invariant(&self) -> bool {
        let gram = self.metric.gram();
        (1..=self.dim()).all(|i| {
            let ad = self.algebra.ad(&self.algebra.basis_vector(i));
            let ga = gram.mul(&ad);
            ga.add(&ga.transpose()).is_zero()
        })
    }

    /// Orthogonalizes `basis` starting from its last vector, so that the
    /// result `E` has `span(E_k..E_n) = span(B_k..B_n)` for every `k`.
    /// Vectors are not normalized.
    pub fn gram_schmidt_adapted(&self, basis: &[Vector]) -> Result<Vec<Vector>> {
        let n = self.dim();
        if basis.len() != n || basis.iter().any(|b| b.len() != n) {
            return Err(Error::InvalidArgument(format!("expected {n} vectors of length {n}")));
        }
        if Matrix::from_rows(basis, n).rank() < n {
            return Err(Error::InvalidArgument("vectors do not form a basis".into()));
        }
        let mut out: Vec<Vector> = Vec::with_capacity(n);
        let mut norms: Vec<Scalar> = Vec::with_capacity(n);
        for b in basis.iter().rev() {
            let mut e = b.clone();
            let gb = self.metric.lower(b);
            for (prev, nrm) in out.iter().zip(&norms) {
                let c = -(gb.dot(prev) / nrm);
                e.add_scaled(&c, prev);
            }
            norms.push(self.metric.norm_sq(&e));
            out.push(e);
        }
        out.reverse();
        Ok(out)
    }

    pub fn with_metric(&self, metric: Metric) -> Result<Self> {
        Self::new(self.algebra.clone(), metric)
    }

    pub fn subalgebra(&self, h: Subspace) -> Result<Subalgebra> {
        self.algebra.subalgebra(h)
    }
}

fn columns_to_matrix(cols: &[Vec<Scalar>], rows: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    m
}

/// Orthogonal projection onto a fixed subspace.
pub(crate) struct Projector<'a> {
    metric: &'a Metric,
    basis: &'a [Vector],
    gram_inv: Matrix,
}

impl<'a> Projector<'a> {
    pub(crate) fn new(metric: &'a Metric, w: &'a Subspace) -> Self {
        let gram_inv = metric.gram_of(w.basis()).inverse().expect("restricted Gram matrix is positive definite");
        Projector { metric, basis: w.basis(), gram_inv }
    }

    /// Coordinates of the projection in the subspace basis.
    pub(crate) fn coordinates(&self, v: &Vector) -> Vec<Scalar> {
        let gv = self.metric.lower(v);
        let rhs = Vector::new(self.basis.iter().map(|b| b.dot(&gv)).collect());
        self.gram_inv.apply(&rhs).into_coords()
    }

    pub(crate) fn project(&self, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.len());
        for (c, b) in self.coordinates(v).iter().zip(self.basis) {
            out.add_scaled(c, b);
        }
        out
    }
}

/// An inner product for which `y` is a geodesic, when one exists: a basis of
/// `im ad(y)`, then `y`, then coordinate vectors, declared orthonormal.
pub fn construct_geodesic_metric(g: &LieAlgebra, y: &Vector) -> Result<Metric> {
    let n = g.dim();
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    if y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let image = Subspace::span(n, (1..=n).map(|i| g.br(y, &g.basis_vector(i))));
    if image.contains(y) {
        return Err(Error::NoGeodesicMetric);
    }
    let mut basis: Vec<Vector> = image.basis().to_vec();
    basis.push(y.clone());
    let mut span = Subspace::span(n, basis.iter().cloned());
    for i in 1..=n {
        if basis.len() == n {
            break;
        }
        let e = Vector::unit(n, i);
        if !span.contains(&e) {
            span = span.with_vectors([e.clone()]);
            basis.push(e);
        }
    }
    let metric = Metric::declaring_orthonormal(&basis)?;
    let mg = MetricLieAlgebra::new(g.clone(), metric.clone())?;
    if !mg.is_geodesic(y)?.geodesic {
        return Err(Error::Internal(format!("constructed metric does not make {y} a geodesic")));
    }
    Ok(metric)
}

/// The metric given by the negative of the Killing form.
pub fn killing_metric(g: &LieAlgebra) -> Result<Metric> {
    let neg = g.killing_form().scale(&-Scalar::one());
    Metric::new(neg).map_err(|_| Error::NotCompactType)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filiform::catalog;
    use crate::linalg::{frac, int};

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn metric_rejects_semidefinite_and_asymmetric() {
        assert!(Metric::new(Matrix::from_ints(&[&[1, 0], &[0, 0]])).is_err());
        assert!(Metric::new(Matrix::from_ints(&[&[1, 1], &[0, 1]])).is_err());
        assert!(Metric::new(Matrix::from_ints(&[&[1, 2], &[2, 1]])).is_err());
        assert!(Metric::new(Matrix::from_ints(&[&[2, 1], &[1, 2]])).is_ok());
    }

    #[test]
    fn declared_orthonormal_basis_is_orthonormal() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 2]), v(&[0, 0, 3])];
        let m = Metric::declaring_orthonormal(&basis).unwrap();
        assert_eq!(m.gram_of(&basis), Matrix::identity(3));
    }

    #[test]
    fn complements_and_projections() {
        let l4 = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
        let w = Subspace::coordinate(4, &[2, 4]);
        assert_eq!(l4.orthogonal_complement(&w), Subspace::coordinate(4, &[1, 3]));
        let x = v(&[0, 3, 0, -2]);
        assert_eq!(l4.project(&w, &x).unwrap(), x);

        let cd = crate::filiform::cd2f_construction(5).unwrap();
        let mg = MetricLieAlgebra::new(cd.algebra.clone(), cd.metric.clone()).unwrap();
        let e = &cd.basis;
        let w = Subspace::span(5, [&e[1] - &e[3], e[2].clone(), e[4].clone()]);
        let expected = Subspace::span(5, [e[0].clone(), &e[1] + &e[3]]);
        assert_eq!(mg.orthogonal_complement(&w), expected);

        let y = v(&[1, -1, 2, 0, 5]);
        let p1 = mg.project(&w, &y).unwrap();
        let p2 = mg.project(&expected, &y).unwrap();
        assert_eq!(&p1 + &p2, y);
    }

    #[test]
    fn connection_on_heisenberg() {
        let l3 = MetricLieAlgebra::standard(catalog::standard_filiform(3).unwrap());
        let (x1, x2) = (v(&[1, 0, 0]), v(&[0, 1, 0]));
        let half = Vector::new(vec![int(0), int(0), frac(1, 2)]);
        assert_eq!(l3.levi_civita(&x1, &x2).unwrap(), half);
        assert!(l3.levi_civita(&x1, &x1).unwrap().is_zero());

        let ab = MetricLieAlgebra::new(
            LieAlgebra::abelian(3),
            Metric::new(Matrix::from_ints(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]])).unwrap(),
        )
        .unwrap();
        assert!(ab.levi_civita(&v(&[1, 2, 3]), &v(&[0, -1, 4])).unwrap().is_zero());
    }

    #[test]
    fn geodesic_examples() {
        let solv = MetricLieAlgebra::standard(catalog::solv_exp());
        let y = v(&[0, 1, 0]);
        let r = solv.is_geodesic(&y).unwrap();
        assert!(!r.geodesic);
        assert_eq!(r.defect, v(&[1, 0, 0]));
        assert_eq!(r.residual_norm_sq, int(1));

        let l5 = MetricLieAlgebra::standard(catalog::standard_filiform(5).unwrap());
        assert!(l5.is_geodesic(&v(&[0, 1, 0, 0, 0])).unwrap().geodesic);
        assert!(matches!(l5.is_geodesic(&Vector::zeros(5)), Err(Error::ZeroVector)));
        assert!(l5.geodesic_defect(&Vector::zeros(5)).unwrap().is_zero());

        let so3 = MetricLieAlgebra::new(
            catalog::so3(),
            Metric::new(Matrix::diagonal(&[int(1), int(2), int(3)])).unwrap(),
        )
        .unwrap();
        for i in 1..=3 {
            assert!(so3.is_geodesic(&Vector::unit(3, i)).unwrap().geodesic);
        }
        assert!(!so3.is_geodesic(&v(&[1, 1, 0])).unwrap().geodesic);

        let l3 = MetricLieAlgebra::standard(catalog::standard_filiform(3).unwrap());
        assert!(l3.geodesic_defect(&v(&[0, 1, 0])).unwrap().is_zero());
    }

    #[test]
    fn totally_geodesic_examples() {
        let rot = MetricLieAlgebra::standard(catalog::solv_rot());
        let h = Subspace::coordinate(3, &[2, 3]);
        let r = rot.is_totally_geodesic(&h).unwrap();
        assert!(r.totally_geodesic);
        assert!(!r.complement_invariant);
        assert!(!rot.is_invariant_complement(&h).unwrap());

        for n in 3..=9 {
            let ln = MetricLieAlgebra::standard(catalog::standard_filiform(n).unwrap());
            let evens: Vec<usize> = (2..=n).step_by(2).collect();
            assert!(ln.is_totally_geodesic(&Subspace::coordinate(n, &evens)).unwrap().totally_geodesic);
            assert!(ln.is_invariant_complement(&Subspace::coordinate(n, &[n])).unwrap());
        }

        let l4 = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
        let r = l4.is_totally_geodesic(&Subspace::coordinate(4, &[2, 3])).unwrap();
        assert!(!r.totally_geodesic);
        let w = r.witness.unwrap();
        assert_eq!((w.x, w.y, w.z), (v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])));
        assert_eq!(w.value, int(1));

        assert!(matches!(l4.is_totally_geodesic(&Subspace::coordinate(4, &[1, 2])), Err(Error::NotSubalgebra)));
    }

    #[test]
    fn phi_and_psi_maps() {
        let rot = MetricLieAlgebra::standard(catalog::solv_rot());
        let h = Subspace::coordinate(3, &[2, 3]);
        let phi = rot.phi_map(&h, &v(&[1, 0, 0])).unwrap();
        assert_eq!(phi, Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        assert!(matches!(rot.phi_map(&h, &v(&[0, 1, 0])), Err(Error::NotInSubspace(_))));

        let l6 = MetricLieAlgebra::standard(catalog::standard_filiform(6).unwrap());
        let h = Subspace::coordinate(6, &[2, 4, 6]);
        let psi = l6.psi_map(&h, &v(&[0, 1, 0, 0, 0, 0])).unwrap();
        assert!(psi.pow(3).is_zero());
        assert!(matches!(l6.psi_map(&h, &v(&[1, 0, 0, 0, 0, 0])), Err(Error::NotInSubspace(_))));

        let central = Subspace::coordinate(6, &[6]);
        assert!(l6.psi_map(&central, &v(&[0, 0, 0, 0, 0, 1])).unwrap().is_zero());
        assert!(l6.phi_map(&central, &v(&[1, 2, 3, 4, 5, 0])).unwrap().is_zero());
    }

    #[test]
    fn geodesic_metric_construction() {
        let l4 = catalog::standard_filiform(4).unwrap();
        let m = construct_geodesic_metric(&l4, &v(&[0, 0, 1, 0])).unwrap();
        let mg = MetricLieAlgebra::new(l4.clone(), m).unwrap();
        assert!(mg.is_geodesic(&v(&[0, 0, 1, 0])).unwrap().geodesic);
        assert!(MetricLieAlgebra::standard(l4).is_geodesic(&v(&[0, 0, 1, 0])).unwrap().geodesic);

        let solv = catalog::solv_exp();
        assert!(matches!(construct_geodesic_metric(&solv, &v(&[0, 1, 0])), Err(Error::NoGeodesicMetric)));
        assert!(construct_geodesic_metric(&solv, &v(&[1, 0, 0])).is_ok());
    }

    #[test]
    fn bi_invariance() {
        let so3 = catalog::so3();
        let km = killing_metric(&so3).unwrap();
        assert_eq!(km.gram(), &Matrix::diagonal(&[int(2), int(2), int(2)]));
        assert!(MetricLieAlgebra::new(so3, km).unwrap().is_bi_invariant());
        assert!(MetricLieAlgebra::standard(LieAlgebra::abelian(3)).is_bi_invariant());
        assert!(!MetricLieAlgebra::standard(catalog::standard_filiform(3).unwrap()).is_bi_invariant());
        assert!(matches!(killing_metric(&catalog::sl2()), Err(Error::NotCompactType)));
        assert!(matches!(killing_metric(&catalog::standard_filiform(3).unwrap()), Err(Error::NotCompactType)));
    }

    #[test]
    fn adapted_gram_schmidt() {
        let mut gram = Matrix::identity(4);
        gram.set(1, 2, frac(1, 2));
        gram.set(2, 1, frac(1, 2));
        let mg = MetricLieAlgebra::new(catalog::standard_filiform(4).unwrap(), Metric::new(gram).unwrap()).unwrap();
        let b: Vec<Vector> = (1..=4).map(|i| Vector::unit(4, i)).collect();
        let e = mg.gram_schmidt_adapted(&b).unwrap();
        assert_eq!(e[0], v(&[1, 0, 0, 0]));
        assert_eq!(e[1], Vector::new(vec![int(0), int(1), frac(-1, 2), int(0)]));
        assert_eq!(e[2], v(&[0, 0, 1, 0]));
        assert_eq!(e[3], v(&[0, 0, 0, 1]));

        let std = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
        assert_eq!(std.gram_schmidt_adapted(&b).unwrap(), b);
        assert!(std.gram_schmidt_adapted(&[b[0].clone(), b[0].clone(), b[2].clone(), b[3].clone()]).is_err());
    }
}
