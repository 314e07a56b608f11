//! Orthogonal normal form of 4-dimensional filiform metric Lie algebras.
//!
//! The basis is kept orthogonal but not normalized, so every quantity stays
//! rational. Constants below are with respect to that basis; the
//! `*_normalized_sq` accessors give the squares of the constants one gets
//! after normalizing.

use num_traits::{Signed, Zero};

use crate::algebra::Subalgebra;
use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace, Vector};
use crate::metric::MetricLieAlgebra;

/// Orthogonal `X_1, ..., X_4` with `[X_1, X_2] = alpha X_3 + beta X_4`,
/// `[X_1, X_3] = gamma X_4`, all other brackets zero, `alpha, gamma > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourDimNormalForm {
    pub basis: Vec<Vector>,
    pub norms_sq: Vec<Scalar>,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl FourDimNormalForm {
    pub fn alpha_normalized_sq(&self) -> Scalar {
        &self.alpha * &self.alpha * &self.norms_sq[2] / (&self.norms_sq[0] * &self.norms_sq[1])
    }

    /// Signed: `sign(beta) beta_hat^2`.
    pub fn beta_normalized_sq_signed(&self) -> Scalar {
        let b2 = &self.beta * &self.beta * &self.norms_sq[3] / (&self.norms_sq[0] * &self.norms_sq[1]);
        if self.beta.is_negative() {
            -b2
        } else {
            b2
        }
    }

    pub fn gamma_normalized_sq(&self) -> Scalar {
        &self.gamma * &self.gamma * &self.norms_sq[3] / (&self.norms_sq[0] * &self.norms_sq[2])
    }

    /// Normalized `(alpha, beta, gamma)` in floating point.
    pub fn normalized_f64(&self) -> (f64, f64, f64) {
        let sq = |x: Scalar| crate::linalg::to_f64(&x);
        let b = sq(self.beta_normalized_sq_signed());
        (sq(self.alpha_normalized_sq()).sqrt(), b.signum() * b.abs().sqrt(), sq(self.gamma_normalized_sq()).sqrt())
    }

    /// `x X_2 + y X_3 + z X_4` in ambient coordinates.
    pub fn point(&self, x: &Scalar, y: &Scalar, z: &Scalar) -> Vector {
        let mut v = self.basis[1].scale(x);
        v.add_scaled(y, &self.basis[2]);
        v.add_scaled(z, &self.basis[3]);
        v
    }
}

/// Brings `mg` into the orthogonal normal form.
pub fn normalize_4d(mg: &MetricLieAlgebra) -> Result<FourDimNormalForm> {
    let g = mg.algebra();
    if g.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: g.dim() });
    }
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let d = g.derived_algebra();
    if d.dim() != 2 {
        return Err(Error::InvalidArgument(format!("derived algebra has dimension {}, expected 2", d.dim())));
    }
    let z = g.center();
    if z.dim() != 1 || !d.contains_subspace(&z) {
        return Err(Error::Internal("center of a 4-dim filiform algebra is not a line in [g,g]".into()));
    }
    let x4 = z.basis()[0].primitive();
    let x3 = d.intersection(&mg.orthogonal_complement(&z)).basis()[0].primitive();
    let dperp = mg.orthogonal_complement(&d);
    let x2 = g.centralizer_in(&dperp, &Subspace::span(4, [x3.clone()]));
    if x2.dim() != 1 {
        return Err(Error::Internal("centralizer of X_3 in [g,g]^perp is not a line".into()));
    }
    let x2 = x2.basis()[0].primitive();
    let x1 = dperp.intersection(&mg.orthogonal_complement(&Subspace::span(4, [x2.clone()]))).basis()[0].primitive();
    let mut basis = vec![x1, x2, x3, x4];

    let coords = |v: &Vector, basis: &[Vector]| -> Result<(Scalar, Scalar)> {
        let c = Subspace::span(4, [basis[2].clone(), basis[3].clone()]);
        if !c.contains(v) {
            return Err(Error::Internal("bracket leaves [g,g]".into()));
        }
        Ok((mg.inner(v, &basis[2]) / mg.inner(&basis[2], &basis[2]), mg.inner(v, &basis[3]) / mg.inner(&basis[3], &basis[3])))
    };
    let (mut alpha, mut beta) = coords(&g.br(&basis[0], &basis[1]), &basis)?;
    let (_, mut gamma) = coords(&g.br(&basis[0], &basis[2]), &basis)?;
    if alpha.is_negative() {
        basis[2] = -&basis[2];
        alpha = -alpha;
        gamma = -gamma;
    }
    if gamma.is_negative() {
        basis[3] = -&basis[3];
        beta = -beta;
        gamma = -gamma;
    }
    let norms_sq: Vec<Scalar> = basis.iter().map(|b| mg.metric().norm_sq(b)).collect();
    let nf = FourDimNormalForm { basis, norms_sq, alpha, beta, gamma };
    verify(mg, &nf)?;
    Ok(nf)
}

fn verify(mg: &MetricLieAlgebra, nf: &FourDimNormalForm) -> Result<()> {
    let g = mg.algebra();
    let b = &nf.basis;
    let fail = |what: &str| Err(Error::Internal(format!("4-dim normal form: {what}")));
    if !nf.alpha.is_positive() || !nf.gamma.is_positive() {
        return fail("alpha and gamma must be positive");
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if !mg.inner(&b[i], &b[j]).is_zero() {
                return fail("basis is not orthogonal");
            }
        }
    }
    let mut e12 = b[2].scale(&nf.alpha);
    e12.add_scaled(&nf.beta, &b[3]);
    let expected = [
        (0, 1, e12),
        (0, 2, b[3].scale(&nf.gamma)),
        (0, 3, Vector::zeros(4)),
        (1, 2, Vector::zeros(4)),
        (1, 3, Vector::zeros(4)),
        (2, 3, Vector::zeros(4)),
    ];
    for (i, j, e) in expected {
        if g.br(&b[i], &b[j]) != e {
            return fail(&format!("unexpected [X_{}, X_{}]", i + 1, j + 1));
        }
    }
    Ok(())
}

/// Whether `x X_2 + y X_3 + z X_4` lies on the geodesic cone
/// `alpha xy + beta xz + gamma yz = 0`, written in the unnormalized basis.
pub fn geodesic_cone_4d(nf: &FourDimNormalForm, x: &Scalar, y: &Scalar, z: &Scalar) -> bool {
    let (n3, n4) = (&nf.norms_sq[2], &nf.norms_sq[3]);
    let val = &nf.alpha * n3 * x * y + &nf.beta * n4 * x * z + &nf.gamma * n4 * y * z;
    val.is_zero()
}

/// The 2-dimensional totally geodesic subalgebras: none when `beta != 0`,
/// otherwise `span(X_2, X_4)` and `span(gamma X_2 - alpha X_4, X_3)` (in
/// normalized terms).
pub fn tg_2d_subalgebras_4d(mg: &MetricLieAlgebra, nf: &FourDimNormalForm) -> Result<Vec<Subalgebra>> {
    if !nf.beta.is_zero() {
        return Ok(Vec::new());
    }
    let b = &nf.basis;
    let mut mixed = b[1].scale(&(&nf.gamma * &nf.norms_sq[3]));
    mixed.add_scaled(&-(&nf.alpha * &nf.norms_sq[2]), &b[3]);
    let spans = [
        Subspace::span(4, [b[1].clone(), b[3].clone()]),
        Subspace::span(4, [mixed, b[2].clone()]),
    ];
    let mut out = Vec::new();
    for s in spans {
        let h = mg.subalgebra(s)?;
        if !mg.is_totally_geodesic(&h)?.totally_geodesic {
            return Err(Error::Internal("normal-form subalgebra is not totally geodesic".into()));
        }
        out.push(h);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filiform::catalog;
    use crate::linalg::{frac, int, Matrix};
    use crate::metric::Metric;

    #[test]
    fn standard_l4() {
        let mg = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
        let nf = normalize_4d(&mg).unwrap();
        assert_eq!((nf.alpha.clone(), nf.beta.clone(), nf.gamma.clone()), (int(1), int(0), int(1)));
        assert_eq!(nf.alpha_normalized_sq(), int(1));
        // cone y (x + z) = 0
        assert!(geodesic_cone_4d(&nf, &int(1), &int(0), &int(7)));
        assert!(geodesic_cone_4d(&nf, &int(2), &int(3), &int(-2)));
        assert!(!geodesic_cone_4d(&nf, &int(1), &int(1), &int(1)));
        let tg = tg_2d_subalgebras_4d(&mg, &nf).unwrap();
        let s = |a: &[i64], b: &[i64]| Subspace::span(4, [Vector::from_ints(a), Vector::from_ints(b)]);
        assert_eq!(tg[0].space(), &s(&[0, 1, 0, 0], &[0, 0, 0, 1]));
        assert_eq!(tg[1].space(), &s(&[0, 1, 0, -1], &[0, 0, 1, 0]));
    }

    #[test]
    fn scaled_metric() {
        let g = catalog::standard_filiform(4).unwrap();
        let gram = Matrix::diagonal(&[int(1), int(4), int(1), int(1)]);
        let mg = MetricLieAlgebra::new(g, Metric::new(gram).unwrap()).unwrap();
        let nf = normalize_4d(&mg).unwrap();
        assert_eq!(nf.gamma_normalized_sq(), int(1));
        assert_eq!(nf.alpha_normalized_sq(), frac(1, 4));
    }

    #[test]
    fn beta_nonzero() {
        let g = catalog::four_dim(&int(1), &int(1), &int(1)).unwrap();
        let mg = MetricLieAlgebra::standard(g);
        let nf = normalize_4d(&mg).unwrap();
        assert_eq!(nf.beta, int(1));
        assert!(tg_2d_subalgebras_4d(&mg, &nf).unwrap().is_empty());
    }

    #[test]
    fn rejects_wrong_shape() {
        assert!(normalize_4d(&MetricLieAlgebra::standard(catalog::standard_filiform(5).unwrap())).is_err());
        let h3r = catalog::heis3().direct_sum(&crate::algebra::LieAlgebra::abelian(1));
        assert!(normalize_4d(&MetricLieAlgebra::standard(h3r)).is_err());
    }
}
