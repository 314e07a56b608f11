//! Filiform nilpotent Lie algebras: recognition, Vergne normal form,
//! regularity, and the named constructions.

pub mod catalog;
mod four_dim;

use num_bigint::BigInt;
use num_traits::Zero;

pub use four_dim::{geodesic_cone_4d, normalize_4d, tg_2d_subalgebras_4d, FourDimNormalForm};

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar, Subspace, Vector};
use crate::metric::{Metric, MetricLieAlgebra};
use crate::random;

/// `ad(x)^{n-2} != 0`
pub fn has_maximal_rank(g: &LieAlgebra, x: &Vector) -> bool {
    let n = g.dim();
    if n < 2 {
        return false;
    }
    let ad = g.ad(x);
    (1..=n).any(|j| {
        let mut v = Vector::unit(n, j);
        for _ in 0..n - 2 {
            v = ad.apply(&v);
            if v.is_zero() {
                return false;
            }
        }
        true
    })
}

/// Candidates for a maximal-nilpotency element built from `vectors`: each
/// vector, then `v_i + t v_j` for `i < j` and `t = 1..=n`.
fn sweep(vectors: &[Vector], n: usize) -> impl Iterator<Item = Vector> + '_ {
    let singles = vectors.iter().cloned();
    let pairs = (0..vectors.len()).flat_map(move |i| {
        (i + 1..vectors.len()).flat_map(move |j| {
            (1..=n.max(2) as i64).map(move |t| {
                let mut v = vectors[i].clone();
                v.add_scaled(&int(t), &vectors[j]);
                v
            })
        })
    });
    singles.chain(pairs)
}

/// First element of maximal rank among the vectors of `span` and their
/// pairwise combinations, if the sweep finds one.
pub fn sweep_for_maximal_rank(g: &LieAlgebra, span: &[Vector]) -> Option<Vector> {
    sweep(span, g.dim()).find(|x| has_maximal_rank(g, x))
}

/// Returns a witness `X` with `ad(X)^{n-2} != 0` if `g` is filiform.
///
/// Algebras of dimension below 3 are reported as not filiform.
pub fn is_filiform(g: &LieAlgebra) -> Result<Option<Vector>> {
    let class = g.nilpotency_class().ok_or(Error::NotNilpotent)?;
    let n = g.dim();
    if n < 3 {
        return Ok(None);
    }
    let basis: Vec<Vector> = (1..=n).map(|i| Vector::unit(n, i)).collect();
    let witness = sweep_for_maximal_rank(g, &basis);
    match (&witness, class == n - 1) {
        (Some(_), false) => Err(Error::Internal("maximal-rank element in an algebra of lower class".into())),
        (None, true) => Err(Error::Internal("no maximal-rank element found in an algebra of class n-1".into())),
        _ => Ok(witness),
    }
}

/// An adapted basis `X_1, ..., X_n` with `[X_1, X_i] = X_{i+1}`,
/// `[X_i, X_j] in g_{i+j}` off the antidiagonal and
/// `[X_i, X_{n-i+1}] = (-1)^i alpha X_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VergneBasis {
    pub vectors: Vec<Vector>,
    pub alpha: Scalar,
    pub regular_for_this_basis: bool,
}

impl VergneBasis {
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(&self.vectors, self.vectors.len())
    }

    /// Coordinates of `x` in this basis.
    pub fn coordinates(&self, x: &Vector) -> Result<Vector> {
        self.matrix().transpose().solve(x).ok_or(Error::Singular)
    }

    /// Re-checks every defining relation from scratch; `Err` names the first
    /// one that fails.
    pub fn verify(&self, g: &LieAlgebra) -> std::result::Result<(), String> {
        let n = g.dim();
        if self.vectors.len() != n {
            return Err(format!("expected {n} vectors, got {}", self.vectors.len()));
        }
        let h = g.change_basis(&self.matrix()).map_err(|_| "vectors are not a basis".to_string())?;
        if n % 2 == 1 && !self.alpha.is_zero() {
            return Err("alpha must vanish in odd dimension".into());
        }
        if self.regular_for_this_basis != self.alpha.is_zero() {
            return Err("regularity flag disagrees with alpha".into());
        }
        for i in 2..n {
            if h.basis_bracket(1, i) != h.basis_vector(i + 1) {
                return Err(format!("[X_1, X_{i}] != X_{}", i + 1));
            }
        }
        if !h.basis_bracket(1, n).is_zero() {
            return Err(format!("[X_1, X_{n}] != 0"));
        }
        let in_tail = |v: &Vector, k: usize| v.coords().iter().take(k.saturating_sub(1).min(n)).all(Zero::is_zero);
        for i in 1..=n {
            for j in i + 1..=n {
                let b = h.basis_bracket(i, j);
                if !in_tail(&b, i + j - 1) {
                    return Err(format!("[X_{i}, X_{j}] not in g_{}", i + j - 1));
                }
                if i + j == n + 1 && i >= 2 {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    if b != h.basis_vector(n).scale(&(sign * &self.alpha)) {
                        return Err(format!("[X_{i}, X_{j}] != (-1)^{i} alpha X_{n}"));
                    }
                } else if i + j != n + 1 && !in_tail(&b, i + j) {
                    return Err(format!("[X_{i}, X_{j}] not in g_{}", i + j));
                }
            }
        }
        Ok(())
    }
}

/// Vergne basis from the canonical choices of `X_1` and `X_2`.
pub fn vergne_basis(g: &LieAlgebra) -> Result<VergneBasis> {
    let x1 = is_filiform(g)?.ok_or(Error::NotFiliform)?;
    let n = g.dim();
    let top = g.ad(&x1).pow((n - 2) as u32);
    let x2 = (1..=n)
        .map(|j| Vector::unit(n, j))
        .find(|e| !top.apply(e).is_zero())
        .ok_or_else(|| Error::Internal("ad(X_1)^(n-2) vanishes on every basis vector".into()))?;
    vergne_basis_with(g, &x1, &x2)
}

/// Vergne basis starting from a chosen `X_1` of maximal rank and `X_2` with
/// `ad(X_1)^{n-2} X_2 != 0`.
pub fn vergne_basis_with(g: &LieAlgebra, x1: &Vector, x2: &Vector) -> Result<VergneBasis> {
    let n = g.dim();
    if is_filiform(g)?.is_none() {
        return Err(Error::NotFiliform);
    }
    if x1.len() != n || x2.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x1.len().min(x2.len()) });
    }
    let chain = |x2: &Vector| {
        let mut v = vec![x1.clone(), x2.clone()];
        for i in 2..n {
            let next = g.br(x1, &v[i - 1]);
            v.push(next);
        }
        v
    };
    let mut vectors = chain(x2);
    let m = Matrix::from_rows(&vectors, n);
    if m.rank() < n {
        return Err(Error::InvalidArgument("X_1, X_2 do not generate an adapted chain".into()));
    }
    if n >= 4 {
        let h = g.change_basis(&m)?;
        let b = h.structure_constant(2, 3, 4);
        if !b.is_zero() {
            let mut x2 = vectors[1].clone();
            x2.add_scaled(&-b, x1);
            vectors = chain(&x2);
        }
    }
    let alpha = if n % 2 == 0 && n >= 4 {
        g.change_basis(&Matrix::from_rows(&vectors, n))?.structure_constant(2, n - 1, n)
    } else {
        Scalar::zero()
    };
    let vb = VergneBasis { vectors, regular_for_this_basis: alpha.is_zero(), alpha };
    vb.verify(g).map_err(|e| Error::Internal(format!("Vergne basis relation failed: {e}")))?;
    Ok(vb)
}

/// Whether `x` has maximal nilpotency, read off from its coordinates
/// `a_1, a_2` in a Vergne basis: `a_1 != 0` and `alpha a_2 != -a_1`.
pub fn has_maximal_nilpotency(g: &LieAlgebra, vb: &VergneBasis, x: &Vector) -> Result<bool> {
    let n = g.dim();
    if n < 5 {
        return Err(Error::InvalidArgument(format!("criterion requires dim >= 5, got {n}")));
    }
    vb.verify(g).map_err(Error::InvalidArgument)?;
    let a = vb.coordinates(x)?;
    let verdict = !a[0].is_zero() && &vb.alpha * &a[1] != -a[0].clone();
    if verdict != has_maximal_rank(g, x) {
        return Err(Error::Internal("coordinate criterion disagrees with rank of ad(x)^(n-2)".into()));
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// A Vergne basis with `alpha = 0` was found.
    Regular(VergneBasis),
    /// Every basis tried had `alpha != 0`. This is not a proof of irregularity.
    IrregularRelativeToComputedBasis { basis: VergneBasis, attempts: usize },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

/// Computes a Vergne basis and, if its `alpha` is nonzero, retries with up to
/// `attempts` random choices of `X_1, X_2` looking for `alpha = 0`.
pub fn regularity(g: &LieAlgebra, seed: u64, attempts: usize) -> Result<Regularity> {
    let vb = vergne_basis(g)?;
    if vb.regular_for_this_basis {
        return Ok(Regularity::Regular(vb));
    }
    let n = g.dim();
    let mut rng = random::rng(seed);
    for _ in 0..attempts {
        let x1 = random::nonzero_int_vector(&mut rng, n, 3);
        if !has_maximal_rank(g, &x1) {
            continue;
        }
        let top = g.ad(&x1).pow((n - 2) as u32);
        let x2 = random::nonzero_int_vector(&mut rng, n, 3);
        if top.apply(&x2).is_zero() {
            continue;
        }
        let candidate = vergne_basis_with(g, &x1, &x2)?;
        if candidate.regular_for_this_basis {
            return Ok(Regularity::Regular(candidate));
        }
    }
    Ok(Regularity::IrregularRelativeToComputedBasis { basis: vb, attempts })
}

/// Whether `g` has an abelian ideal of codimension one, which for filiform
/// `g` characterizes `L_n`.
pub fn is_standard_filiform(g: &LieAlgebra) -> Result<bool> {
    if is_filiform(g)?.is_none() {
        return Err(Error::NotFiliform);
    }
    let d = g.derived_algebra();
    if !g.is_abelian(&d) {
        return Ok(false);
    }
    let comp = d.coordinate_complement();
    if comp.len() != 2 {
        return Err(Error::Internal(format!("filiform algebra with codim [g,g] = {}", comp.len())));
    }
    // a[u, d_k] + b[v, d_k] = 0 for all k, as a linear system in (a, b)
    let n = g.dim();
    let mut rows = Vec::new();
    for dk in d.basis() {
        let (bu, bv) = (g.br(&comp[0], dk), g.br(&comp[1], dk));
        for r in 0..n {
            rows.push(Vector::new(vec![bu[r].clone(), bv[r].clone()]));
        }
    }
    Ok(rows.is_empty() || Matrix::from_rows(&rows, 2).rank() < 2)
}

/// Sampling check that `g` is 2-step and `ad(X)` maps onto `[g, g]` for
/// every `X` outside the center: basis vectors, pairwise sums and
/// differences, then `samples` random integer vectors.
pub fn heis_condition_b(g: &LieAlgebra, samples: usize, seed: u64) -> Result<bool> {
    let class = g.nilpotency_class().ok_or(Error::NotNilpotent)?;
    if class != 2 {
        return Ok(false);
    }
    let n = g.dim();
    let d = g.derived_algebra();
    let z = g.center();
    let basis: Vec<Vector> = (1..=n).map(|i| Vector::unit(n, i)).collect();
    let mut probes: Vec<Vector> = basis.clone();
    for i in 0..n {
        for j in i + 1..n {
            probes.push(&basis[i] + &basis[j]);
            probes.push(&basis[i] - &basis[j]);
        }
    }
    let mut rng = random::rng(seed);
    probes.extend((0..samples).map(|_| random::nonzero_int_vector(&mut rng, n, 5)));
    Ok(probes.iter().filter(|x| !z.contains(x)).all(|x| g.ad(x).rank() == d.dim()))
}

/// The diagonal map `X_1 -> X_1`, `X_i -> f_i X_i` with `f_2 = 1` and
/// `f_i f_{i+1} = c_i`, as a matrix acting on coordinate columns.
pub fn lc_rescaling_map(c: &[Scalar]) -> Result<Matrix> {
    catalog::filiform_lc(c)?;
    let mut f = vec![int(1), int(1)];
    for ci in c {
        let next = ci / f.last().unwrap();
        f.push(next);
    }
    Ok(Matrix::diagonal(&f))
}

/// The metric Lie algebra `L_n` with a codimension-2 totally geodesic
/// subalgebra.
#[derive(Clone, Debug)]
pub struct Cd2f {
    pub algebra: LieAlgebra,
    /// `E_1, ..., E_n`, declared orthonormal by `metric`.
    pub basis: Vec<Vector>,
    pub h: Subalgebra,
    pub h_basis: Vec<Vector>,
    pub metric: Metric,
    /// `h^perp = span(z1, z2)`.
    pub z1: Vector,
    pub z2: Vector,
}

impl Cd2f {
    pub fn metric_algebra(&self) -> MetricLieAlgebra {
        MetricLieAlgebra::new(self.algebra.clone(), self.metric.clone()).expect("dimensions agree")
    }

    /// `[E_1, E_i] - (E_{i+1} + E_{i+3} + ...)` for `i = 2..n-1`.
    pub fn bracket_identity_residuals(&self) -> Vec<Vector> {
        let n = self.basis.len();
        let e = &self.basis;
        (2..n)
            .map(|i| {
                let mut r = self.algebra.br(&e[0], &e[i - 1]);
                for k in (i + 1..=n).step_by(2) {
                    r = &r - &e[k - 1];
                }
                r
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> Scalar {
    Scalar::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

pub fn cd2f_construction(n: usize) -> Result<Cd2f> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("construction needs n >= 3, got {n}")));
    }
    let algebra = catalog::standard_filiform(n)?;
    let x = |i: usize| Vector::unit(n, i);
    let mut basis = vec![x(1)];
    for i in 2..n {
        let mut e = Vector::zeros(n);
        for j in 0..=(n - 1 - i) / 2 {
            e.add_scaled(&binomial(n - 1 - i - j, j), &x(i + 2 * j));
        }
        basis.push(e);
    }
    basis.push(x(n));
    let metric = Metric::declaring_orthonormal(&basis)?;
    let e = |i: usize| basis[i - 1].clone();
    let y = |i: usize| if (n - i) % 2 == 0 { e(i) } else { &e(i) - &e(n - 1) };
    let mut h_basis: Vec<Vector> = (2..=n - 2).map(y).collect();
    h_basis.push(y(n));
    let z1 = e(1);
    let mut z2 = Vector::zeros(n);
    for j in (1..=n - 2).step_by(2) {
        z2 = &z2 + &e(n - j);
    }
    let span = Subspace::span(n, h_basis.iter().cloned());
    let h = algebra
        .subalgebra(span)
        .map_err(|_| Error::Internal("codimension-2 construction is not a subalgebra".into()))?;
    let cd = Cd2f { algebra, basis, h, h_basis, metric, z1, z2 };
    if cd.h.dim() + 2 != n {
        return Err(Error::Internal("construction does not have codimension 2".into()));
    }
    if cd.bracket_identity_residuals().iter().any(|r| !r.is_zero()) {
        return Err(Error::Internal("bracket identity for E fails".into()));
    }
    let mg = cd.metric_algebra();
    let complement = mg.orthogonal_complement(&cd.h);
    if complement != Subspace::span(n, [cd.z1.clone(), cd.z2.clone()]) {
        return Err(Error::Internal("h^perp differs from span(Z_1, Z_2)".into()));
    }
    if !mg.is_totally_geodesic(&cd.h)?.totally_geodesic {
        return Err(Error::Internal("codimension-2 construction is not totally geodesic".into()));
    }
    Ok(cd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use catalog::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn filiform_recognition() {
        for n in 3..=8 {
            assert_eq!(is_filiform(&standard_filiform(n).unwrap()).unwrap(), Some(Vector::unit(n, 1)));
        }
        assert_eq!(is_filiform(&LieAlgebra::abelian(4)).unwrap(), None);
        assert_eq!(is_filiform(&dim6_example()).unwrap(), Some(Vector::unit(6, 1)));
        assert_eq!(is_filiform(&heis6_2center()).unwrap(), None);
        assert!(matches!(is_filiform(&solv_exp()), Err(Error::NotNilpotent)));
    }

    #[test]
    fn witness_needs_a_pair_when_basis_vectors_fail() {
        // X_1 -> X_1 + X_2, X_2 -> X_2 - X_1 style basis change hides X_1
        let g = standard_filiform(5).unwrap();
        let mut rows: Vec<Vector> = (1..=5).map(|i| Vector::unit(5, i)).collect();
        rows[0] = v(&[1, 1, 0, 0, 0]);
        rows[1] = v(&[0, 1, 0, 0, 0]);
        let h = g.change_basis(&Matrix::from_rows(&rows, 5)).unwrap();
        let w = is_filiform(&h).unwrap().unwrap();
        assert!(has_maximal_rank(&h, &w));
    }

    #[test]
    fn vergne_examples() {
        let g = four_dim_alpha_one();
        let vb = vergne_basis(&g).unwrap();
        assert_eq!(vb.vectors, vec![v(&[1, 0, 0, 0]), v(&[-1, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]);
        assert!(vb.alpha.is_zero());

        for n in 3..=8 {
            let vb = vergne_basis(&standard_filiform(n).unwrap()).unwrap();
            assert_eq!(vb.matrix(), Matrix::identity(n));
            assert!(vb.regular_for_this_basis);
        }
        let vb = vergne_basis(&irreg6_algebra()).unwrap();
        assert_eq!(vb.alpha, int(1));
        assert!(vergne_basis(&dim6_example()).unwrap().alpha.is_zero());
        assert!(matches!(vergne_basis(&heis6_2center()), Err(Error::NotFiliform)));
    }

    #[test]
    fn vergne_survives_basis_changes() {
        let mut rng = random::rng(11);
        for g in [irreg6_algebra(), dim6_example(), standard_filiform(7).unwrap()] {
            for _ in 0..5 {
                let p = random::invertible_matrix(&mut rng, g.dim(), 2);
                let h = g.change_basis(&p).unwrap();
                let vb = vergne_basis(&h).unwrap();
                assert!(vb.verify(&h).is_ok());
            }
        }
    }

    #[test]
    fn maximal_nilpotency_criterion() {
        let l6 = standard_filiform(6).unwrap();
        let vb = vergne_basis(&l6).unwrap();
        assert!(has_maximal_nilpotency(&l6, &vb, &Vector::unit(6, 1)).unwrap());
        assert!(!has_maximal_nilpotency(&l6, &vb, &Vector::unit(6, 2)).unwrap());

        let ir = irreg6_algebra();
        let vb = vergne_basis(&ir).unwrap();
        assert!(!has_maximal_nilpotency(&ir, &vb, &v(&[1, -1, 0, 0, 0, 0])).unwrap());
        assert!(has_maximal_nilpotency(&ir, &vb, &v(&[1, 1, 0, 0, 0, 0])).unwrap());

        let l4 = standard_filiform(4).unwrap();
        let vb = vergne_basis(&l4).unwrap();
        assert!(has_maximal_nilpotency(&l4, &vb, &Vector::unit(4, 1)).is_err());
    }

    #[test]
    fn regularity_search() {
        assert!(regularity(&dim6_example(), 1, 10).unwrap().is_regular());
        match regularity(&irreg6_algebra(), 1, 20).unwrap() {
            Regularity::IrregularRelativeToComputedBasis { basis, .. } => assert_eq!(basis.alpha, int(1)),
            r => panic!("unexpected {r:?}"),
        }
    }

    #[test]
    fn standard_filiform_recognition() {
        for n in 3..=8 {
            assert!(is_standard_filiform(&standard_filiform(n).unwrap()).unwrap());
        }
        assert!(!is_standard_filiform(&dim6_example()).unwrap());
        assert!(!is_standard_filiform(&irreg6_algebra()).unwrap());
        assert!(is_standard_filiform(&filiform_lc(&[int(2), frac(1, 3), int(-5)]).unwrap()).unwrap());
        assert!(matches!(is_standard_filiform(&heis6_2center()), Err(Error::NotFiliform)));
    }

    #[test]
    fn heisenberg_condition() {
        assert!(heis_condition_b(&heis3(), 50, 1).unwrap());
        assert!(heis_condition_b(&heis6_2center(), 200, 1).unwrap());
        assert!(!heis_condition_b(&standard_filiform(4).unwrap(), 10, 1).unwrap());
        // h3 + R: the extra direction is central, so still fine
        assert!(heis_condition_b(&heis3().direct_sum(&LieAlgebra::abelian(1)), 50, 1).unwrap());
    }

    #[test]
    fn rescaling_map() {
        assert_eq!(lc_rescaling_map(&vec![int(1); 4]).unwrap(), Matrix::identity(6));
        let phi = lc_rescaling_map(&[int(2), int(3), int(4)]).unwrap();
        let diag: Vec<Scalar> = (0..5).map(|i| phi.get(i, i).clone()).collect();
        assert_eq!(diag, vec![int(1), int(1), int(2), frac(3, 2), frac(8, 3)]);
        assert!(lc_rescaling_map(&[int(0)]).is_err());
    }

    #[test]
    fn cd2f_at_five() {
        let cd = cd2f_construction(5).unwrap();
        let e = &cd.basis;
        assert_eq!(e[1], v(&[0, 1, 0, 1, 0]));
        assert_eq!(e[2], v(&[0, 0, 1, 0, 0]));
        assert_eq!(e[3], v(&[0, 0, 0, 1, 0]));
        assert_eq!(cd.h.space(), &Subspace::span(5, [&e[1] - &e[3], e[2].clone(), e[4].clone()]));
        let perp = cd.metric_algebra().orthogonal_complement(&cd.h);
        assert_eq!(perp, Subspace::span(5, [e[0].clone(), &e[1] + &e[3]]));
    }

    #[test]
    fn cd2f_all_sizes() {
        for n in 3..=12 {
            let cd = cd2f_construction(n).unwrap();
            assert_eq!(cd.h.dim(), n - 2);
            for y in &cd.h_basis {
                assert!(cd.algebra.br(&cd.z2, y).is_zero());
            }
        }
        assert!(cd2f_construction(2).is_err());
    }
}
