//! Finite-dimensional Lie algebras given by rational structure constants.
//!
//! Basis indices in the public API are 1-based, so `X_1, ..., X_n` in formulas
//! correspond to `Vector::unit(n, 1), ..., Vector::unit(n, n)`.

use std::fmt;
use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    name: Option<String>,
    /// `[e_i, e_j]` for `i < j`, in pair order.
    brackets: Vec<Vector>,
    /// Nonzero `(i, j, k, c_ij^k)` with `i < j`, 0-based.
    terms: Vec<(usize, usize, usize, Scalar)>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

/// Result of checking the Jacobi identity on basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Jacobi {
    Holds,
    /// First failing triple `(i, j, k)`, 1-based with `i < j < k`, and the residual.
    Fails { triple: (usize, usize, usize), residual: Vector },
}

impl Jacobi {
    pub fn holds(&self) -> bool {
        matches!(self, Jacobi::Holds)
    }
}

/// Incremental construction from 1-based bracket relations.
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    dim: usize,
    name: Option<String>,
    brackets: Vec<Vector>,
}

impl LieAlgebraBuilder {
    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Sets `[X_i, X_j] = sum c * X_k` (1-based). `i > j` is accepted and
    /// stored with the sign flipped; `i == j` must have no terms.
    pub fn bracket(mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) -> Result<Self> {
        let n = self.dim;
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(Error::InvalidArgument(format!("bracket index ({i}, {j}) out of range 1..={n}")));
        }
        if i == j {
            if terms.iter().all(|(_, c)| c.is_zero()) {
                return Ok(self);
            }
            return Err(Error::InvalidArgument(format!("[X_{i}, X_{i}] must vanish")));
        }
        let mut v = Vector::zeros(n);
        for (k, c) in terms {
            if !(1..=n).contains(k) {
                return Err(Error::InvalidArgument(format!("output index {k} out of range 1..={n}")));
            }
            let mut add = Vector::zeros(n);
            add.add_scaled(c, &Vector::unit(n, *k));
            v = &v + &add;
        }
        let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -&v) };
        self.brackets[pair_index(n, a - 1, b - 1)] = v;
        Ok(self)
    }

    /// Convenience for `[X_i, X_j] = c X_k` with integer `c`.
    pub fn rel(self, i: usize, j: usize, c: i64, k: usize) -> Result<Self> {
        self.bracket(i, j, &[(k, crate::linalg::int(c))])
    }

    /// Builds after checking the Jacobi identity.
    pub fn build(self) -> Result<LieAlgebra> {
        let g = self.build_unchecked();
        match g.verify_jacobi() {
            Jacobi::Holds => Ok(g),
            Jacobi::Fails { triple: (i, j, k), .. } => Err(Error::Jacobi(i, j, k)),
        }
    }

    /// Builds without the Jacobi check, for deliberately broken fixtures.
    pub fn build_unchecked(self) -> LieAlgebra {
        let mut g = LieAlgebra::from_pair_brackets(self.dim, self.brackets);
        g.name = self.name;
        g
    }
}

impl LieAlgebra {
    pub fn builder(dim: usize) -> LieAlgebraBuilder {
        assert!(dim >= 1, "Lie algebra dimension must be positive");
        LieAlgebraBuilder { dim, name: None, brackets: vec![Vector::zeros(dim); dim * (dim - 1) / 2] }
    }

    pub fn abelian(dim: usize) -> LieAlgebra {
        Self::builder(dim).name(format!("abelian{dim}")).build_unchecked()
    }

    fn from_pair_brackets(dim: usize, brackets: Vec<Vector>) -> LieAlgebra {
        let mut terms = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = &brackets[pair_index(dim, i, j)];
                for (k, c) in v.coords().iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        LieAlgebra { dim, name: None, brackets, terms }
    }

    /// Builds from a function giving `[e_i, e_j]` for 0-based `i < j`.
    fn from_bracket_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> LieAlgebra {
        let mut brackets = Vec::with_capacity(dim * (dim.saturating_sub(1)) / 2);
        for i in 0..dim {
            for j in i + 1..dim {
                brackets.push(f(i, j));
            }
        }
        Self::from_pair_brackets(dim, brackets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i)
    }

    /// `[X_i, X_j]` with 1-based indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        assert!((1..=self.dim).contains(&i) && (1..=self.dim).contains(&j));
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vector::zeros(self.dim),
            std::cmp::Ordering::Less => self.brackets[pair_index(self.dim, i - 1, j - 1)].clone(),
            std::cmp::Ordering::Greater => -&self.brackets[pair_index(self.dim, j - 1, i - 1)],
        }
    }

    /// `c_ij^k`, 1-based.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_bracket(i, j)[k - 1].clone()
    }

    /// Nonzero structure constants `(i, j, k, c)` with `i < j`, 1-based.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.terms.iter().map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c))
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        Ok(self.br(x, y))
    }

    /// Unchecked bracket; panics on length mismatch.
    pub(crate) fn br(&self, x: &Vector, y: &Vector) -> Vector {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, j, k, c) in &self.terms {
            let (xi, xj, yi, yj) = (&x[*i], &x[*j], &y[*i], &y[*j]);
            let a = if xi.is_zero() || yj.is_zero() { None } else { Some(xi * yj) };
            let b = if xj.is_zero() || yi.is_zero() { None } else { Some(xj * yi) };
            let w = match (a, b) {
                (None, None) => continue,
                (Some(a), None) => a,
                (None, Some(b)) => -b,
                (Some(a), Some(b)) => a - b,
            };
            if !w.is_zero() {
                out[*k] += w * c;
            }
        }
        Vector::new(out)
    }

    /// `(w . [e_k, x])_k`, the transpose of `ad(x)` applied to `w`, in one
    /// pass over the structure constants.
    pub(crate) fn ad_transpose(&self, x: &Vector, w: &Vector) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, j, k, c) in &self.terms {
            if w[*k].is_zero() {
                continue;
            }
            if !x[*j].is_zero() {
                out[*i] += c * &x[*j] * &w[*k];
            }
            if !x[*i].is_zero() {
                out[*j] -= c * &x[*i] * &w[*k];
            }
        }
        Vector::new(out)
    }

    pub fn verify_jacobi(&self) -> Jacobi {
        let n = self.dim;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let (xi, xj, xk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let a = self.br(&self.br(&xi, &xj), &xk);
                    let b = self.br(&self.br(&xj, &xk), &xi);
                    let c = self.br(&self.br(&xk, &xi), &xj);
                    let residual = &(&a + &b) + &c;
                    if !residual.is_zero() {
                        return Jacobi::Fails { triple: (i, j, k), residual };
                    }
                }
            }
        }
        Jacobi::Holds
    }

    /// Matrix of `ad(x)` in the defining basis; column `j` is `[x, X_j]`.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.br(x, &Vector::unit(n, j + 1));
            for (i, c) in col.into_coords().into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// `span([a, b] : a in A, b in B)`
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                out.push(self.br(x, y));
            }
        }
        Subspace::span(self.dim, out)
    }

    pub fn derived_algebra(&self) -> Subspace {
        Subspace::span(self.dim, self.brackets.iter().cloned())
    }

    pub fn center(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.centralizer_in(&full, &full)
    }

    /// Elements of `within` commuting with every element of `of`.
    pub fn centralizer_in(&self, within: &Subspace, of: &Subspace) -> Subspace {
        let n = self.dim;
        let p = within.dim();
        if p == 0 {
            return Subspace::zero(n);
        }
        // unknown coefficients c on `within`'s basis; rows: each coordinate of [w_a, y_b]
        let mut m = Matrix::zeros(n * of.dim().max(1), p);
        for (b, y) in of.basis().iter().enumerate() {
            for (a, w) in within.basis().iter().enumerate() {
                let v = self.br(w, y);
                for (r, c) in v.into_coords().into_iter().enumerate() {
                    m.set(b * n + r, a, c);
                }
            }
        }
        let vectors = m.kernel().into_iter().map(|k| {
            let mut v = Vector::zeros(n);
            for (c, w) in k.coords().iter().zip(within.basis()) {
                v.add_scaled(c, w);
            }
            v
        });
        Subspace::span(n, vectors)
    }

    /// `[g, g] = C_1`, `C_i = [g, C_{i-1}]`, listed from `C_0 = g` until the
    /// series stabilizes (the last entry repeats no further).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_subspaces(&full, series.last().unwrap());
            if &next == series.last().unwrap() {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    /// Nilpotency class (`Some(0)` for abelian), or `None` if not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series.last().unwrap().is_zero().then(|| series.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn is_abelian(&self, w: &Subspace) -> bool {
        let b = w.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.br(&b[i], &b[j]).is_zero()))
    }

    pub fn is_subalgebra(&self, w: &Subspace) -> bool {
        let b = w.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| w.contains(&self.br(&b[i], &b[j]))))
    }

    pub fn is_ideal(&self, w: &Subspace) -> bool {
        (1..=self.dim).all(|i| {
            let x = self.basis_vector(i);
            w.basis().iter().all(|y| w.contains(&self.br(&x, y)))
        })
    }

    pub fn subalgebra(&self, w: Subspace) -> Result<Subalgebra> {
        if w.ambient() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: w.ambient() });
        }
        if !self.is_subalgebra(&w) {
            return Err(Error::NotSubalgebra);
        }
        Ok(Subalgebra(w))
    }

    /// Smallest subalgebra containing `gens`.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subalgebra {
        Subalgebra(
            self.generated_subalgebra_bounded(gens, self.dim)
                .expect("a generated subalgebra never exceeds the ambient dimension"),
        )
    }

    /// Like [`generated_subalgebra`](Self::generated_subalgebra) but gives up
    /// (returns `None`) as soon as the closure exceeds `max_dim`.
    pub fn generated_subalgebra_bounded(&self, gens: &[Vector], max_dim: usize) -> Option<Subspace> {
        let mut w = Subspace::span(self.dim, gens.iter().cloned());
        if w.dim() > max_dim {
            return None;
        }
        loop {
            let b = w.basis();
            let mut extra = Vec::new();
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let v = self.br(&b[i], &b[j]);
                    if !w.contains(&v) {
                        extra.push(v);
                    }
                }
            }
            if extra.is_empty() {
                return Some(w);
            }
            w = w.with_vectors(extra);
            if w.dim() > max_dim {
                return None;
            }
        }
    }

    /// The quotient by an ideal, realized on the coordinate complement of its
    /// canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: ideal.ambient() });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotIdeal);
        }
        let complement = ideal.coordinate_complement();
        let m = complement.len();
        let n = self.dim;
        let project = |v: &Vector| -> Vector {
            let mut rest = v.clone();
            for (p, b) in ideal.pivots().iter().zip(ideal.basis()) {
                let c = -rest[*p].clone();
                rest.add_scaled(&c, b);
            }
            Vector::new(complement.iter().map(|e| e.dot(&rest)).collect())
        };
        let mut projection = Matrix::zeros(m, n);
        for j in 0..n {
            let col = project(&Vector::unit(n, j + 1));
            for (i, c) in col.into_coords().into_iter().enumerate() {
                projection.set(i, j, c);
            }
        }
        let algebra = Self::from_bracket_fn(m, |i, j| project(&self.br(&complement[i], &complement[j])));
        Ok(Quotient { algebra, projection, section: complement })
    }

    /// Structure constants in the basis given by the rows of `m`.
    pub fn change_basis(&self, m: &Matrix) -> Result<LieAlgebra> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.rows() });
        }
        let inv = m.inverse().ok_or(Error::Singular)?;
        let rows = m.row_vectors();
        // new coordinates c satisfy c^T M = v^T, so c^T = v^T M^{-1}
        let mut g = Self::from_bracket_fn(self.dim, |i, j| inv.apply_left(&self.br(&rows[i], &rows[j])));
        g.name = self.name.clone();
        Ok(g)
    }

    /// `g1 ⊕ g2` with the basis of `g1` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let embed = |v: &Vector, offset: usize| {
            let mut w = Vector::zeros(n);
            for (k, c) in v.coords().iter().enumerate() {
                if !c.is_zero() {
                    w.add_scaled(c, &Vector::unit(n, offset + k + 1));
                }
            }
            w
        };
        let mut g = Self::from_bracket_fn(n, |i, j| {
            if j < n1 {
                embed(&self.basis_bracket(i + 1, j + 1), 0)
            } else if i >= n1 {
                embed(&other.basis_bracket(i - n1 + 1, j - n1 + 1), n1)
            } else {
                Vector::zeros(n)
            }
        });
        g.name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        g
    }

    /// `B(x, y) = tr(ad x ad y)` in the defining basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<Matrix> = (1..=n).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    /// Whether `span(a, [g, g]) = g`. For nilpotent `g` this forces `a = g`;
    /// a surjective proper subalgebra is reported as an internal error.
    pub fn abelianization_surjectivity_check(&self, a: &Subalgebra) -> Result<bool> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let surjective = a.sum(&self.derived_algebra()).is_full();
        if surjective && !a.is_full() {
            return Err(Error::Internal(format!(
                "proper subalgebra {} maps onto the abelianization of a nilpotent algebra",
                a.space()
            )));
        }
        Ok(surjective)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name().unwrap_or("Lie algebra"), self.dim)?;
        for i in 1..=self.dim {
            for j in i + 1..=self.dim {
                let v = self.basis_bracket(i, j);
                if v.is_zero() {
                    continue;
                }
                let terms: Vec<String> = v
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("{c}*X{}", k + 1))
                    .collect();
                writeln!(f, "  [X{i}, X{j}] = {}", terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

/// A bracket-closed subspace. Only constructed through checks on a
/// particular algebra; the caller keeps track of which one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subalgebra(Subspace);

impl Subalgebra {
    pub fn space(&self) -> &Subspace {
        &self.0
    }

    pub fn into_space(self) -> Subspace {
        self.0
    }
}

impl Deref for Subalgebra {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `(n - dim I) x n` matrix of the projection `g -> g / I`.
    pub projection: Matrix,
    /// Representatives in `g` of the quotient basis.
    pub section: Vec<Vector>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filiform::catalog;
    use crate::linalg::int;

    fn l4_broken() -> LieAlgebra {
        LieAlgebra::builder(4)
            .rel(1, 2, 1, 3)
            .unwrap()
            .rel(1, 3, 1, 4)
            .unwrap()
            .rel(2, 3, 1, 3)
            .unwrap()
            .build_unchecked()
    }

    #[test]
    fn bracket_examples() {
        let l4 = catalog::standard_filiform(4).unwrap();
        let x1 = l4.basis_vector(1);
        let x2 = l4.basis_vector(2);
        assert_eq!(l4.bracket(&x1, &x2).unwrap(), l4.basis_vector(3));
        assert!(l4.bracket(&x1, &x1).unwrap().is_zero());
        let d6 = catalog::dim6_example();
        assert_eq!(d6.basis_bracket(2, 3), -&d6.basis_vector(6));
        assert!(matches!(
            l4.bracket(&x1, &Vector::zeros(3)),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        ));
    }

    #[test]
    fn jacobi_failure_is_located() {
        match l4_broken().verify_jacobi() {
            Jacobi::Fails { triple, residual } => {
                assert_eq!(triple, (1, 2, 3));
                assert!(!residual.is_zero());
            }
            Jacobi::Holds => panic!("broken fixture passed Jacobi"),
        }
        assert!(matches!(
            LieAlgebra::builder(4).rel(1, 2, 1, 3).unwrap().rel(1, 3, 1, 4).unwrap().rel(2, 3, 1, 3).unwrap().build(),
            Err(Error::Jacobi(1, 2, 3))
        ));
    }

    #[test]
    fn builder_rejects_diagonal_bracket() {
        assert!(LieAlgebra::builder(3).rel(2, 2, 1, 3).is_err());
        assert!(LieAlgebra::builder(3).rel(1, 4, 1, 3).is_err());
        // reversed order stores the negated bracket
        let g = LieAlgebra::builder(3).rel(2, 1, 1, 3).unwrap().build().unwrap();
        assert_eq!(g.structure_constant(1, 2, 3), int(-1));
    }

    #[test]
    fn series_and_center() {
        let l4 = catalog::standard_filiform(4).unwrap();
        let series = l4.lower_central_series();
        assert_eq!(
            series,
            vec![
                Subspace::full(4),
                Subspace::coordinate(4, &[3, 4]),
                Subspace::coordinate(4, &[4]),
                Subspace::zero(4)
            ]
        );
        assert_eq!(l4.nilpotency_class(), Some(3));
        for n in 3..=8 {
            let ln = catalog::standard_filiform(n).unwrap();
            assert_eq!(ln.center(), Subspace::coordinate(n, &[n]));
            assert_eq!(ln.nilpotency_class(), Some(n - 1));
        }
        assert!(LieAlgebra::abelian(3).derived_algebra().is_zero());
        assert_eq!(catalog::solv_exp().nilpotency_class(), None);
    }

    #[test]
    fn ad_rank_and_ideals() {
        let l3 = catalog::standard_filiform(3).unwrap();
        assert_eq!(l3.ad(&l3.basis_vector(1)).rank(), 1);
        for n in 3..=7 {
            let ln = catalog::standard_filiform(n).unwrap();
            let tail: Vec<usize> = (2..=n).collect();
            assert!(ln.is_ideal(&Subspace::coordinate(n, &tail)));
            assert!(!ln.is_ideal(&Subspace::coordinate(n, &[1])));
        }
    }

    #[test]
    fn generated_subalgebras() {
        let l5 = catalog::standard_filiform(5).unwrap();
        let gens = [l5.basis_vector(1), l5.basis_vector(2)];
        assert!(l5.generated_subalgebra(&gens).is_full());
        let v = Vector::from_ints(&[1, 2, 0, -1, 3]);
        assert_eq!(l5.generated_subalgebra(&[v.clone()]).space(), &Subspace::span(5, [v]));
        assert!(l5.generated_subalgebra_bounded(&gens, 3).is_none());

        let irreg = catalog::irreg6();
        let e = &irreg.basis;
        let a = irreg.algebra.generated_subalgebra(&[e[0].clone(), e[2].clone(), e[3].clone()]);
        let expected = Subspace::span(6, [0, 2, 3, 4, 5].map(|i| e[i].clone()));
        assert_eq!(a.space(), &expected);
    }

    #[test]
    fn quotient_change_basis_direct_sum() {
        let l4 = catalog::standard_filiform(4).unwrap();
        let q = l4.quotient(&l4.center()).unwrap();
        assert_eq!(q.algebra, catalog::standard_filiform(3).unwrap());
        assert!(matches!(l4.quotient(&Subspace::coordinate(4, &[2])), Err(Error::NotIdeal)));

        assert_eq!(l4.change_basis(&Matrix::identity(4)).unwrap(), l4);
        let singular = Matrix::zeros(4, 4);
        assert!(matches!(l4.change_basis(&singular), Err(Error::Singular)));

        let s = catalog::standard_filiform(3).unwrap().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(s.center().dim(), 2);
        assert!(s.verify_jacobi().holds());
    }

    #[test]
    fn abelianization_check() {
        for n in 3..=7 {
            let ln = catalog::standard_filiform(n).unwrap();
            let a = ln.generated_subalgebra(&[ln.basis_vector(1), ln.basis_vector(2)]);
            assert!(ln.abelianization_surjectivity_check(&a).unwrap());
            assert!(a.is_full());
            let tail: Vec<usize> = (2..=n).collect();
            let b = ln.subalgebra(Subspace::coordinate(n, &tail)).unwrap();
            assert!(!ln.abelianization_surjectivity_check(&b).unwrap());
        }
        let d6 = catalog::dim6_example();
        let a = d6.subalgebra(Subspace::coordinate(6, &[1, 3, 4, 5, 6])).unwrap();
        assert!(!d6.abelianization_surjectivity_check(&a).unwrap());
        let solv = catalog::solv_exp();
        let a = solv.subalgebra(Subspace::full(3)).unwrap();
        assert!(matches!(solv.abelianization_surjectivity_check(&a), Err(Error::NotNilpotent)));
    }
}
