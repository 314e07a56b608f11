//! Exact rational vectors, matrices and subspaces.
//!
//! Everything here works over `BigRational`; there is no floating point and no
//! tolerance. Subspaces are stored in reduced row-echelon form so that two
//! subspaces are equal exactly when their stored bases are equal.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// `num / den`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `-?\d+(/\d+)?` with a nonzero denominator.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return None;
    }
    let mut n: BigInt = num.parse().ok()?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

/// Canonical text form, `n` or `n/d` with `d > 1`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by continued fractions.
pub fn rational_approximation(x: f64, max_den: u64) -> Option<Scalar> {
    if !x.is_finite() {
        return None;
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut rest = x.abs();
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let cap = BigInt::from(max_den);
    for _ in 0..64 {
        let a = rest.floor();
        if a > 1e15 {
            break;
        }
        let a_int = BigInt::from(a as u64);
        let h_next = &a_int * &h + &h_prev;
        let k_next = &a_int * &k + &k_prev;
        if k_next > cap {
            break;
        }
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let f = rest - a;
        if f < 1e-15 {
            break;
        }
        rest = 1.0 / f;
    }
    if k.is_zero() {
        return None;
    }
    Some(Scalar::new(h * sign, k))
}

/// A coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The `i`-th standard basis vector, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "basis index {i} out of range 1..={n}");
        let mut v = Self::zeros(n);
        v.0[i - 1] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Plain coordinate dot product (not a metric inner product).
    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.len(), other.len());
        let mut acc = Scalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    /// Largest 1-based `k` with the vector in `span(e_k, ..., e_n)`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.leading_index().map(|i| i + 1)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }

    /// Rescales to a primitive integer vector with positive leading entry.
    pub fn primitive(&self) -> Vector {
        let Some(lead) = self.leading_index() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        for x in &self.0 {
            den = num_integer::lcm(den, x.denom().clone());
        }
        let mut nums: Vec<BigInt> = self.0.iter().map(|x| (x * &den).to_integer()).collect();
        let g = nums
            .iter()
            .fold(BigInt::zero(), |g, n| num_integer::gcd(g, n.clone()));
        let sign = if nums[lead].is_negative() { -BigInt::one() } else { BigInt::one() };
        for n in nums.iter_mut() {
            *n = &*n / &g * &sign;
        }
        Vector(nums.into_iter().map(Scalar::from_integer).collect())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, d) in entries.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.coords().iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(r)).collect();
        Self::from_rows(&vs, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn col(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `M v`
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        Vector::new(
            (0..self.rows)
                .map(|r| {
                    let mut acc = Scalar::zero();
                    for c in 0..self.cols {
                        let a = self.get(r, c);
                        if !a.is_zero() && !v[c].is_zero() {
                            acc += a * &v[c];
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// `v^T M`
    pub fn apply_left(&self, v: &Vector) -> Vector {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = Vector::zeros(self.cols);
        for r in 0..self.rows {
            if !v[r].is_zero() {
                out.add_scaled(&v[r], &self.row(r));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &f * m.get(row, c);
                    if !sub.is_zero() {
                        let v = m.get(r, c) - sub;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column (free entry 1).
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v.0[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v.0[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.0[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = m.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &f * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| {
                let mut sub = Matrix::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub.set(i, j, self.get(i, j).clone());
                    }
                }
                sub.determinant()
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|r| self.row(r).to_f64()).collect()
    }
}

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (1..=ambient).map(|i| Vector::unit(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length does not match ambient dimension");
        }
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(&rows, ambient).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ambient, basis, pivots }
    }

    /// `span(e_i : i in indices)`, 1-based indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| Vector::unit(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.basis, self.ambient)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = Vector::zeros(self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            rebuilt.add_scaled(c, b);
        }
        (rebuilt == *v).then_some(coeffs)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn with_vectors(&self, extra: impl IntoIterator<Item = Vector>) -> Subspace {
        Self::span(self.ambient, self.basis.iter().cloned().chain(extra))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        let p = self.dim();
        let q = other.dim();
        // columns: basis of self, then negated basis of other
        let mut m = Matrix::zeros(self.ambient, p + q);
        for (j, b) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, b[i].clone());
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, p + j, -b[i].clone());
            }
        }
        let vectors = m.kernel().into_iter().map(|k| {
            let mut v = Vector::zeros(self.ambient);
            for (c, b) in k.coords()[..p].iter().zip(&self.basis) {
                v.add_scaled(c, b);
            }
            v
        });
        Self::span(self.ambient, vectors)
    }

    /// Standard basis vectors completing the canonical basis to a basis of
    /// the whole space (the non-pivot coordinates).
    pub fn coordinate_complement(&self) -> Vec<Vector> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| Vector::unit(self.ambient, c + 1))
            .collect()
    }

    pub fn map(&self, m: &Matrix) -> Subspace {
        Self::span(m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "span[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_scalars() {
        assert_eq!(parse_scalar("1/2"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("-6/4"), Some(frac(-3, 2)));
        assert_eq!(parse_scalar("7"), Some(int(7)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("+1"), None);
        assert_eq!(parse_scalar("1.5"), None);
        assert_eq!(parse_scalar("/2"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(format_scalar(&frac(4, 6)), "2/3");
        assert_eq!(format_scalar(&int(-3)), "-3");
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(rational_approximation(0.5, 1_000_000), Some(frac(1, 2)));
        assert_eq!(rational_approximation(-2.0 / 3.0, 1_000_000), Some(frac(-2, 3)));
        assert_eq!(rational_approximation(3.0, 10), Some(int(3)));
        let pi = rational_approximation(std::f64::consts::PI, 1000).unwrap();
        assert_eq!(pi, frac(355, 113));
    }

    #[test]
    fn rref_kernel_inverse() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
        assert!(m.inverse().is_none());
        assert!(m.determinant().is_zero());

        let a = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.determinant(), int(1));
        assert_eq!(a.solve(&Vector::from_ints(&[3, 11])), Some(Vector::from_ints(&[1, 1])));
    }

    #[test]
    fn subspace_canonical_form() {
        let a = Subspace::span(3, [Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[0, 1, 1])]);
        let b = Subspace::span(3, [Vector::from_ints(&[1, 2, 1]), Vector::from_ints(&[2, 1, -1])]);
        assert_eq!(a, b);
        assert!(a.contains(&Vector::from_ints(&[1, 0, -1])));
        assert!(!a.contains(&Vector::from_ints(&[0, 0, 1])));
        let c = Subspace::coordinate(3, &[3]);
        assert!(a.intersection(&c).is_zero());
        assert!(a.sum(&c).is_full());
        let d = Subspace::coordinate(3, &[1, 3]);
        assert_eq!(a.intersection(&d), Subspace::span(3, [Vector::from_ints(&[1, 0, -1])]));
    }

    #[test]
    fn primitive_vectors() {
        let v = Vector::new(vec![frac(-1, 2), frac(1, 3), int(0)]);
        assert_eq!(v.primitive(), Vector::from_ints(&[3, -2, 0]));
    }
}
