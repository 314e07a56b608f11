//! Seeded generators for rational test data. Every randomized routine in the
//! crate takes an explicit seed and goes through here.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{frac, int, Matrix, Scalar, Vector};
use crate::metric::Metric;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut SeededRng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

pub fn rational(rng: &mut SeededRng, bound: i64, max_den: i64) -> Scalar {
    frac(small_int(rng, bound), rng.random_range(1..=max_den))
}

pub fn nonzero_rational(rng: &mut SeededRng, bound: i64, max_den: i64) -> Scalar {
    loop {
        let q = rational(rng, bound, max_den);
        if q != int(0) {
            return q;
        }
    }
}

pub fn int_vector(rng: &mut SeededRng, n: usize, bound: i64) -> Vector {
    Vector::new((0..n).map(|_| int(small_int(rng, bound))).collect())
}

pub fn nonzero_int_vector(rng: &mut SeededRng, n: usize, bound: i64) -> Vector {
    loop {
        let v = int_vector(rng, n, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn rational_vector(rng: &mut SeededRng, n: usize, bound: i64, max_den: i64) -> Vector {
    Vector::new((0..n).map(|_| rational(rng, bound, max_den)).collect())
}

/// A random invertible matrix with small rational entries.
pub fn invertible_matrix(rng: &mut SeededRng, n: usize, bound: i64) -> Matrix {
    loop {
        let rows: Vec<Vector> = (0..n).map(|_| rational_vector(rng, n, bound, 2)).collect();
        let m = Matrix::from_rows(&rows, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// `B^T B + I` for a random small-integer `B`: always positive definite.
pub fn spd_gram(rng: &mut SeededRng, n: usize, bound: i64) -> Matrix {
    let rows: Vec<Vector> = (0..n).map(|_| int_vector(rng, n, bound)).collect();
    let b = Matrix::from_rows(&rows, n);
    b.transpose().mul(&b).add(&Matrix::identity(n))
}

pub fn metric(rng: &mut SeededRng, n: usize, bound: i64) -> Metric {
    Metric::new(spd_gram(rng, n, bound)).expect("B^T B + I is positive definite")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = spd_gram(&mut rng(7), 4, 2);
        let b = spd_gram(&mut rng(7), 4, 2);
        assert_eq!(a, b);
        assert!(a.leading_principal_minors().iter().all(|m| *m > int(0)));
        assert_eq!(invertible_matrix(&mut rng(3), 5, 2).rank(), 5);
    }
}
