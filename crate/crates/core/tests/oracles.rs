//! Library results against values worked out by hand or by independent
//! formulas.

use liegeo_core::filiform::{self, catalog};
use liegeo_core::random;
use liegeo_core::search::{self, SearchBudget};
use liegeo_core::{frac, int, killing_metric, Matrix, Metric, MetricLieAlgebra, Scalar, Vector};
use num_traits::Zero;

fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

#[test]
fn heisenberg_connection_by_hand() {
    // orthonormal X, Y, Z with [X, Y] = Z
    let mg = MetricLieAlgebra::standard(catalog::heis3());
    let (x, y, z) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
    let half = |w: &Vector| w.scale(&frac(1, 2));
    assert_eq!(mg.levi_civita(&x, &y).unwrap(), half(&z));
    assert_eq!(mg.levi_civita(&y, &x).unwrap(), half(&-&z));
    assert_eq!(mg.levi_civita(&x, &z).unwrap(), half(&-&y));
    assert_eq!(mg.levi_civita(&z, &x).unwrap(), half(&-&y));
    assert_eq!(mg.levi_civita(&y, &z).unwrap(), half(&x));
    assert_eq!(mg.levi_civita(&z, &y).unwrap(), half(&x));
    assert!(mg.levi_civita(&z, &z).unwrap().is_zero());
}

#[test]
fn heisenberg_geodesics_by_hand() {
    // f(aX + bY + cZ) = (bc, -ac, 0)
    let mg = MetricLieAlgebra::standard(catalog::heis3());
    let mut rng = random::rng(3);
    for _ in 0..200 {
        let y = random::nonzero_int_vector(&mut rng, 3, 2);
        let (a, b, c) = (&y[0], &y[1], &y[2]);
        let expected = Vector::new(vec![b * c, -(a * c), int(0)]);
        assert_eq!(mg.geodesic_defect(&y).unwrap(), expected);
        let geodesic = c.is_zero() || (a.is_zero() && b.is_zero());
        assert_eq!(mg.is_geodesic(&y).unwrap().geodesic, geodesic, "{y}");
    }
}

#[test]
fn solv_exp_defect_sign() {
    // <f(Y), X> = <[X, Y], Y> = 1
    let mg = MetricLieAlgebra::standard(catalog::solv_exp());
    assert_eq!(mg.geodesic_defect(&v(&[0, 1, 0])).unwrap(), v(&[1, 0, 0]));
    assert!(mg.is_geodesic(&v(&[1, 0, 0])).unwrap().geodesic);
}

#[test]
fn killing_form_of_so3_and_sl2() {
    assert_eq!(catalog::so3().killing_form(), Matrix::identity(3).scale(&int(-2)));
    assert_eq!(killing_metric(&catalog::so3()).unwrap().gram(), &Matrix::identity(3).scale(&int(2)));
    assert!(killing_metric(&catalog::sl2()).is_err());
    assert!(killing_metric(&catalog::heis3()).is_err());
}

/// `E_i = sum_j C(n-1-i-j, j) X_{i+2j}` for `1 < i < n`, `E_1 = X_1`, `E_n = X_n`.
fn cd2f_basis(n: usize) -> Vec<Vector> {
    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    (1..=n)
        .map(|i| {
            let mut c = vec![0i64; n];
            if i == 1 || i == n {
                c[i - 1] = 1;
            } else {
                let mut j = 0;
                while i + 2 * j <= n {
                    c[i + 2 * j - 1] = binom((n - 1 - i - j) as i64, j as i64);
                    j += 1;
                }
            }
            Vector::from_ints(&c)
        })
        .collect()
}

#[test]
fn cd2f_against_binomial_formula() {
    for n in 3..=12 {
        let cd = filiform::cd2f_construction(n).unwrap();
        assert_eq!(cd.basis, cd2f_basis(n), "n = {n}");
        for i in 2..n {
            let mut rhs = Vector::zeros(n);
            for k in (i + 1..=n).step_by(2) {
                rhs = &rhs + &cd.basis[k - 1];
            }
            assert_eq!(cd.algebra.bracket(&cd.basis[0], &cd.basis[i - 1]).unwrap(), rhs, "n = {n}, i = {i}");
        }
        assert_eq!(cd.h.codim(), 2);
        assert!(cd.metric_algebra().is_totally_geodesic(&cd.h).unwrap().totally_geodesic);
    }
}

#[test]
fn cd2f_five_explicit() {
    // E_2 = X_2 + X_4, E_3 = X_3, E_4 = X_4
    let cd = filiform::cd2f_construction(5).unwrap();
    assert_eq!(cd.basis[1], v(&[0, 1, 0, 1, 0]));
    assert_eq!(cd.basis[2], v(&[0, 0, 1, 0, 0]));
    assert_eq!(cd.basis[3], v(&[0, 0, 0, 1, 0]));
}

#[test]
fn vergne_relations_on_lc_by_structure_constants() {
    let c = [frac(2, 1), frac(-1, 3), frac(5, 2), int(1)];
    let g = catalog::filiform_lc(&c).unwrap();
    let mut rng = random::rng(11);
    let p = random::invertible_matrix(&mut rng, 6, 2);
    let h = g.change_basis(&p).unwrap();
    let vb = filiform::vergne_basis(&h).unwrap();
    let n = 6;
    let cols = Matrix::from_rows(&vb.vectors, n).transpose();
    for i in 1..=n {
        for j in i + 1..=n {
            let b = h.bracket(&vb.vectors[i - 1], &vb.vectors[j - 1]).unwrap();
            let coords = cols.solve(&b).unwrap();
            let first = coords.coords().iter().position(|x| !x.is_zero()).map_or(usize::MAX, |p| p + 1);
            if i == 1 && j < n {
                assert_eq!(coords, Vector::unit(n, j + 1));
            } else if i + j == n + 1 {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(coords, Vector::unit(n, n).scale(&(sign * &vb.alpha)));
            } else {
                assert!(first >= i + j, "[X_{i}, X_{j}]");
            }
        }
    }
    // L_C is isomorphic to L_6, so it is regular
    assert!(vb.alpha.is_zero());
}

#[test]
fn rescaling_map_by_hand() {
    // f_2 = 1, f_i f_{i+1} = c_i
    let c = [int(1), frac(1, 2), frac(3, 4), frac(9, 16)];
    let phi = filiform::lc_rescaling_map(&c).unwrap();
    let d: Vec<Scalar> = (0..6).map(|i| phi.get(i, i).clone()).collect();
    assert_eq!(d, vec![int(1), int(1), int(1), frac(1, 2), frac(3, 2), frac(3, 8)]);
}

#[test]
fn numeric_geodesic_is_a_zero_of_the_exact_defect() {
    let mut rng = random::rng(5);
    for g in [catalog::sl2(), catalog::solv_rot(), catalog::standard_filiform(5).unwrap()] {
        let n = g.dim();
        let mg = MetricLieAlgebra::new(g, random::metric(&mut rng, n, 2)).unwrap();
        let r = search::find_geodesic_numeric(&mg, &SearchBudget::default()).unwrap();
        assert!(r.converged && r.residual <= 1e-10);
        let u = &r.vector;
        let gram = mg.metric().gram().to_f64();
        let norm: f64 = (0..n).map(|i| (0..n).map(|j| u[i] * gram[i][j] * u[j]).sum::<f64>()).sum();
        assert!((norm - 1.0).abs() < 1e-8);
        if let Some(e) = &r.exact {
            assert!(mg.geodesic_defect(e).unwrap().is_zero());
        }
    }
}

#[test]
fn four_dim_normal_form_of_l4() {
    let mg = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
    let nf = filiform::normalize_4d(&mg).unwrap();
    assert_eq!((nf.alpha.clone(), nf.beta.clone(), nf.gamma.clone()), (int(1), int(0), int(1)));
    let planes = filiform::tg_2d_subalgebras_4d(&mg, &nf).unwrap();
    assert_eq!(planes.len(), 2);
    // xy + yz = 0 on the span of X_1, X_2, X_3
    assert!(filiform::geodesic_cone_4d(&nf, &int(1), &int(0), &int(5)));
    assert!(!filiform::geodesic_cone_4d(&nf, &int(1), &int(1), &int(1)));
    assert!(filiform::geodesic_cone_4d(&nf, &int(1), &int(1), &int(-1)));
}

#[test]
fn metric_declared_orthonormal() {
    let basis = vec![v(&[1, 1]), v(&[0, 1])];
    let m = Metric::declaring_orthonormal(&basis).unwrap();
    assert_eq!(m.inner(&basis[0], &basis[0]), int(1));
    assert!(m.inner(&basis[0], &basis[1]).is_zero());
}
