//! Named algebras used throughout the tests and exposed to the CLI.

use num_traits::Zero;

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{int, parse_scalar, Scalar, Subspace, Vector};
use crate::metric::Metric;

pub const NAMES: &[&str] = &[
    "Ln",
    "LC",
    "heis3",
    "dim6",
    "irreg6",
    "heis6_2center",
    "so3",
    "sl2",
    "solv_rot",
    "solv_exp",
    "cd2f",
];

/// `L_n`: `[X_1, X_i] = X_{i+1}` for `2 <= i <= n-1`.
pub fn standard_filiform(n: usize) -> Result<LieAlgebra> {
    let ones = vec![int(1); n.saturating_sub(2)];
    if n < 3 {
        return Err(Error::InvalidArgument(format!("standard filiform algebra needs n >= 3, got {n}")));
    }
    Ok(filiform_lc(&ones)?.with_name(format!("L{n}")))
}

/// `L_C`: `[X_1, X_i] = c_i X_{i+1}`, with `c = (c_2, ..., c_{n-1})`.
pub fn filiform_lc(c: &[Scalar]) -> Result<LieAlgebra> {
    if c.is_empty() {
        return Err(Error::InvalidArgument("coefficient list must be nonempty".into()));
    }
    if let Some(pos) = c.iter().position(Zero::is_zero) {
        return Err(Error::ZeroCoefficient { index: pos + 2 });
    }
    let n = c.len() + 2;
    let mut b = LieAlgebra::builder(n).name(format!("LC{n}"));
    for (i, ci) in (2..n).zip(c) {
        b = b.bracket(1, i, &[(i + 1, ci.clone())])?;
    }
    b.build()
}

pub fn heis3() -> LieAlgebra {
    standard_filiform(3).expect("n = 3 is valid").with_name("heis3")
}

/// `[X_1, X_i] = X_{i+1}` (`i = 2..5`), `[X_2, X_3] = -X_6`.
pub fn dim6_example() -> LieAlgebra {
    let mut b = LieAlgebra::builder(6).name("dim6");
    for i in 2..=5 {
        b = b.rel(1, i, 1, i + 1).unwrap();
    }
    b.rel(2, 3, -1, 6).unwrap().build().expect("dim6 satisfies Jacobi")
}

/// `[X_1, X_i] = X_{i+1}` (`i = 2..5`), `[X_2, X_5] = X_6`, `[X_3, X_4] = -X_6`.
pub fn irreg6_algebra() -> LieAlgebra {
    let mut b = LieAlgebra::builder(6).name("irreg6");
    for i in 2..=5 {
        b = b.rel(1, i, 1, i + 1).unwrap();
    }
    b.rel(2, 5, 1, 6).unwrap().rel(3, 4, -1, 6).unwrap().build().expect("irreg6 satisfies Jacobi")
}

/// The irregular 6-dimensional algebra with `E_1 = X_1 - X_2`, `E_i = X_i`
/// declared orthonormal and its codimension-3 totally geodesic subalgebra
/// `span(E_2, E_5, E_6)`.
#[derive(Clone, Debug)]
pub struct Irreg6 {
    pub algebra: LieAlgebra,
    pub basis: Vec<Vector>,
    pub h: Subalgebra,
    pub metric: Metric,
}

pub fn irreg6() -> Irreg6 {
    let algebra = irreg6_algebra();
    let mut basis: Vec<Vector> = (1..=6).map(|i| Vector::unit(6, i)).collect();
    basis[0] = Vector::from_ints(&[1, -1, 0, 0, 0, 0]);
    let metric = Metric::declaring_orthonormal(&basis).expect("E is a basis");
    let h = algebra
        .subalgebra(Subspace::span(6, [basis[1].clone(), basis[4].clone(), basis[5].clone()]))
        .expect("span(E_2, E_5, E_6) is a subalgebra");
    Irreg6 { algebra, basis, h, metric }
}

/// Basis `X_1..X_4, Y_1, Y_2` with `[X_1,X_2] = -[X_3,X_4] = Y_1`,
/// `[X_1,X_3] = [X_2,X_4] = Y_2`.
pub fn heis6_2center() -> LieAlgebra {
    LieAlgebra::builder(6)
        .name("heis6_2center")
        .rel(1, 2, 1, 5)
        .and_then(|b| b.rel(3, 4, -1, 5))
        .and_then(|b| b.rel(1, 3, 1, 6))
        .and_then(|b| b.rel(2, 4, 1, 6))
        .and_then(|b| b.build())
        .expect("valid 2-step algebra")
}

pub fn so3() -> LieAlgebra {
    LieAlgebra::builder(3)
        .name("so3")
        .rel(1, 2, 1, 3)
        .and_then(|b| b.rel(2, 3, 1, 1))
        .and_then(|b| b.rel(3, 1, 1, 2))
        .and_then(|b| b.build())
        .expect("so(3) satisfies Jacobi")
}

/// Basis `H, E, F`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::builder(3)
        .name("sl2")
        .rel(1, 2, 2, 2)
        .and_then(|b| b.rel(1, 3, -2, 3))
        .and_then(|b| b.rel(2, 3, 1, 1))
        .and_then(|b| b.build())
        .expect("sl(2) satisfies Jacobi")
}

/// Basis `X, Y, Z` with `[X,Y] = Z`, `[X,Z] = -Y`.
pub fn solv_rot() -> LieAlgebra {
    LieAlgebra::builder(3)
        .name("solv_rot")
        .rel(1, 2, 1, 3)
        .and_then(|b| b.rel(1, 3, -1, 2))
        .and_then(|b| b.build())
        .expect("valid solvable algebra")
}

/// Basis `X, Y, Z` with `[X,Y] = Y`, `[X,Z] = -Z`.
pub fn solv_exp() -> LieAlgebra {
    LieAlgebra::builder(3)
        .name("solv_exp")
        .rel(1, 2, 1, 2)
        .and_then(|b| b.rel(1, 3, -1, 3))
        .and_then(|b| b.build())
        .expect("valid solvable algebra")
}

/// `[X_1,X_2] = X_3`, `[X_1,X_3] = X_4`, `[X_2,X_3] = X_4`.
pub fn four_dim_alpha_one() -> LieAlgebra {
    LieAlgebra::builder(4)
        .name("L4_alpha1")
        .rel(1, 2, 1, 3)
        .and_then(|b| b.rel(1, 3, 1, 4))
        .and_then(|b| b.rel(2, 3, 1, 4))
        .and_then(|b| b.build())
        .expect("valid filiform algebra")
}

/// `[X_1,X_2] = a X_3 + b X_4`, `[X_1,X_3] = c X_4`.
pub fn four_dim(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<LieAlgebra> {
    LieAlgebra::builder(4)
        .bracket(1, 2, &[(3, a.clone()), (4, b.clone())])?
        .bracket(1, 3, &[(4, c.clone())])?
        .build()
}

/// A catalog algebra together with the metric and named subalgebras the CLI
/// writes alongside it.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    pub metric: Option<Metric>,
    pub subalgebras: Vec<(String, Subspace)>,
}

fn param_usize(params: &[String], name: &str) -> Result<usize> {
    let p = params
        .first()
        .ok_or_else(|| Error::InvalidArgument(format!("catalog entry {name} needs a dimension parameter")))?;
    p.parse().map_err(|_| Error::InvalidArgument(format!("invalid dimension {p:?}")))
}

fn no_params(params: &[String], name: &str) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("catalog entry {name} takes no parameters")))
    }
}

/// Looks up a catalog entry by its CLI name.
pub fn lookup(name: &str, params: &[String]) -> Result<CatalogEntry> {
    let plain = |algebra: LieAlgebra| CatalogEntry { algebra, metric: None, subalgebras: Vec::new() };
    let entry = match name {
        "Ln" | "LC" => {
            let algebra = if name == "Ln" {
                standard_filiform(param_usize(params, name)?)?
            } else {
                let c: Vec<Scalar> = params
                    .iter()
                    .map(|p| parse_scalar(p).ok_or_else(|| Error::InvalidArgument(format!("invalid rational {p:?}"))))
                    .collect::<Result<_>>()?;
                filiform_lc(&c)?
            };
            let n = algebra.dim();
            let evens: Vec<usize> = (2..=n).step_by(2).collect();
            CatalogEntry {
                metric: Some(Metric::standard(n)),
                subalgebras: vec![
                    ("even".into(), Subspace::coordinate(n, &evens)),
                    ("center".into(), Subspace::coordinate(n, &[n])),
                ],
                algebra,
            }
        }
        "cd2f" => {
            let cd = super::cd2f_construction(param_usize(params, name)?)?;
            CatalogEntry {
                algebra: cd.algebra.with_name(format!("cd2f{}", cd.basis.len())),
                metric: Some(cd.metric),
                subalgebras: vec![("h".into(), cd.h.into_space())],
            }
        }
        "irreg6" => {
            no_params(params, name)?;
            let ir = irreg6();
            CatalogEntry { algebra: ir.algebra, metric: Some(ir.metric), subalgebras: vec![("h".into(), ir.h.into_space())] }
        }
        "solv_rot" => {
            no_params(params, name)?;
            CatalogEntry {
                algebra: solv_rot(),
                metric: Some(Metric::standard(3)),
                subalgebras: vec![("yz".into(), Subspace::coordinate(3, &[2, 3]))],
            }
        }
        "heis3" => {
            no_params(params, name)?;
            plain(heis3())
        }
        "dim6" => {
            no_params(params, name)?;
            plain(dim6_example())
        }
        "heis6_2center" => {
            no_params(params, name)?;
            plain(heis6_2center())
        }
        "so3" => {
            no_params(params, name)?;
            plain(so3())
        }
        "sl2" => {
            no_params(params, name)?;
            plain(sl2())
        }
        "solv_exp" => {
            no_params(params, name)?;
            plain(solv_exp())
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown catalog entry {other:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    };
    Ok(entry)
}
