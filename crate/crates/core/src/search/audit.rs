use super::{search_tg_subalgebras, SearchBudget};
use crate::algebra::Subalgebra;
use crate::error::{Error, Result};
use crate::filiform;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::metric::MetricLieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundSubalgebra {
    pub h: Subalgebra,
    pub complement_invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionAudit {
    pub dim: usize,
    pub found: Vec<FoundSubalgebra>,
    /// Largest dimension of a totally geodesic subalgebra found (0 if none).
    pub max_found_dim: usize,
    pub any_invariant_complement: bool,
    /// Whether the upper bound `n/2` for standard `L_n` was applied.
    pub standard_bound_checked: bool,
}

fn describe(h: &Subspace) -> String {
    let vs: Vec<String> = h.basis().iter().map(|v| v.to_string()).collect();
    format!("span({})", vs.join(", "))
}

/// Runs the search in every dimension and checks the dimension bounds on
/// what was found. A violated bound is reported as an internal error that
/// carries the offending subalgebra.
pub fn audit_dimension_bounds(mg: &MetricLieAlgebra, budget: &SearchBudget) -> Result<DimensionAudit> {
    let g = mg.algebra();
    let n = g.dim();
    if filiform::is_filiform(g)?.is_none() {
        return Err(Error::NotFiliform);
    }
    let standard = filiform::is_standard_filiform(g)? && *g == filiform::catalog::standard_filiform(n)? && mg.metric().gram() == &Matrix::identity(n);
    let mut found = Vec::new();
    for k in 1..n {
        for h in search_tg_subalgebras(mg, k, budget)? {
            let report = mg.is_totally_geodesic(&h)?;
            let twice = 2 * h.dim();
            if report.complement_invariant && twice > n {
                return Err(Error::Internal(format!("invariant complement with dim h > n/2: {}", describe(&h))));
            }
            if standard && twice > n {
                return Err(Error::Internal(format!("standard L_{n} with dim h > n/2: {}", describe(&h))));
            }
            if h.dim() + 1 == n {
                return Err(Error::Internal(format!("codimension-1 totally geodesic subalgebra in a filiform algebra: {}", describe(&h))));
            }
            found.push(FoundSubalgebra { h, complement_invariant: report.complement_invariant });
        }
    }
    let max_found_dim = found.iter().map(|f| f.h.dim()).max().unwrap_or(0);
    let any_invariant_complement = found.iter().any(|f| f.complement_invariant);
    Ok(DimensionAudit { dim: n, found, max_found_dim, any_invariant_complement, standard_bound_checked: standard })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim2Checks {
    /// `[Z_1, Z_2] in h` for `h^perp = span(Z_1, Z_2)`
    pub bracket_in_h: bool,
    pub bracket_in_center_of_h: bool,
    /// `a ∩ h ⊆ z(h)`, `a` generated by `h^perp`
    pub a_cap_h_central: bool,
}

impl Codim2Checks {
    pub fn all(&self) -> bool {
        self.bracket_in_h && self.bracket_in_center_of_h && self.a_cap_h_central
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraProperties {
    pub psi_homomorphism: bool,
    /// `None` when `g` is not nilpotent.
    pub psi_nilpotent: Option<bool>,
    pub complement_invariant: bool,
    /// `a ∩ h`, `a` the subalgebra generated by `h^perp`.
    pub a_cap_h: Subspace,
    pub a_cap_h_central: bool,
    pub codim2: Option<Codim2Checks>,
    /// `Some(dim h <= n/2)` when the complement is invariant and contains an
    /// element of maximal nilpotency in a filiform algebra.
    pub dimension_bound: Option<bool>,
}

impl SubalgebraProperties {
    /// Whether every check that applies passed.
    pub fn all_hold(&self) -> bool {
        self.psi_homomorphism
            && self.psi_nilpotent != Some(false)
            && self.codim2.as_ref().is_none_or(Codim2Checks::all)
            && self.dimension_bound != Some(false)
    }
}

/// Whether the span of all products of the matrices vanishes after
/// `size` steps.
fn jointly_nilpotent(ms: &[Matrix], size: usize) -> bool {
    let mut space = Subspace::full(size);
    for _ in 0..=size {
        if space.is_zero() {
            return true;
        }
        let images: Vec<Vector> = ms.iter().flat_map(|m| space.basis().iter().map(move |v| m.apply(v))).collect();
        space = Subspace::span(size, images);
    }
    space.is_zero()
}

/// Exact structural checks for a totally geodesic subalgebra `h`.
pub fn verify_found_subalgebra_properties(mg: &MetricLieAlgebra, h: &Subspace) -> Result<SubalgebraProperties> {
    let g = mg.algebra();
    let report = mg.is_totally_geodesic(h)?;
    if !report.totally_geodesic {
        return Err(Error::InvalidArgument("subalgebra is not totally geodesic".into()));
    }
    let perp = report.complement;
    let n = g.dim();
    let hb = h.basis();

    let psi: Vec<Matrix> = hb.iter().map(|y| mg.psi_map(h, y)).collect::<Result<_>>()?;
    let mut psi_homomorphism = true;
    for a in 0..hb.len() {
        for b in a + 1..hb.len() {
            let lhs = mg.psi_map(h, &g.br(&hb[a], &hb[b]))?;
            let rhs = psi[a].mul(&psi[b]).sub(&psi[b].mul(&psi[a]));
            psi_homomorphism &= lhs == rhs;
        }
    }
    let psi_nilpotent = g.is_nilpotent().then(|| jointly_nilpotent(&psi, perp.dim()));

    let z_h = g.centralizer_in(h, h);
    let a = g.generated_subalgebra(perp.basis());
    let a_cap_h = a.intersection(h);
    let a_cap_h_central = z_h.contains_subspace(&a_cap_h);

    let codim2 = (perp.dim() == 2 && g.is_nilpotent()).then(|| {
        let z = g.br(&perp.basis()[0], &perp.basis()[1]);
        Codim2Checks { bracket_in_h: h.contains(&z), bracket_in_center_of_h: z_h.contains(&z), a_cap_h_central }
    });

    let mut dimension_bound = None;
    if report.complement_invariant
        && g.is_nilpotent()
        && filiform::is_filiform(g)?.is_some()
        && filiform::sweep_for_maximal_rank(g, perp.basis()).is_some()
    {
        dimension_bound = Some(2 * h.dim() <= n);
    }

    Ok(SubalgebraProperties {
        psi_homomorphism,
        psi_nilpotent,
        complement_invariant: report.complement_invariant,
        a_cap_h,
        a_cap_h_central,
        codim2,
        dimension_bound,
    })
}
