use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;

use super::SearchBudget;
use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::filiform;
use crate::linalg::{to_f64, Matrix, Scalar, Subspace, Vector};
use crate::metric::MetricLieAlgebra;
use crate::random;

/// Orthogonal bases adapted to the defining flag and, for filiform algebras,
/// to the Vergne flag.
fn adapted_bases(mg: &MetricLieAlgebra) -> Result<Vec<Vec<Vector>>> {
    let n = mg.dim();
    let mut flags: Vec<Vec<Vector>> = vec![(1..=n).map(|i| Vector::unit(n, i)).collect()];
    let g = mg.algebra();
    if g.is_nilpotent() && filiform::is_filiform(g)?.is_some() {
        let vb = filiform::vergne_basis(g)?;
        if vb.vectors != flags[0] {
            flags.push(vb.vectors);
        }
    }
    flags.iter().map(|f| mg.gram_schmidt_adapted(f)).collect()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

struct Collector<'a> {
    mg: &'a MetricLieAlgebra,
    k: usize,
    seen: HashSet<Subspace>,
    found: BTreeSet<Subspace>,
}

impl Collector<'_> {
    fn consider(&mut self, w: Subspace) -> Result<()> {
        if w.dim() != self.k || self.seen.contains(&w) {
            return Ok(());
        }
        self.seen.insert(w.clone());
        if !self.mg.algebra().is_subalgebra(&w) {
            return Ok(());
        }
        if self.mg.is_totally_geodesic(&w)?.totally_geodesic {
            self.found.insert(w);
        }
        Ok(())
    }
}

/// Structure constants in `f64`, used only to discard random frames whose
/// generated subalgebra is clearly too large before any exact work.
struct FloatAlgebra {
    n: usize,
    terms: Vec<(usize, usize, usize, f64)>,
}

impl FloatAlgebra {
    fn new(g: &LieAlgebra) -> Self {
        let terms = g.nonzero_constants().map(|(i, j, k, c)| (i - 1, j - 1, k - 1, to_f64(c))).collect();
        FloatAlgebra { n: g.dim(), terms }
    }

    fn br(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for &(i, j, k, c) in &self.terms {
            out[k] += c * (x[i] * y[j] - x[j] * y[i]);
        }
        out
    }

    /// Pushes the part of `v` orthogonal to `q`, if it is not negligible.
    fn extend(q: &mut Vec<Vec<f64>>, mut v: Vec<f64>) {
        let scale = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for _ in 0..2 {
            for b in q.iter() {
                let d: f64 = b.iter().zip(&v).map(|(a, c)| a * c).sum();
                v.iter_mut().zip(b).for_each(|(c, a)| *c -= d * a);
            }
        }
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 1e-8 * (1.0 + scale) {
            v.iter_mut().for_each(|x| *x /= r);
            q.push(v);
        }
    }

    /// `false` when the closure of `gens` numerically exceeds dimension `k`.
    fn closure_fits(&self, gens: &[Vec<f64>], k: usize) -> bool {
        let mut q = Vec::with_capacity(k + 1);
        for v in gens {
            Self::extend(&mut q, v.clone());
            if q.len() > k {
                return false;
            }
        }
        let mut j = 1;
        while j < q.len() {
            for i in 0..j {
                let b = self.br(&q[i], &q[j]);
                Self::extend(&mut q, b);
                if q.len() > k {
                    return false;
                }
            }
            j += 1;
        }
        true
    }
}

/// Perturbs `E_s -> E_s + t_s E_j` (for `s < j`) and solves the totally
/// geodesic conditions against `X = E_r`, `r` outside `S` and `j`, that are
/// linear in the `t_s`. Free parameters are set to zero.
fn pencil_candidate(mg: &MetricLieAlgebra, e: &[Vector], subset: &[usize], j: usize) -> Option<Subspace> {
    let g = mg.algebra();
    let n = e.len();
    let params: Vec<usize> = subset.iter().copied().filter(|&s| s < j).collect();
    if params.is_empty() {
        return None;
    }
    let p = params.len();
    let slot = |s: usize| params.iter().position(|&q| q == s);
    let ip = |a: &Vector, b: &Vector| mg.inner(a, b);
    let mut rows: Vec<Vector> = Vec::new();
    for r in (0..n).filter(|r| *r != j && !subset.contains(r)) {
        let x = &e[r];
        let xj = g.br(x, &e[j]);
        let quad = ip(&xj, &e[j]);
        let bx: Vec<Vector> = subset.iter().map(|&s| g.br(x, &e[s])).collect();
        for (ai, &a) in subset.iter().enumerate() {
            for (bi, &b) in subset.iter().enumerate().skip(ai) {
                let (sa, sb) = (slot(a), slot(b));
                if sa.is_some() && sb.is_some() && !quad.is_zero() {
                    continue;
                }
                // <[X, E_a + t_a E_j], E_b + t_b E_j> + (a <-> b)
                let mut row = vec![Scalar::zero(); p + 1];
                row[p] = ip(&bx[ai], &e[b]) + ip(&bx[bi], &e[a]);
                if let Some(i) = sa {
                    row[i] += ip(&xj, &e[b]) + ip(&bx[bi], &e[j]);
                }
                if let Some(i) = sb {
                    row[i] += ip(&bx[ai], &e[j]) + ip(&xj, &e[a]);
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(Vector::new(row));
                }
            }
        }
    }
    if rows.is_empty() {
        return None;
    }
    // solve A t = -c with free variables zero
    let aug = Matrix::from_rows(&rows, p + 1);
    let (rref, pivots) = aug.rref();
    if pivots.contains(&p) {
        return None;
    }
    let mut t = vec![Scalar::zero(); p];
    for (row, &col) in pivots.iter().enumerate() {
        t[col] = -rref.get(row, p).clone();
    }
    if t.iter().all(Zero::is_zero) {
        return None;
    }
    let frame = subset.iter().map(|&s| {
        let mut v = e[s].clone();
        if let Some(i) = slot(s) {
            v.add_scaled(&t[i], &e[j]);
        }
        v
    });
    Some(Subspace::span(n, frame))
}

/// Searches for `k`-dimensional totally geodesic subalgebras with three
/// strategies: coordinate subsets of adapted orthogonal bases, one-parameter
/// pencils of those, and `budget.max_candidates` seeded random frames inside
/// tails `span(E_m, ..., E_n)`. Only exactly verified subalgebras are
/// returned, deduplicated and sorted. An empty result is evidence, not proof.
pub fn search_tg_subalgebras(mg: &MetricLieAlgebra, k: usize, budget: &SearchBudget) -> Result<Vec<Subalgebra>> {
    let n = mg.dim();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("subalgebra dimension must satisfy 1 <= k < {n}, got {k}")));
    }
    let bases = adapted_bases(mg)?;
    let mut c = Collector { mg, k, seen: HashSet::new(), found: BTreeSet::new() };
    let subsets = k_subsets(n, k);

    for e in &bases {
        for s in &subsets {
            c.consider(Subspace::span(n, s.iter().map(|&i| e[i].clone())))?;
        }
    }
    for e in &bases {
        for s in &subsets {
            for j in (0..n).filter(|j| !s.contains(j)) {
                if let Some(w) = pencil_candidate(mg, e, s, j) {
                    c.consider(w)?;
                }
            }
        }
    }

    // Random frames are drawn with integer coordinates in an adapted basis
    // and closed in that basis, where the arithmetic stays small. A float
    // closure screens out frames that clearly generate too much; survivors
    // are closed exactly and mapped back.
    let g = mg.algebra();
    let mut frames = Vec::with_capacity(bases.len());
    for e in &bases {
        let rows = Matrix::from_rows(e, n);
        let local = g.change_basis(&rows)?;
        let float = FloatAlgebra::new(&local);
        frames.push((local, float, rows.transpose(), HashSet::new()));
    }
    let mut rng = random::rng(budget.seed);
    for attempt in 0..budget.max_candidates {
        let nf = frames.len();
        let (local, float, back, tried) = &mut frames[attempt % nf];
        let m = rand::Rng::random_range(&mut rng, 0..=n - k);
        let coeffs: Vec<Vec<i64>> = (0..k)
            .map(|_| {
                let mut v = vec![0i64; n];
                for x in &mut v[m..] {
                    *x = random::small_int(&mut rng, 2);
                }
                v
            })
            .collect();
        let approx: Vec<Vec<f64>> = coeffs.iter().map(|v| v.iter().map(|&x| x as f64).collect()).collect();
        if !float.closure_fits(&approx, k) {
            continue;
        }
        let span = Subspace::span(n, coeffs.iter().map(|v| Vector::from_ints(v)));
        if !tried.insert(span.clone()) {
            continue;
        }
        if let Some(w) = local.generated_subalgebra_bounded(span.basis(), k) {
            c.consider(w.map(back))?;
        }
    }

    c.found.into_iter().map(|w| mg.subalgebra(w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filiform::catalog;

    fn budget() -> SearchBudget {
        SearchBudget::default().with_candidates(300)
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(5, 5), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(k_subsets(6, 3).len(), 20);
    }

    #[test]
    fn even_span_in_l6() {
        let mg = MetricLieAlgebra::standard(catalog::standard_filiform(6).unwrap());
        let found = search_tg_subalgebras(&mg, 3, &budget()).unwrap();
        assert!(found.iter().any(|h| h.space() == &Subspace::coordinate(6, &[2, 4, 6])));
    }

    #[test]
    fn l4_planes() {
        let mg = MetricLieAlgebra::standard(catalog::standard_filiform(4).unwrap());
        let found: Vec<Subspace> = search_tg_subalgebras(&mg, 2, &budget()).unwrap().into_iter().map(|h| h.into_space()).collect();
        let a = Subspace::coordinate(4, &[2, 4]);
        let b = Subspace::span(4, [Vector::from_ints(&[0, 1, 0, -1]), Vector::from_ints(&[0, 0, 1, 0])]);
        assert!(found.contains(&a) && found.contains(&b), "{found:?}");
    }

    #[test]
    fn cd2f_codim_two_is_found() {
        for n in [5, 6, 7] {
            let cd = filiform::cd2f_construction(n).unwrap();
            let mg = cd.metric_algebra();
            let found = search_tg_subalgebras(&mg, n - 2, &budget()).unwrap();
            assert!(found.iter().any(|h| h.space() == cd.h.space()), "n = {n}");
        }
    }

    #[test]
    fn deterministic() {
        let mut rng = random::rng(9);
        let mg = MetricLieAlgebra::new(catalog::standard_filiform(5).unwrap(), random::metric(&mut rng, 5, 2)).unwrap();
        let a = search_tg_subalgebras(&mg, 2, &budget()).unwrap();
        let b = search_tg_subalgebras(&mg, 2, &budget()).unwrap();
        assert_eq!(a, b);
    }
}
