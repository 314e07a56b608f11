//! The reproduction suite: thirteen checks of the constructions and bounds,
//! each with a runtime limit. Used by `liegeo verify-paper` and by the
//! `acceptance` integration test.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use liegeo_core::filiform::{self, catalog};
use liegeo_core::linalg::{int, Matrix, Scalar, Subspace, Vector};
use liegeo_core::random::{self, SeededRng};
use liegeo_core::search::{self, SearchBudget};
use liegeo_core::{construct_geodesic_metric, killing_metric, Error, LieAlgebra, Metric, MetricLieAlgebra};
use num_traits::{Signed, Zero};
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({:.2}s, limit {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

type Check = fn(Level, &mut SeededRng) -> Result<String, String>;

struct Criterion {
    id: u8,
    title: &'static str,
    limit_secs: u64,
    check: Check,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "Levi-Civita connection is torsion-free and metric", limit_secs: 10, check: connection },
    Criterion { id: 2, title: "solvable rotation example: TG plane without invariant complement", limit_secs: 1, check: rotation_example },
    Criterion { id: 3, title: "central subspaces and subalgebras orthogonal to [g,g] are TG", limit_secs: 10, check: central_and_orthogonal },
    Criterion { id: 4, title: "codimension-2 TG subalgebra of L_n, n = 3..12", limit_secs: 5, check: codimension_two },
    Criterion { id: 5, title: "Vergne basis relations under random basis changes", limit_secs: 30, check: vergne_relations },
    Criterion { id: 6, title: "every metric Lie algebra has a geodesic (numeric)", limit_secs: 120, check: numeric_geodesics },
    Criterion { id: 7, title: "dim6 example: no TG subalgebra of dimension 3 or 4 found", limit_secs: 120, check: dim6_search },
    Criterion { id: 8, title: "dimension bounds: L_n standard <= n/2, cd2f exceeds with non-invariant complement", limit_secs: 120, check: dimension_bounds },
    Criterion { id: 9, title: "4-dim normal form, geodesic cone and TG planes", limit_secs: 60, check: four_dim },
    Criterion { id: 10, title: "rescaling L_C -> L_n preserves TG subalgebras", limit_secs: 30, check: rescaling },
    Criterion { id: 11, title: "every vector is geodesic for -Killing on so(3)", limit_secs: 5, check: compact_type },
    Criterion { id: 12, title: "psi is a nilpotent representation; codimension-2 structure", limit_secs: 30, check: psi_and_codim2 },
    Criterion { id: 13, title: "codimension-1 TG in h + R; geodesic metrics for nilpotent algebras", limit_secs: 10, check: codim1_and_geodesic_metrics },
];

pub fn ids() -> Vec<u8> {
    CRITERIA.iter().map(|c| c.id).collect()
}

pub fn run_one(id: u8, level: Level, seed: u64) -> Option<Outcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let mut rng = random::rng(seed ^ u64::from(id).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let start = Instant::now();
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.check)(level, &mut rng)))
        .unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(c.limit_secs);
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > limit {
        passed = false;
        detail = format!("exceeded time limit; {detail}");
    }
    Some(Outcome { id, title: c.title, passed, detail, elapsed, limit })
}

pub fn run_all(level: Level, seed: u64) -> Vec<Outcome> {
    ids().into_iter().filter_map(|id| run_one(id, level, seed)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: liegeo_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn name(g: &LieAlgebra) -> String {
    g.name().unwrap_or("unnamed").to_string()
}

/// Algebras used across the suite.
fn catalog_algebras(rng: &mut SeededRng) -> Vec<LieAlgebra> {
    let mut out = vec![catalog::heis3()];
    out.extend((4..=7).map(|n| catalog::standard_filiform(n).unwrap()));
    let c: Vec<Scalar> = (0..3).map(|_| random::nonzero_rational(rng, 3, 3)).collect();
    out.push(catalog::filiform_lc(&c).unwrap());
    out.extend([
        catalog::dim6_example(),
        catalog::irreg6_algebra(),
        catalog::heis6_2center(),
        catalog::so3(),
        catalog::sl2(),
        catalog::solv_rot(),
        catalog::solv_exp(),
        catalog::four_dim_alpha_one(),
        catalog::heis3().direct_sum(&LieAlgebra::abelian(1)).with_name("heis3+R"),
    ]);
    out
}

fn connection(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let algebras = catalog_algebras(rng);
    let pairs = level.pick(40, 200);
    for p in 0..pairs {
        let g = &algebras[p % algebras.len()];
        let n = g.dim();
        let mg = core(MetricLieAlgebra::new(g.clone(), random::metric(rng, n, 2)))?;
        let e: Vec<Vector> = (1..=n).map(|i| Vector::unit(n, i)).collect();
        let nabla: Vec<Vec<Vector>> =
            e.iter().map(|x| e.iter().map(|y| mg.levi_civita(x, y)).collect::<liegeo_core::Result<_>>()).collect::<liegeo_core::Result<_>>().map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in 0..n {
                let torsion = &(&nabla[i][j] - &nabla[j][i]) - &g.basis_bracket(i + 1, j + 1);
                ensure(torsion.is_zero(), || format!("torsion at ({}, {}) in {}", i + 1, j + 1, name(g)))?;
                for k in j..n {
                    let c = mg.inner(&nabla[i][j], &e[k]) + mg.inner(&e[j], &nabla[i][k]);
                    ensure(c.is_zero(), || format!("metric defect at ({}, {}, {}) in {}", i + 1, j + 1, k + 1, name(g)))?;
                }
            }
        }
    }
    Ok(format!("{pairs} (algebra, metric) pairs, all identities exact"))
}

fn rotation_example(_: Level, _: &mut SeededRng) -> Result<String, String> {
    let mg = MetricLieAlgebra::standard(catalog::solv_rot());
    let h = Subspace::coordinate(3, &[2, 3]);
    let r = core(mg.is_totally_geodesic(&h))?;
    ensure(r.totally_geodesic, || "span(Y, Z) is not totally geodesic".into())?;
    ensure(!r.complement_invariant, || "complement span(X) is invariant".into())?;
    // [X, Y] = Z leaves span(X)
    let x = Vector::unit(3, 1);
    ensure(!r.complement.contains(&catalog::solv_rot().basis_bracket(1, 2)) && r.complement.contains(&x), || "unexpected complement".into())?;
    Ok("span(Y, Z) totally geodesic, complement not invariant".into())
}

fn central_and_orthogonal(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let algebras = catalog_algebras(rng);
    let metrics = level.pick(10, 50);
    let mut checked = 0usize;
    for g in &algebras {
        let n = g.dim();
        let z = g.center();
        let d = g.derived_algebra();
        for _ in 0..metrics {
            let mg = core(MetricLieAlgebra::new(g.clone(), random::metric(rng, n, 2)))?;
            let mut candidates: Vec<Subspace> = Vec::new();
            if !z.is_zero() {
                candidates.push(z.clone());
                candidates.extend(z.basis().iter().map(|b| Subspace::span(n, [b.clone()])));
                let mut v = Vector::zeros(n);
                for b in z.basis() {
                    v.add_scaled(&int(random::small_int(rng, 3)), b);
                }
                if !v.is_zero() {
                    candidates.push(Subspace::span(n, [v]));
                }
            }
            let w = mg.orthogonal_complement(&d);
            if !w.is_zero() {
                candidates.extend(w.basis().iter().map(|b| Subspace::span(n, [b.clone()])));
                if g.is_subalgebra(&w) {
                    candidates.push(w.clone());
                }
            }
            for h in candidates {
                let r = core(mg.is_totally_geodesic(&h))?;
                ensure(r.totally_geodesic, || format!("{h} fails in {}", name(g)))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} subalgebras over {} algebras x {metrics} metrics", algebras.len()))
}

/// The basis `E` written out independently of the library.
fn cd2f_oracle_basis(n: usize) -> Vec<Vector> {
    fn binom(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }
    (1..=n)
        .map(|i| {
            let mut c = vec![0i64; n];
            if i == 1 || i == n {
                c[i - 1] = 1;
            } else {
                for j in 0..=(n - 1 - i) / 2 {
                    c[i + 2 * j - 1] = binom(n - 1 - i - j, j);
                }
            }
            Vector::from_ints(&c)
        })
        .collect()
}

fn codimension_two(_: Level, _: &mut SeededRng) -> Result<String, String> {
    for n in 3..=12 {
        let cd = core(filiform::cd2f_construction(n))?;
        ensure(cd.basis == cd2f_oracle_basis(n), || format!("basis E differs from the binomial formula at n = {n}"))?;
        ensure(cd.h.codim() == 2, || format!("codimension {} at n = {n}", cd.h.codim()))?;
        let g = &cd.algebra;
        for (a, ea) in cd.basis.iter().enumerate() {
            for (b, eb) in cd.basis.iter().enumerate() {
                let expected = if a == b { int(1) } else { int(0) };
                ensure(cd.metric.inner(ea, eb) == expected, || format!("E not orthonormal at n = {n}"))?;
            }
        }
        for i in 2..n {
            let lhs = core(g.bracket(&cd.basis[0], &cd.basis[i - 1]))?;
            let mut rhs = Vector::zeros(n);
            let mut k = i + 1;
            while k <= n {
                rhs = &rhs + &cd.basis[k - 1];
                k += 2;
            }
            ensure(lhs == rhs, || format!("[E_1, E_{i}] identity fails at n = {n}"))?;
        }
        let mg = cd.metric_algebra();
        let r = core(mg.is_totally_geodesic(&cd.h))?;
        ensure(r.totally_geodesic, || format!("h not totally geodesic at n = {n}"))?;
    }
    Ok("n = 3..12: codimension 2, exact TG, bracket identity holds".into())
}

/// Structure constants of `g` in the basis `vs`, by solving for coordinates.
fn constants_in(g: &LieAlgebra, vs: &[Vector]) -> Result<Vec<Vec<Vector>>, String> {
    let n = g.dim();
    let m = Matrix::from_rows(vs, n).transpose();
    let mut out = vec![vec![Vector::zeros(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            let b = core(g.bracket(&vs[i], &vs[j]))?;
            out[i][j] = m.solve(&b).ok_or("basis is singular")?;
        }
    }
    Ok(out)
}

fn vergne_oracle(g: &LieAlgebra, vs: &[Vector], alpha: &Scalar) -> Result<(), String> {
    let n = g.dim();
    let c = constants_in(g, vs)?;
    let unit = |k: usize| Vector::unit(n, k);
    for i in 2..n {
        ensure(c[0][i - 1] == unit(i + 1), || format!("[X_1, X_{i}] != X_{}", i + 1))?;
    }
    ensure(c[0][n - 1].is_zero(), || "[X_1, X_n] != 0".into())?;
    for i in 1..=n {
        for j in 1..=n {
            let v = &c[i - 1][j - 1];
            let lowest = v.coords().iter().position(|x| !x.is_zero()).map(|p| p + 1);
            if i + j == n + 1 && i >= 2 && i < n {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                ensure(*v == unit(n).scale(&(sign * alpha)), || format!("antidiagonal [X_{i}, X_{j}]"))?;
            } else if i != j && i + j != n + 1 {
                ensure(lowest.is_none_or(|l| l >= i + j), || format!("[X_{i}, X_{j}] not in g_{}", i + j))?;
            }
            ensure(lowest.is_none_or(|l| l + 1 >= i + j), || format!("[X_{i}, X_{j}] not in g_{}", i + j - 1))?;
        }
    }
    ensure(n % 2 == 0 || alpha.is_zero(), || "alpha != 0 in odd dimension".into())
}

fn vergne_relations(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let changes = level.pick(10, 50);
    let mut entries: Vec<LieAlgebra> = (3..=8).map(|n| catalog::standard_filiform(n).unwrap()).collect();
    entries.push(catalog::filiform_lc(&[int(2), int(3), int(4)]).unwrap());
    let c: Vec<Scalar> = (0..4).map(|_| random::nonzero_rational(rng, 3, 3)).collect();
    entries.push(catalog::filiform_lc(&c).unwrap());
    entries.extend([catalog::dim6_example(), catalog::irreg6_algebra(), catalog::four_dim_alpha_one()]);
    let mut total = 0;
    for g in &entries {
        for _ in 0..changes {
            let p = random::invertible_matrix(rng, g.dim(), 2);
            let h = core(g.change_basis(&p))?;
            let vb = core(filiform::vergne_basis(&h))?;
            vergne_oracle(&h, &vb.vectors, &vb.alpha).map_err(|e| format!("{} after basis change: {e}", name(g)))?;
            total += 1;
        }
    }
    let ir = core(filiform::vergne_basis(&catalog::irreg6_algebra()))?;
    ensure(ir.alpha == int(1), || format!("irreg6 alpha = {}", ir.alpha))?;
    let four = core(filiform::vergne_basis(&catalog::four_dim_alpha_one()))?;
    let expected = vec![
        Vector::from_ints(&[1, 0, 0, 0]),
        Vector::from_ints(&[-1, 1, 0, 0]),
        Vector::from_ints(&[0, 0, 1, 0]),
        Vector::from_ints(&[0, 0, 0, 1]),
    ];
    ensure(four.vectors == expected, || "4-dim example basis is not {X_1, X_2 - X_1, X_3, X_4}".into())?;
    Ok(format!("{total} Vergne bases verified; irreg6 alpha = 1; 4-dim example basis matches"))
}

fn random_test_algebra(i: usize, rng: &mut SeededRng) -> LieAlgebra {
    match i % 8 {
        0 => catalog::standard_filiform(rng.random_range(3..=7)).unwrap(),
        1 => catalog::so3(),
        2 => catalog::sl2(),
        3 => match rng.random_range(0..=4) {
            0 => catalog::solv_exp(),
            k => catalog::solv_exp().direct_sum(&LieAlgebra::abelian(k)),
        },
        4 => catalog::solv_rot().direct_sum(&catalog::heis3()),
        5 => [catalog::dim6_example(), catalog::irreg6_algebra(), catalog::heis6_2center()][rng.random_range(0..3)].clone(),
        6 => {
            let g = if rng.random_bool(0.5) { catalog::so3().direct_sum(&catalog::so3()) } else { catalog::sl2().direct_sum(&LieAlgebra::abelian(2)) };
            let p = random::invertible_matrix(rng, g.dim(), 2);
            g.change_basis(&p).unwrap()
        }
        _ => {
            let n = rng.random_range(4..=7);
            let c: Vec<Scalar> = (0..n - 2).map(|_| random::nonzero_rational(rng, 3, 3)).collect();
            catalog::filiform_lc(&c).unwrap()
        }
    }
}

fn numeric_geodesics(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let count = level.pick(20, 100);
    let mut exact = 0;
    let mut slowest = Duration::ZERO;
    let mut worst: f64 = 0.0;
    for i in 0..count {
        let g = random_test_algebra(i, rng);
        let n = g.dim();
        let mg = core(MetricLieAlgebra::new(g, random::metric(rng, n, 2)))?;
        let budget = SearchBudget::default().with_seed(rng.random());
        let start = Instant::now();
        let r = core(search::find_geodesic_numeric(&mg, &budget))?;
        let t = start.elapsed();
        slowest = slowest.max(t);
        worst = worst.max(r.residual);
        ensure(r.converged && r.residual <= 1e-10, || format!("case {i} (dim {n}) did not converge: residual {:e}", r.residual))?;
        ensure(t <= Duration::from_secs(1), || format!("case {i} took {:.2}s", t.as_secs_f64()))?;
        if let Some(v) = &r.exact {
            ensure(core(mg.geodesic_defect(v))?.is_zero(), || "reported exact geodesic has nonzero defect".into())?;
            exact += 1;
        }
    }
    Ok(format!(
        "{count} algebras converged; max residual {worst:e}; slowest solve {:.3}s; {exact} exact rational geodesics confirmed",
        slowest.as_secs_f64()
    ))
}

fn dim6_search(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let metrics = level.pick(5, 50);
    let candidates = level.pick(1_000, 10_000);
    let g = catalog::dim6_example();
    for m in 0..metrics {
        let mg = core(MetricLieAlgebra::new(g.clone(), random::metric(rng, 6, 2)))?;
        for k in [3, 4] {
            let budget = SearchBudget::default().with_seed(rng.random()).with_candidates(candidates);
            let found = core(search::search_tg_subalgebras(&mg, k, &budget))?;
            ensure(found.is_empty(), || format!("metric {m}: found a {k}-dimensional TG subalgebra {}", found[0].space()))?;
        }
    }
    Ok(format!(
        "{metrics} random metrics x {candidates} candidates at k = 3, 4: nothing found; consistent with the dimension-6 theorem (evidence, not a proof)"
    ))
}

fn dimension_bounds(level: Level, _: &mut SeededRng) -> Result<String, String> {
    let budget = SearchBudget::default().with_candidates(level.pick(200, 2_000));
    let mut notes = Vec::new();
    for n in 4..=8 {
        let mg = MetricLieAlgebra::standard(catalog::standard_filiform(n).unwrap());
        let a = core(search::audit_dimension_bounds(&mg, &budget))?;
        ensure(a.standard_bound_checked, || "standard bound not applied".into())?;
        ensure(2 * a.max_found_dim <= n, || format!("L_{n}: found dimension {}", a.max_found_dim))?;
        notes.push(format!("L_{n} max {}", a.max_found_dim));
    }
    for n in 5..=8 {
        let cd = core(filiform::cd2f_construction(n))?;
        let mg = cd.metric_algebra();
        let found = core(search::search_tg_subalgebras(&mg, n - 2, &budget))?;
        let hit = found.iter().find(|h| h.space() == cd.h.space()).ok_or_else(|| format!("cd2f n = {n}: h not found"))?;
        let r = core(mg.is_totally_geodesic(hit))?;
        ensure(!r.complement_invariant, || format!("cd2f n = {n}: complement invariant"))?;
        if n <= 6 {
            core(search::audit_dimension_bounds(&mg, &budget))?;
        }
        notes.push(format!("cd2f{n} dim {} found, complement not invariant", n - 2));
    }
    Ok(notes.join("; "))
}

fn integer_basis_change(rng: &mut SeededRng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vector> = (0..n).map(|_| random::int_vector(rng, n, 2)).collect();
        let m = Matrix::from_rows(&rows, n);
        if m.rank() == n {
            return m;
        }
    }
}

fn four_dim(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let fixtures = level.pick(20, 100);
    let points = level.pick(100, 1000);
    let budget = SearchBudget::default().with_candidates(100);
    let (mut on_cone, mut zero_beta) = (0usize, 0usize);
    for f in 0..fixtures {
        // Even fixtures: b = 0 with a metric diagonal in the defining basis,
        // so beta = 0. Others: b != 0 on a diagonal metric, or a random metric.
        let a = random::nonzero_rational(rng, 3, 3);
        let c = random::nonzero_rational(rng, 3, 3);
        let b = if f % 2 == 0 { int(0) } else { random::nonzero_rational(rng, 3, 3) };
        let diagonal = f % 4 != 3;
        let g0 = core(catalog::four_dim(&a, &b, &c))?;
        let gram0 = if diagonal {
            Matrix::diagonal(&(0..4).map(|_| int(rng.random_range(1..=4))).collect::<Vec<_>>())
        } else {
            random::spd_gram(rng, 4, 2)
        };
        let p = integer_basis_change(rng, 4);
        let g = core(g0.change_basis(&p))?;
        let gram = p.mul(&gram0).mul(&p.transpose());
        let mg = core(MetricLieAlgebra::new(g.clone(), core(Metric::new(gram))?))?;
        let nf = core(filiform::normalize_4d(&mg))?;
        ensure(nf.alpha.is_positive() && nf.gamma.is_positive(), || format!("fixture {f}: alpha or gamma not positive"))?;
        let consts = constants_in(&g, &nf.basis)?;
        ensure(consts[0][1] == Vector::new(vec![int(0), int(0), nf.alpha.clone(), nf.beta.clone()]), || "[X_1, X_2] mismatch".into())?;
        ensure(consts[0][2] == Vector::new(vec![int(0), int(0), int(0), nf.gamma.clone()]), || "[X_1, X_3] mismatch".into())?;
        for (i, j) in [(0, 3), (1, 2), (1, 3), (2, 3)] {
            ensure(consts[i][j].is_zero(), || format!("[X_{}, X_{}] != 0", i + 1, j + 1))?;
        }
        if diagonal {
            ensure(nf.beta.is_zero() == b.is_zero(), || format!("fixture {f}: beta = {} but b = {b}", nf.beta))?;
        }

        let (n3, n4) = (&nf.norms_sq[2], &nf.norms_sq[3]);
        for p in 0..points {
            let x = random::rational(rng, 5, 4);
            let y = random::rational(rng, 5, 4);
            let mut z = random::rational(rng, 5, 4);
            if p % 2 == 0 {
                let den = &nf.beta * n4 * &x + &nf.gamma * n4 * &y;
                if !den.is_zero() {
                    z = -(&nf.alpha * n3 * &x * &y) / den;
                }
            }
            // being geodesic depends only on the line; test its primitive integer point
            let v = nf.point(&x, &y, &z).primitive();
            if v.is_zero() {
                continue;
            }
            let cone = filiform::geodesic_cone_4d(&nf, &x, &y, &z);
            let exact = core(mg.is_geodesic(&v))?.geodesic;
            ensure(cone == exact, || format!("fixture {f}: cone says {cone}, defect says {exact} at ({x}, {y}, {z})"))?;
            on_cone += usize::from(cone);
        }

        let planes = core(filiform::tg_2d_subalgebras_4d(&mg, &nf))?;
        let found = core(search::search_tg_subalgebras(&mg, 2, &budget.with_seed(rng.random())))?;
        if nf.beta.is_zero() {
            zero_beta += 1;
            ensure(planes.len() == 2, || "expected two TG planes".into())?;
            for h in &planes {
                ensure(core(mg.is_totally_geodesic(h))?.totally_geodesic, || "stated plane is not TG".into())?;
            }
            ensure(found.len() == 2 && found.iter().all(|h| planes.contains(h)), || {
                format!("fixture {f}: search found {} TG planes, expected exactly the two stated ones", found.len())
            })?;
        } else {
            ensure(planes.is_empty() && found.is_empty(), || format!("fixture {f}: TG plane with beta != 0"))?;
        }
    }
    Ok(format!("{fixtures} fixtures ({zero_beta} with beta = 0), {points} points each, {on_cone} on the cone; all agree"))
}

fn rescaling(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let lists = level.pick(20, 100);
    let budget = SearchBudget::default().with_candidates(30);
    let mut mapped = 0;
    for _ in 0..lists {
        let n = rng.random_range(4..=7);
        let c: Vec<Scalar> = (0..n - 2).map(|_| random::nonzero_rational(rng, 3, 3)).collect();
        let lc = MetricLieAlgebra::standard(core(catalog::filiform_lc(&c))?);
        let ln = MetricLieAlgebra::standard(catalog::standard_filiform(n).unwrap());
        let phi = core(filiform::lc_rescaling_map(&c))?;
        let evens: Vec<usize> = (2..=n).step_by(2).collect();
        let mut hs: BTreeSet<Subspace> = BTreeSet::new();
        hs.insert(Subspace::coordinate(n, &evens));
        for k in 1..n {
            for h in core(search::search_tg_subalgebras(&lc, k, &budget.with_seed(rng.random())))? {
                hs.insert(h.into_space());
            }
        }
        for h in hs {
            ensure(core(lc.is_totally_geodesic(&h))?.totally_geodesic, || format!("{h} is not TG in L_C"))?;
            let image = h.map(&phi);
            ensure(ln.algebra().is_subalgebra(&image), || format!("image of {h} is not a subalgebra of L_{n}"))?;
            ensure(core(ln.is_totally_geodesic(&image))?.totally_geodesic, || format!("image of {h} is not TG in L_{n} (C = {c:?})"))?;
            mapped += 1;
        }
    }
    Ok(format!("{lists} coefficient lists, {mapped} TG subalgebras mapped to TG subalgebras"))
}

fn compact_type(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let g = catalog::so3();
    let metric = core(killing_metric(&g))?;
    ensure(metric.gram() == &Matrix::identity(3).scale(&int(2)), || "-Killing form of so(3) is not 2I".into())?;
    let mg = core(MetricLieAlgebra::new(g, metric))?;
    let samples = level.pick(200, 1000);
    for _ in 0..samples {
        let mut v = random::rational_vector(rng, 3, 9, 5);
        if v.is_zero() {
            v = Vector::unit(3, 1);
        }
        ensure(core(mg.is_geodesic(&v))?.geodesic, || format!("{v} is not geodesic"))?;
    }
    ensure(matches!(killing_metric(&catalog::sl2()), Err(Error::NotCompactType)), || "sl(2) accepted as compact".into())?;
    Ok(format!("{samples} random vectors all geodesic"))
}

fn psi_and_codim2(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let budget = SearchBudget::default().with_candidates(level.pick(50, 200));
    let mut corpus: Vec<(String, MetricLieAlgebra, Subspace)> = Vec::new();
    for n in 3..=12 {
        let cd = core(filiform::cd2f_construction(n))?;
        corpus.push((format!("cd2f{n}"), cd.metric_algebra(), cd.h.into_space()));
    }
    let mut settings: Vec<(String, MetricLieAlgebra)> =
        (4..=7).map(|n| (format!("L{n}"), MetricLieAlgebra::standard(catalog::standard_filiform(n).unwrap()))).collect();
    for g in [catalog::standard_filiform(5).unwrap(), catalog::dim6_example(), catalog::irreg6_algebra(), catalog::heis6_2center()] {
        for _ in 0..level.pick(1, 3) {
            let n = g.dim();
            settings.push((format!("{} random metric", name(&g)), core(MetricLieAlgebra::new(g.clone(), random::metric(rng, n, 2)))?));
        }
    }
    for _ in 0..level.pick(2, 5) {
        let n = rng.random_range(4..=7);
        let c: Vec<Scalar> = (0..n - 2).map(|_| random::nonzero_rational(rng, 3, 3)).collect();
        settings.push((format!("L_C {c:?}"), MetricLieAlgebra::standard(core(catalog::filiform_lc(&c))?)));
    }
    for _ in 0..level.pick(2, 5) {
        let a = random::nonzero_rational(rng, 3, 3);
        let c = random::nonzero_rational(rng, 3, 3);
        let g = core(catalog::four_dim(&a, &int(0), &c))?;
        let mg = MetricLieAlgebra::standard(g);
        let nf = core(filiform::normalize_4d(&mg))?;
        for h in core(filiform::tg_2d_subalgebras_4d(&mg, &nf))? {
            corpus.push(("4-dim plane".into(), mg.clone(), h.into_space()));
        }
        settings.push(("4-dim".into(), mg));
    }
    for g in catalog_algebras(rng).into_iter().filter(LieAlgebra::is_nilpotent) {
        let n = g.dim();
        let mg = core(MetricLieAlgebra::new(g.clone(), random::metric(rng, n, 2)))?;
        let z = g.center();
        if z.dim() < n {
            corpus.push((format!("{} center", name(&g)), mg.clone(), z));
        }
        let w = mg.orthogonal_complement(&g.derived_algebra());
        if !w.is_zero() && w.dim() < n && g.is_subalgebra(&w) {
            corpus.push((format!("{} [g,g] perp", name(&g)), mg, w));
        }
    }
    settings.push(("solv_rot".into(), MetricLieAlgebra::standard(catalog::solv_rot())));
    for (label, mg) in settings {
        for k in 1..mg.dim() {
            for h in core(search::search_tg_subalgebras(&mg, k, &budget.with_seed(rng.random())))? {
                corpus.push((label.clone(), mg.clone(), h.into_space()));
            }
        }
    }
    let mut codim2 = 0;
    for (label, mg, h) in &corpus {
        let p = core(search::verify_found_subalgebra_properties(mg, h))?;
        ensure(p.psi_homomorphism, || format!("{label}: psi is not a homomorphism on {h}"))?;
        ensure(p.psi_nilpotent != Some(false), || format!("{label}: psi not nilpotent on {h}"))?;
        if let Some(c) = &p.codim2 {
            ensure(c.all(), || format!("{label}: codimension-2 structure fails on {h}: {c:?}"))?;
            codim2 += 1;
        }
        ensure(p.dimension_bound != Some(false), || format!("{label}: dimension bound fails on {h}"))?;
    }
    ensure(codim2 > 0, || "no codimension-2 cases in the corpus".into())?;

    let ir = catalog::irreg6();
    let mg = core(MetricLieAlgebra::new(ir.algebra.clone(), ir.metric.clone()))?;
    let p = core(search::verify_found_subalgebra_properties(&mg, &ir.h))?;
    ensure(p.psi_homomorphism && p.psi_nilpotent == Some(true), || "irreg6: psi checks fail".into())?;
    ensure(!p.a_cap_h_central, || "irreg6: a ∩ h is central, expected otherwise".into())?;
    ensure(p.a_cap_h == Subspace::span(6, [ir.basis[4].clone(), ir.basis[5].clone()]), || "irreg6: a ∩ h != span(E_5, E_6)".into())?;
    Ok(format!("{} TG subalgebras checked ({codim2} of codimension 2); irreg6 a ∩ h not central", corpus.len()))
}

fn codim1_and_geodesic_metrics(level: Level, rng: &mut SeededRng) -> Result<String, String> {
    let budget = SearchBudget::default().with_candidates(50);
    let mut sums: Vec<LieAlgebra> = (3..=6).map(|n| catalog::standard_filiform(n).unwrap()).collect();
    sums.push(catalog::heis6_2center());
    sums.push(catalog::dim6_example());
    for g in &sums {
        let n = g.dim();
        let s = g.direct_sum(&LieAlgebra::abelian(1));
        let mg = MetricLieAlgebra::standard(s);
        let h: Vec<usize> = (1..=n).collect();
        let h = Subspace::coordinate(n + 1, &h);
        ensure(core(mg.is_totally_geodesic(&h))?.totally_geodesic, || format!("{} + R: first factor not TG", name(g)))?;
        let found = core(search::search_tg_subalgebras(&mg, n, &budget))?;
        ensure(found.iter().any(|f| f.space() == &h), || format!("{} + R: search missed the codimension-1 factor", name(g)))?;
    }

    let randoms = level.pick(5, 20);
    let mut built = 0;
    for g in catalog_algebras(rng).into_iter().filter(LieAlgebra::is_nilpotent) {
        let n = g.dim();
        let mut vs: Vec<Vector> = (1..=n).map(|i| Vector::unit(n, i)).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                vs.push(&Vector::unit(n, i) + &Vector::unit(n, j));
            }
        }
        vs.extend((0..randoms).map(|_| random::nonzero_int_vector(rng, n, 4)));
        for y in vs {
            let metric = construct_geodesic_metric(&g, &y).map_err(|e| format!("{}: {y}: {e}", name(&g)))?;
            let mg = core(MetricLieAlgebra::new(g.clone(), metric))?;
            ensure(core(mg.is_geodesic(&y))?.geodesic, || format!("{}: constructed metric does not make {y} geodesic", name(&g)))?;
            built += 1;
        }
    }

    // In solv_exp, y = aX + bY + cZ lies in [y, g] exactly when a = 0 and
    // bc = 0, i.e. on the lines of Y and Z.
    let solv = catalog::solv_exp();
    ensure(matches!(construct_geodesic_metric(&solv, &Vector::unit(3, 2)), Err(Error::NoGeodesicMetric)), || "solv_exp: Y accepted".into())?;
    let mut samples = vec![Vector::unit(3, 1), Vector::unit(3, 3), Vector::from_ints(&[0, 1, 1])];
    samples.extend((0..randoms).map(|i| {
        let mut v = random::nonzero_int_vector(rng, 3, 3);
        if i % 2 == 0 {
            v = Vector::new(vec![int(0), v[1].clone(), v[2].clone()]);
        }
        v
    }));
    for y in samples.into_iter().filter(|y| !y.is_zero()) {
        let blocked = y[0].is_zero() && (&y[1] * &y[2]).is_zero();
        match construct_geodesic_metric(&solv, &y) {
            Err(Error::NoGeodesicMetric) => ensure(blocked, || format!("solv_exp: {y} rejected"))?,
            Ok(m) => {
                ensure(!blocked, || format!("solv_exp: {y} accepted"))?;
                ensure(core(core(MetricLieAlgebra::new(solv.clone(), m))?.is_geodesic(&y))?.geodesic, || format!("solv_exp: {y} not geodesic"))?;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{} direct sums with codimension-1 TG factor; {built} geodesic metrics constructed; solv_exp rejects exactly the lines of Y and Z", sums.len()))
}
