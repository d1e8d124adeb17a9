//! Built-in verification grid: every closed form is checked against an
//! independent numerical computation on truncated matrices.

use std::fmt::Write as _;
use std::io::Write;

use clap::ValueEnum;
use fock_core::classify::{classify, critical_c, eigenvalue_bound, exact_norm, ClassifyOptions, KernelOperator};
use fock_core::matrix::{build_matrix, default_outer, weyl_conjugate, weyl_matrix, OperatorSpec};
use fock_core::numerics::{
    adjoint_residual, conjugation_residual, eigen_relation_check, gram_kernel_eigen_residual, op_norm_at,
    op_norm_estimate, self_commutator, spectral_radius_estimate, truncated_eigenvalues, DefectKind,
    NumericsConfig, WitnessProfile, WITNESS_LEVEL,
};
use fock_core::scalar::{abs, arg, c64, cis, exp, ln};
use fock_core::symbol::AffineSymbol;
use fock_core::vector::normalized_kernel_vector;
use fock_core::weight::EntireWeight;
use fock_core::{FockError, C64};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::short;
use crate::config::{OutputFormat, RunConfig};
use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Norms,
    Commutator,
    Conjugation,
    Adjoint,
    Spectrum,
    Witness,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Norms, Suite::Commutator, Suite::Conjugation, Suite::Adjoint, Suite::Spectrum, Suite::Witness];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Norms => "norms",
            Suite::Commutator => "commutator",
            Suite::Conjugation => "conjugation",
            Suite::Adjoint => "adjoint",
            Suite::Spectrum => "spectrum",
            Suite::Witness => "witness",
            Suite::All => "all",
        }
    }
}

/// Direction of the comparison against the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub label: &'static str,
    pub params: String,
    pub metric: &'static str,
    pub value: Option<f64>,
    pub relation: Relation,
    pub tol: f64,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn measure(suite: Suite, label: &'static str, params: String, metric: &'static str, value: f64, relation: Relation, tol: f64) -> Self {
        let passed = match relation {
            Relation::AtMost => value <= tol,
            Relation::AtLeast => value >= tol,
        };
        Self { suite: suite.name(), label, params, metric, value: Some(value), relation, tol, passed, detail: None }
    }

    fn at_most(suite: Suite, label: &'static str, params: String, metric: &'static str, value: f64, tol: f64) -> Self {
        Self::measure(suite, label, params, metric, value, Relation::AtMost, tol)
    }

    fn failed(suite: Suite, label: &'static str, params: String, err: FockError) -> Self {
        Self {
            suite: suite.name(),
            label,
            params,
            metric: "error",
            value: None,
            relation: Relation::AtMost,
            tol: 0.0,
            passed: false,
            detail: Some(err.to_string()),
        }
    }

    fn from_result(
        suite: Suite,
        label: &'static str,
        params: String,
        metric: &'static str,
        tol: f64,
        value: Result<f64, FockError>,
    ) -> Self {
        match value {
            Ok(v) => Self::at_most(suite, label, params, metric, v, tol),
            Err(e) => Self::failed(suite, label, params, e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub suite: &'static str,
    pub inner_dim: usize,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub total: usize,
}

impl VerifyOutcome {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Tolerances used by the suite after applying the low-dimension floor.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Tolerances {
    norm: f64,
    residual: f64,
    relation: f64,
    unitarity: f64,
    floor: f64,
}

impl Tolerances {
    fn new(cfg: &RunConfig) -> Self {
        let floor = if cfg.relaxed() { 1e-5 } else { 0.0 };
        Self {
            norm: 1e-6f64.max(floor),
            residual: cfg.tol.max(floor),
            relation: 1e-10f64.max(floor),
            unitarity: 1e-10f64.max(floor),
            floor,
        }
    }
}

/// Weighted grid point `(a, b, c)`, with `c` one of `0`, `0.5` or critical.
#[derive(Debug, Clone, Copy)]
struct GridPoint {
    a: C64,
    b: C64,
    c: C64,
    critical: bool,
}

impl GridPoint {
    fn op(&self) -> KernelOperator {
        KernelOperator::from_parts(c64(1.0, 0.0), self.c, self.a, self.b)
    }

    fn params(&self) -> String {
        format!("a={},b={},c={}", short(self.a), short(self.b), short(self.c))
    }
}

fn grid_symbols() -> Vec<(C64, C64)> {
    let mut out = Vec::new();
    for a in [c64(0.3, 0.0), c64(-0.7, 0.0), c64(0.0, 0.5)] {
        for b in [c64(0.0, 0.0), c64(0.4, 0.0), c64(0.0, 0.8)] {
            out.push((a, b));
        }
    }
    out
}

fn weighted_grid() -> Vec<GridPoint> {
    let mut out = Vec::new();
    for (a, b) in grid_symbols() {
        let crit = critical_c(a, b);
        for (c, critical) in [(c64(0.0, 0.0), false), (c64(0.5, 0.0), false), (crit, true)] {
            let critical = critical || abs(c - crit) <= 1e-12;
            out.push(GridPoint { a, b, c, critical });
        }
    }
    out
}

/// Bounded unit-circle specs `(a, b, c)`.
fn unit_circle_specs() -> Vec<(C64, C64, C64)> {
    let mut out = vec![(c64(0.0, 1.0), c64(1.0, 0.0), c64(0.0, 1.0)), (c64(1.0, 0.0), c64(2.0, 0.0), c64(-2.0, 0.0))];
    let (a, b) = (c64(-1.0, 0.0), c64(0.5, 0.5));
    out.push((a, b, -(a.conj() * b)));
    out
}

fn sym_params(a: C64, b: C64) -> String {
    format!("a={},b={}", short(a), short(b))
}

type Task<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;

fn norms(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Norms;
    let mut tasks: Vec<Task> = Vec::new();
    for (a, b) in grid_symbols() {
        tasks.push(Box::new(move || {
            let denom = 1.0 - a.norm_sqr();
            let closed = exp(0.5 * b.norm_sqr() / denom);
            let spec = OperatorSpec::composition(AffineSymbol::new(a, b));
            let value = op_norm_estimate(&spec, &cfg.numerics()).map(|e| (e.value - closed).abs() / closed);
            vec![Check::from_result(s, "composition norm", sym_params(a, b), "rel_err", t.norm, value)]
        }));
    }
    for p in weighted_grid() {
        tasks.push(Box::new(move || {
            let value = exact_norm(&p.op(), &ClassifyOptions::default()).and_then(|closed| {
                let est = op_norm_estimate(&p.op().spec(), &cfg.numerics())?;
                Ok((est.value - closed).abs() / closed)
            });
            vec![Check::from_result(s, "weighted norm (first factor |psi(p)|)", p.params(), "rel_err", t.norm, value)]
        }));
    }
    for (a, b, c) in unit_circle_specs() {
        tasks.push(Box::new(move || {
            let params = format!("a={},b={},c={}", short(a), short(b), short(c));
            let op = KernelOperator::from_parts(c64(1.0, 0.0), c, a, b);
            let closed = match exact_norm(&op, &ClassifyOptions::default()) {
                Ok(v) => v,
                Err(e) => return vec![Check::failed(s, "unit-circle norm", params, e)],
            };
            let n = cfg.inner_dim.min(48);
            let svd = op_norm_at(&op.spec(), n, 4 * n).map(|v| (v - closed).abs() / closed);
            let iso = isometry_gap(&op.spec(), closed, cfg.inner_dim.min(32));
            vec![
                Check::from_result(s, "unit-circle norm", params.clone(), "rel_err", t.norm, svd),
                Check::from_result(s, "multiple of an isometry", params, "max_rel_err", t.norm, iso),
            ]
        }));
    }
    tasks
}

/// Largest `|‖Ax‖ − norm·‖x‖| / (norm·‖x‖)` over ten fixed random vectors,
/// with the outer dimension doubled until `‖Ax‖` stops moving.
fn isometry_gap(spec: &OperatorSpec, norm: f64, inner: usize) -> Result<f64, FockError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    let vectors: Vec<DVector<C64>> = (0..10)
        .map(|_| {
            let v = DVector::from_fn(inner, |_, _| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let n = v.norm();
            v / c64(n, 0.0)
        })
        .collect();
    let mut outer = default_outer(inner);
    let mut prev: Option<Vec<f64>> = None;
    loop {
        let a = build_matrix(spec, outer, inner)?.into_entries();
        let norms: Vec<f64> = vectors.iter().map(|x| (&a * x).norm()).collect();
        if let Some(p) = &prev {
            let settled = p.iter().zip(&norms).all(|(x, y)| (x - y).abs() <= 1e-13 * y.max(1.0));
            if settled {
                for y in norms {
                    worst = worst.max((y - norm).abs() / norm);
                }
                return Ok(worst);
            }
        }
        if outer >= 1024 {
            return Err(FockError::NonConvergence { what: "isometry check", dim: outer, delta: f64::INFINITY });
        }
        prev = Some(norms);
        outer *= 2;
    }
}

fn commutator(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Commutator;
    let n = cfg.inner_dim.min(48);
    weighted_grid()
        .into_iter()
        .map(|p| -> Task {
            Box::new(move || {
                let numerics = NumericsConfig { normal_tol: t.residual, ..cfg.numerics() };
                let verdict = match self_commutator(&p.op().spec(), n, &numerics) {
                    Ok(v) => v,
                    Err(e) => return vec![Check::failed(s, "self-commutator", p.params(), e)],
                };
                if p.critical {
                    let mut c = Check::at_most(s, "normal at critical weight", p.params(), "defect", verdict.defect_norm, t.residual);
                    c.passed &= verdict.verdict == DefectKind::NormalLike;
                    vec![c]
                } else {
                    let spread = (-verdict.min_eig).min(verdict.max_eig);
                    let mut c = Check::measure(
                        s,
                        "indefinite off critical weight",
                        p.params(),
                        "min(|min_eig|,max_eig)",
                        spread,
                        Relation::AtLeast,
                        numerics.indefinite_tol,
                    );
                    c.passed &= verdict.verdict == DefectKind::Indefinite;
                    vec![c]
                }
            })
        })
        .collect()
}

fn spectrum(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Spectrum;
    let n = cfg.inner_dim;
    let mut tasks: Vec<Task> = Vec::new();
    for p in weighted_grid() {
        tasks.push(Box::new(move || {
            let spec = p.op().spec();
            let norm = match op_norm_estimate(&spec, &cfg.numerics()) {
                Ok(e) => e.value,
                Err(e) => return vec![Check::failed(s, "spectral radius", p.params(), e)],
            };
            let eig = match truncated_eigenvalues(&spec, n) {
                Ok(v) => v,
                Err(e) => return vec![Check::failed(s, "spectral radius", p.params(), e)],
            };
            let radius = eig.first().map_or(0.0, |z| abs(*z));
            let mut out = Vec::new();
            if p.critical {
                out.push(Check::at_most(s, "norm equals spectral radius", p.params(), "abs_gap", (norm - radius).abs(), t.norm));
            } else if p.b != C64::default() {
                out.push(Check::measure(s, "norm exceeds spectral radius", p.params(), "gap", norm - radius, Relation::AtLeast, 1e-3));
            } else {
                out.push(Check::at_most(s, "spectral radius below norm", p.params(), "excess", radius - norm, t.norm));
            }
            let bound = eigenvalue_bound(&p.op(), &ClassifyOptions::default()).unwrap_or(f64::NAN);
            let excess = eig.iter().map(|z| abs(*z) / bound - 1.0).fold(f64::NEG_INFINITY, f64::max);
            out.push(Check::at_most(s, "eigenvalue bound |psi(p)|", p.params(), "max_rel_excess", excess, 1e-6f64.max(t.floor)));
            out
        }));
    }
    let kernel = KernelOperator::from_parts(c64(1.0, 0.0), c64(0.3, 0.0), c64(0.5, 0.0), c64(0.3, 0.0));
    tasks.push(Box::new(move || {
        let lead = exp(0.18);
        let value = truncated_eigenvalues(&kernel.spec(), n).map(|ev| {
            ev.iter()
                .take(3)
                .enumerate()
                .map(|(k, z)| abs(*z - c64(lead * 0.5f64.powi(k as i32), 0.0)))
                .fold(0.0, f64::max)
        });
        vec![Check::from_result(s, "leading eigenvalues e^0.18*{1,1/2,1/4}", "a=0.5,b=0.3,c=0.3".into(), "max_abs_err", t.norm, value)]
    }));
    tasks.push(Box::new(move || {
        let spec = OperatorSpec::composition(AffineSymbol::new(c64(0.5, 0.0), c64(0.3, 0.0)));
        let value = spectral_radius_estimate(&spec, n).map(|r| (r - 1.0).abs());
        vec![Check::from_result(s, "composition spectral radius 1", sym_params(c64(0.5, 0.0), c64(0.3, 0.0)), "abs_err", t.residual, value)]
    }));
    tasks.push(Box::new(move || {
        let zs = [C64::default(), c64(1.0, 0.0), c64(0.0, 1.0)];
        let k = EntireWeight::kernel(c64(0.6, 0.0));
        let shifted = EntireWeight::polynomial(vec![c64(-0.6, 0.0), c64(1.0, 0.0)]).mul(&k);
        let lead = c64(exp(0.18), 0.0);
        let spec = kernel.spec();
        let mut out = Vec::new();
        for (name, lambda, h) in [("h=K_0.6", lead, &k), ("h=(z-0.6)K_0.6", lead * 0.5, &shifted)] {
            for n in [1u64, 2, 4] {
                let value = eigen_relation_check(&spec, lambda, h, n, &zs);
                out.push(Check::from_result(
                    s,
                    "iterated eigen relation",
                    format!("a=0.5,b=0.3,c=0.3,{name},n={n}"),
                    "max_abs_err",
                    t.relation,
                    value,
                ));
            }
        }
        out
    }));
    tasks
}

fn conjugation(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Conjugation;
    let n = cfg.inner_dim.min(32);
    let mut tasks: Vec<Task> = Vec::new();
    for p in weighted_grid() {
        tasks.push(Box::new(move || {
            let one = c64(1.0, 0.0);
            let fixed = p.b / (one - p.a);
            let shifts = [
                ("u=0", C64::default()),
                ("u=-p", -fixed),
                ("u=c/(conj(a)-1)", p.c / (p.a.conj() - one)),
                ("u=0.3i", c64(0.0, 0.3)),
            ];
            let spec = p.op().spec();
            shifts
                .iter()
                .map(|&(name, u)| {
                    let value = conjugation_residual(&spec, u, n, &cfg.numerics()).map(|r| r.value);
                    Check::from_result(s, "Weyl conjugation", format!("{},{name}", p.params()), "frobenius", t.residual, value)
                })
                .collect()
        }));
    }
    for (a, b, c) in unit_circle_specs() {
        tasks.push(Box::new(move || {
            let spec = OperatorSpec::scaled_kernel(c64(1.0, 0.0), c, AffineSymbol::new(a, b));
            let target = weyl_conjugate(&spec, c64(0.0, 0.3));
            let params = format!("a={},b={},c={},u=0.3i", short(a), short(b), short(c));
            let mut out = vec![Check::from_result(
                s,
                "Weyl conjugation on the unit circle",
                params.clone(),
                "frobenius",
                t.residual,
                conjugation_residual(&spec, c64(0.0, 0.3), n, &cfg.numerics()).map(|r| r.value),
            )];
            out.push(Check::at_most(
                s,
                "conjugation keeps the dilation",
                params,
                "abs_err",
                abs(target.symbol.a() - a),
                1e-15,
            ));
            out
        }));
    }
    for u in [c64(0.5, 0.0), c64(1.0, 0.0), c64(0.6, 0.8), c64(0.0, -1.0), c64(-0.3, 0.2)] {
        tasks.push(Box::new(move || {
            let lead = cfg.inner_dim.min(48);
            let dim = 128.max(2 * cfg.inner_dim);
            let (w, inv) = match (weyl_matrix(u, dim), weyl_matrix(-u, dim)) {
                (Ok(w), Ok(inv)) => (w.into_entries(), inv.into_entries()),
                (Err(e), _) | (_, Err(e)) => return vec![Check::failed(s, "Weyl unitarity", format!("u={}", short(u)), e)],
            };
            let cols = w.columns(0, lead).into_owned();
            let gram = cols.adjoint() * &cols;
            let dev = max_abs(&(gram - DMatrix::<C64>::identity(lead, lead)));
            let adj = w.adjoint().view((0, 0), (lead, lead)) - inv.view((0, 0), (lead, lead));
            vec![
                Check::at_most(s, "Weyl unitarity", format!("u={},block={lead}", short(u)), "max_abs_dev", dev, t.unitarity),
                Check::at_most(s, "Weyl adjoint is W_{-u}", format!("u={},block={lead}", short(u)), "max_abs_dev", max_abs(&adj), t.unitarity),
            ]
        }));
    }
    tasks
}

fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| abs(*z)).fold(0.0, f64::max)
}

fn adjoint(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Adjoint;
    let n = cfg.inner_dim;
    let mut tasks: Vec<Task> = Vec::new();
    for p in weighted_grid() {
        tasks.push(Box::new(move || {
            let spec = p.op().spec();
            [c64(0.0, 0.0), c64(1.5, 0.0), c64(1.0, 1.0), c64(-0.7, 0.9), c64(0.0, -1.5)]
                .iter()
                .map(|&w| {
                    let value = adjoint_residual(&spec, w, n, &cfg.numerics()).map(|r| r.value);
                    Check::from_result(s, "adjoint on kernels", format!("{},w={}", p.params(), short(w)), "rel_residual", t.residual, value)
                })
                .collect()
        }));
    }
    for (a, b) in grid_symbols() {
        tasks.push(Box::new(move || {
            let value = gram_kernel_eigen_residual(&AffineSymbol::new(a, b), n, &cfg.numerics()).map(|(r, _)| r.value);
            vec![Check::from_result(s, "Gram operator kernel eigenvector", sym_params(a, b), "rel_residual", t.residual, value)]
        }));
    }
    tasks.push(Box::new(move || {
        let spec = OperatorSpec::scaled_kernel(c64(1.0, 0.0), c64(0.0, 1.0), AffineSymbol::new(c64(0.0, 1.0), c64(1.0, 0.0)));
        let value = adjoint_residual(&spec, c64(0.7, 0.0), n, &cfg.numerics()).map(|r| r.value);
        vec![Check::from_result(s, "adjoint on kernels, unit circle", "a=i,b=1,c=i,w=0.7".into(), "rel_residual", 1e-6f64.max(t.residual), value)]
    }));
    tasks
}

/// `‖A* k_w‖²` with `w = re^{−iθ}` from a truncated matrix.
fn adjoint_kernel_norm_sqr(op: &KernelOperator, r: f64, n: usize) -> Result<f64, FockError> {
    let a = op.symbol.a();
    let theta = if a.norm_sqr() == 0.0 { 0.0 } else { arg(a) };
    let w = cis(-theta) * r;
    let outer = default_outer(n).max(4 * n);
    let m = build_matrix(&op.spec(), outer, n)?.into_entries();
    let k = DVector::from_vec(normalized_kernel_vector(w, outer)?.into_coeffs());
    Ok((m.adjoint() * k).norm_squared())
}

fn witness(cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    let s = Suite::Witness;
    let mut tasks: Vec<Task> = Vec::new();
    for p in weighted_grid() {
        tasks.push(Box::new(move || {
            let op = p.op();
            let profile = match WitnessProfile::new(&op, cfg.unit_circle_eps) {
                Ok(v) => v,
                Err(e) => return vec![Check::failed(s, "witness threshold", p.params(), e)],
            };
            let r_star = profile.threshold(WITNESS_LEVEL);
            let mut out = vec![Check::at_most(
                s,
                "witness hits 1e-12 at predicted r*",
                format!("{},r*={r_star:.4}", p.params()),
                "abs_log_gap",
                (profile.log_g(r_star) - ln(WITNESS_LEVEL)).abs(),
                1e-9,
            )];
            let mut worst = f64::NEG_INFINITY;
            let mut increasing = 0usize;
            let mut prev = profile.log_g(profile.peak_r.max(r_star));
            for k in 1..=80 {
                let r = r_star + 0.25 * k as f64;
                let lg = profile.log_g(r);
                worst = worst.max(lg);
                if lg >= prev {
                    increasing += 1;
                }
                prev = lg;
            }
            let mut decay = Check::at_most(s, "witness stays below 1e-12 beyond r*", p.params(), "max_g", exp(worst), WITNESS_LEVEL);
            decay.passed &= increasing == 0;
            out.push(decay);
            if p.b == C64::default() {
                let n = cfg.inner_dim;
                let value = [0.5, 1.0, 1.5].iter().try_fold(0.0f64, |acc, &r| {
                    let numeric = adjoint_kernel_norm_sqr(&op, r, n)?;
                    let closed = exp(profile.log_g(r));
                    Ok(acc.max((numeric - closed).abs() / closed))
                });
                out.push(Check::from_result(s, "witness equals |A* k_w|^2", p.params(), "rel_err", t.residual, value));
            }
            out
        }));
    }
    tasks.push(Box::new(move || {
        let op = KernelOperator::from_parts(c64(1.0, 0.0), c64(0.0, 0.0), c64(0.5, 0.0), c64(0.0, 0.0));
        let value = WitnessProfile::new(&op, cfg.unit_circle_eps).map(|p| (exp(p.log_g(2.0)) - exp(-3.0)).abs());
        vec![Check::from_result(s, "witness g(2) = e^-3", "a=0.5,b=0,c=0".into(), "abs_err", 1e-15, value)]
    }));
    tasks.push(Box::new(move || {
        let op = KernelOperator::from_parts(c64(1.0, 0.0), c64(0.0, 1.0), c64(0.0, 1.0), c64(1.0, 0.0));
        let ok = matches!(WitnessProfile::new(&op, cfg.unit_circle_eps), Err(FockError::WitnessUndefined));
        let value = if ok && classify(&op, &ClassifyOptions::default()).closed_range { 0.0 } else { 1.0 };
        vec![Check::at_most(s, "no witness on the unit circle", "a=i,b=1,c=i".into(), "mismatch", value, 0.0)]
    }));
    tasks
}

fn tasks_for(suite: Suite, cfg: &RunConfig, t: Tolerances) -> Vec<Task<'_>> {
    match suite {
        Suite::Norms => norms(cfg, t),
        Suite::Commutator => commutator(cfg, t),
        Suite::Conjugation => conjugation(cfg, t),
        Suite::Adjoint => adjoint(cfg, t),
        Suite::Spectrum => spectrum(cfg, t),
        Suite::Witness => witness(cfg, t),
        Suite::All => Suite::EACH.iter().flat_map(|&s| tasks_for(s, cfg, t)).collect(),
    }
}

/// Runs `suite`; checks execute in parallel and are reported in grid order.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> VerifyOutcome {
    let t = Tolerances::new(cfg);
    let tasks = tasks_for(suite, cfg, t);
    let checks: Vec<Check> = tasks.par_iter().map(|task| task()).collect::<Vec<_>>().into_iter().flatten().collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    VerifyOutcome { suite: suite.name(), inner_dim: cfg.inner_dim, total: checks.len(), passed, checks }
}

fn value_text(c: &Check) -> String {
    match (c.value, &c.detail) {
        (Some(v), _) => format!("{}={v:.3e} ({} {:.1e})", c.metric, c.relation.symbol(), c.tol),
        (None, Some(d)) => format!("error={d}"),
        (None, None) => "error".into(),
    }
}

pub fn write_outcome<W: Write>(mut out: W, outcome: &VerifyOutcome, format: OutputFormat) -> CliResult<()> {
    match format {
        OutputFormat::Text => {
            let mut buf = String::new();
            for c in &outcome.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(buf, "[{}] {} @ {} : {status} {}", c.suite, c.label, c.params, value_text(c));
            }
            let _ = writeln!(
                buf,
                "verify {} (inner dim {}): {}/{} checks passed",
                outcome.suite, outcome.inner_dim, outcome.passed, outcome.total
            );
            out.write_all(buf.as_bytes())?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, outcome)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["suite", "label", "params", "metric", "value", "relation", "tol", "status"])?;
            for c in &outcome.checks {
                w.write_record([
                    c.suite.to_string(),
                    c.label.to_string(),
                    c.params.clone(),
                    c.metric.to_string(),
                    c.value.map_or_else(|| c.detail.clone().unwrap_or_default(), crate::format::float),
                    c.relation.symbol().to_string(),
                    crate::format::float(c.tol),
                    if c.passed { "PASS" } else { "FAIL" }.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
