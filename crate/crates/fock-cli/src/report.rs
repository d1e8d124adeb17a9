//! The `classify` report: closed-form verdicts side by side with the
//! numerical norm, each value tagged with where it came from.

use std::io::Write;

use fock_core::classify::{classify, exact_norm, KernelOperator};
use fock_core::numerics::{op_norm_estimate, spectral_radius_estimate, ConvergenceRecord};
use fock_core::scalar::abs;
use fock_core::symbol::DiskPosition;
use fock_core::{FockError, C64};
use serde::Serialize;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliResult;
use crate::format::float;

/// Note attached to the closed-form norm for `|a| < 1`.
pub const INTERIOR_NORM_FORMULA: &str = "|gamma| * |exp(conj(c) b / (1-a))| * exp(|s|^2 / (2(1-|a|^2))), \
s = c(1-a)/(conj(a)-1) + b; the first factor is |psi(p)| at the fixed point p = b/(1-a), \
not |exp(c/(1-a))|, and the numeric norm below is the independent check";
pub const ROTATION_NORM_FORMULA: &str = "|gamma| * |exp(|b|^2 / (1-conj(a)))|";
pub const TRANSLATION_NORM_FORMULA: &str = "|gamma| * exp(|b|^2 / 2)";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Complex {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Input {
    pub gamma: Complex,
    pub c: Complex,
    pub a: Complex,
    pub b: Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub bounded: bool,
    pub compact: bool,
    pub unitary_multiple: bool,
    pub normal: bool,
    pub hyponormal: bool,
    pub cohyponormal: bool,
    pub normaloid: bool,
    pub closed_range: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedForm<T> {
    pub value: T,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<&'static str>,
}

impl<T> ClosedForm<T> {
    fn new(value: T) -> Self {
        Self { value, provenance: "closed_form", formula: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Numeric {
    pub value: f64,
    pub provenance: &'static str,
    pub inner_dim: usize,
    pub outer_dim: usize,
    /// Last successive difference of the estimate.
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Convergence {
    pub dims: Vec<[usize; 2]>,
    pub values: Vec<f64>,
    pub converged: bool,
    pub final_delta: Option<f64>,
}

impl From<&ConvergenceRecord> for Convergence {
    fn from(r: &ConvergenceRecord) -> Self {
        Self {
            dims: r.dims.iter().map(|&(n, m)| [n, m]).collect(),
            values: r.values.clone(),
            converged: r.converged,
            final_delta: r.final_delta.is_finite().then_some(r.final_delta),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormSection {
    pub closed_form: Option<ClosedForm<f64>>,
    pub numeric: Option<Numeric>,
    pub rel_diff: Option<f64>,
    pub convergence: Option<Convergence>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvalueBound {
    pub value: f64,
    pub provenance: &'static str,
    /// Largest truncated eigenvalue modulus, which must not exceed `value`.
    pub numeric_spectral_radius: Option<Numeric>,
}

/// Keys are emitted in declaration order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: Input,
    pub classification: Classification,
    pub norm: NormSection,
    pub fixed_point: Option<ClosedForm<Complex>>,
    pub eigenvalue_bound: Option<EigenvalueBound>,
    pub critical_c: ClosedForm<Complex>,
    pub warnings: Vec<String>,
}

/// Warnings about parameters outside the comfortable working range.
pub fn precision_warnings(op: &KernelOperator, cfg: &RunConfig) -> Vec<String> {
    let mut w = Vec::new();
    let a = abs(op.symbol.a());
    if abs(op.symbol.b()) > 2.0 {
        w.push(format!("|b| = {} exceeds 2; exponentials may lose precision", abs(op.symbol.b())));
    }
    if abs(op.c) > 2.0 {
        w.push(format!("|c| = {} exceeds 2; exponentials may lose precision", abs(op.c)));
    }
    match op.symbol.disk_position(cfg.unit_circle_eps) {
        DiskPosition::Interior if 1.0 - a <= 1e-6 => w.push(format!(
            "|a| = {a} is within 1e-6 of the unit circle; closed forms blow up like exp(|b|^2/(1-|a|^2))"
        )),
        DiskPosition::UnitCircle if (a - 1.0).abs() > 0.0 => w.push(format!(
            "|a| = {a} treated as 1 (tolerance {:e})",
            cfg.unit_circle_eps
        )),
        DiskPosition::Exterior => w.push(format!("|a| = {a} > 1: no weight of this class gives a bounded operator")),
        _ => {}
    }
    if op.gamma == C64::default() {
        w.push("gamma = 0: zero operator, degenerate verdict".into());
    }
    w
}

pub fn build_report(op: &KernelOperator, cfg: &RunConfig) -> CliResult<Report> {
    let opts = cfg.classify_options();
    let r = classify(op, &opts);
    let mut warnings = precision_warnings(op, cfg);
    let position = op.symbol.disk_position(opts.unit_circle_eps);

    let closed = match exact_norm(op, &opts) {
        Ok(v) => {
            let formula = match position {
                _ if r.degenerate => None,
                DiskPosition::Interior => Some(INTERIOR_NORM_FORMULA),
                _ if op.symbol.is_unit_dilation(opts.unit_circle_eps) => Some(TRANSLATION_NORM_FORMULA),
                _ => Some(ROTATION_NORM_FORMULA),
            };
            Some(ClosedForm { value: v, provenance: "closed_form", formula })
        }
        Err(FockError::Overflow { exponent }) => {
            warnings.push(format!("closed-form norm overflows f64 (log of norm {exponent})"));
            None
        }
        Err(_) => None,
    };

    let numerics = cfg.numerics();
    let mut numeric = None;
    let mut convergence = None;
    let mut spectral = None;
    if r.bounded && !r.degenerate {
        let spec = op.spec();
        let est = op_norm_estimate(&spec, &numerics)?;
        let (inner_dim, outer_dim) = est.record.last_dims().unwrap_or((0, 0));
        if !est.record.converged {
            warnings.push(format!("numeric norm did not settle by inner dimension {}", cfg.inner_dim));
        }
        numeric = Some(Numeric {
            value: est.value,
            provenance: "numeric",
            inner_dim,
            outer_dim,
            residual: est.record.final_delta.is_finite().then_some(est.record.final_delta),
        });
        convergence = Some(Convergence::from(&est.record));
        if position == DiskPosition::Interior {
            let value = spectral_radius_estimate(&spec, cfg.inner_dim)?;
            spectral = Some(Numeric {
                value,
                provenance: "numeric",
                inner_dim: cfg.inner_dim,
                outer_dim: cfg.inner_dim,
                residual: None,
            });
        }
    }
    let rel_diff = match (&closed, &numeric) {
        (Some(c), Some(n)) if c.value > 0.0 => Some((n.value - c.value).abs() / c.value),
        _ => None,
    };

    Ok(Report {
        input: Input {
            gamma: op.gamma.into(),
            c: op.c.into(),
            a: op.symbol.a().into(),
            b: op.symbol.b().into(),
        },
        classification: Classification {
            bounded: r.bounded,
            compact: r.compact,
            unitary_multiple: r.unitary_multiple,
            normal: r.normal,
            hyponormal: r.hyponormal,
            cohyponormal: r.cohyponormal,
            normaloid: r.normaloid,
            closed_range: r.closed_range,
        },
        norm: NormSection { closed_form: closed, numeric, rel_diff, convergence },
        fixed_point: r.fixed_point.map(|p| ClosedForm::new(p.into())),
        eigenvalue_bound: r.eigenvalue_bound.map(|value| EigenvalueBound {
            value,
            provenance: "closed_form",
            numeric_spectral_radius: spectral,
        }),
        critical_c: ClosedForm::new(r.critical_c.into()),
        warnings,
    })
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "none".into(), float)
}

fn complex(z: Complex) -> String {
    format!("{} {}", float(z.re), float(z.im))
}

/// `key value` pairs shared by the text and CSV renderings.
fn flat(report: &Report) -> Vec<(String, String)> {
    let c = &report.classification;
    let mut rows: Vec<(String, String)> = vec![
        ("gamma".into(), complex(report.input.gamma)),
        ("c".into(), complex(report.input.c)),
        ("a".into(), complex(report.input.a)),
        ("b".into(), complex(report.input.b)),
    ];
    for (k, v) in [
        ("bounded", c.bounded),
        ("compact", c.compact),
        ("unitary_multiple", c.unitary_multiple),
        ("normal", c.normal),
        ("hyponormal", c.hyponormal),
        ("cohyponormal", c.cohyponormal),
        ("normaloid", c.normaloid),
        ("closed_range", c.closed_range),
    ] {
        rows.push((k.into(), v.to_string()));
    }
    rows.push(("norm_closed_form".into(), opt(report.norm.closed_form.as_ref().map(|n| n.value))));
    rows.push(("norm_numeric".into(), opt(report.norm.numeric.as_ref().map(|n| n.value))));
    rows.push(("norm_rel_diff".into(), opt(report.norm.rel_diff)));
    rows.push((
        "fixed_point".into(),
        report.fixed_point.as_ref().map_or_else(|| "none".into(), |p| complex(p.value)),
    ));
    rows.push(("eigenvalue_bound".into(), opt(report.eigenvalue_bound.as_ref().map(|b| b.value))));
    rows.push(("critical_c".into(), complex(report.critical_c.value)));
    for w in &report.warnings {
        rows.push(("warning".into(), w.clone()));
    }
    rows
}

pub fn write_report<W: Write>(mut out: W, report: &Report, format: OutputFormat) -> CliResult<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            for (k, v) in flat(report) {
                writeln!(out, "{k:<18} {v}")?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["field", "value"])?;
            for (k, v) in flat(report) {
                w.write_record([k, v])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
