//! Text formats: the dense `fockmat` matrix file and the CSV tables.
//!
//! Floats are written with 17 significant digits, enough to reproduce every
//! `f64` bit-exactly on the way back in.

use std::io::{BufRead, Write};

use fock_core::numerics::{ConvergenceRecord, WitnessRow};
use fock_core::scalar::c64;
use fock_core::C64;
use nalgebra::DMatrix;

use crate::error::{CliError, CliResult};

/// `x` with 17 significant digits in scientific notation.
pub fn float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Writes `fockmat M N` followed by `row col re im` in row-major order.
pub fn write_fockmat<W: Write>(mut out: W, m: &DMatrix<C64>) -> CliResult<()> {
    writeln!(out, "fockmat {} {}", m.nrows(), m.ncols())?;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            writeln!(out, "{i} {j} {} {}", float(z.re), float(z.im))?;
        }
    }
    Ok(())
}

pub fn read_fockmat<R: BufRead>(input: R) -> CliResult<DMatrix<C64>> {
    let bad = |line: usize, reason: String| CliError::Fockmat { line, reason };
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header".into()))?;
    let header = header?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (rows, cols) = match fields.as_slice() {
        ["fockmat", m, n] => (
            m.parse::<usize>().map_err(|_| bad(1, format!("bad row count `{m}`")))?,
            n.parse::<usize>().map_err(|_| bad(1, format!("bad column count `{n}`")))?,
        ),
        _ => return Err(bad(1, format!("expected `fockmat M N`, found `{header}`"))),
    };
    let mut out = DMatrix::<C64>::zeros(rows, cols);
    let mut seen = vec![false; rows * cols];
    let mut count = 0;
    for (k, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let lineno = k + 1;
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [i, j, re, im] = parts.as_slice() else {
            return Err(bad(lineno, format!("expected `row col re im`, found `{line}`")));
        };
        let i: usize = i.parse().map_err(|_| bad(lineno, format!("bad row `{i}`")))?;
        let j: usize = j.parse().map_err(|_| bad(lineno, format!("bad column `{j}`")))?;
        if i >= rows || j >= cols {
            return Err(bad(lineno, format!("index ({i}, {j}) outside {rows}×{cols}")));
        }
        if std::mem::replace(&mut seen[i * cols + j], true) {
            return Err(bad(lineno, format!("duplicate entry ({i}, {j})")));
        }
        let re: f64 = re.parse().map_err(|_| bad(lineno, format!("bad real part `{re}`")))?;
        let im: f64 = im.parse().map_err(|_| bad(lineno, format!("bad imaginary part `{im}`")))?;
        out[(i, j)] = c64(re, im);
        count += 1;
    }
    if count != rows * cols {
        return Err(bad(rows * cols + 1, format!("expected {} entries, found {count}", rows * cols)));
    }
    Ok(out)
}

/// `row,col,re,im` triplets with a header line.
pub fn write_matrix_csv<W: Write>(out: W, m: &DMatrix<C64>) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["row", "col", "re", "im"])?;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            w.write_record([i.to_string(), j.to_string(), float(z.re), float(z.im)])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_matrix_csv<R: std::io::Read>(input: R) -> CliResult<DMatrix<C64>> {
    let mut entries = Vec::new();
    let (mut rows, mut cols) = (0, 0);
    for rec in csv::Reader::from_reader(input).records() {
        let rec = rec?;
        let field = |k: usize| rec.get(k).unwrap_or("");
        let parse_err = |what: &str| CliError::Usage(format!("bad {what} in matrix CSV record {:?}", rec));
        let i: usize = field(0).parse().map_err(|_| parse_err("row"))?;
        let j: usize = field(1).parse().map_err(|_| parse_err("column"))?;
        let re: f64 = field(2).parse().map_err(|_| parse_err("real part"))?;
        let im: f64 = field(3).parse().map_err(|_| parse_err("imaginary part"))?;
        rows = rows.max(i + 1);
        cols = cols.max(j + 1);
        entries.push((i, j, c64(re, im)));
    }
    let mut out = DMatrix::<C64>::zeros(rows, cols);
    for (i, j, z) in entries {
        out[(i, j)] = z;
    }
    Ok(out)
}

/// `N,M,value` rows of a convergence history.
pub fn write_record_csv<W: Write>(out: W, record: &ConvergenceRecord) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["N", "M", "value"])?;
    for ((n, m), v) in record.dims.iter().zip(&record.values) {
        w.write_record([n.to_string(), m.to_string(), float(*v)])?;
    }
    w.flush()?;
    Ok(())
}

/// `r,g` rows of a witness table; `r` in shortest form.
pub fn write_witness_csv<W: Write>(out: W, rows: &[WitnessRow]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "g"])?;
    for row in rows {
        w.write_record([format!("{}", row.r), float(row.g)])?;
    }
    w.flush()?;
    Ok(())
}
