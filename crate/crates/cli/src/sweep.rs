//! β sweeps and their CSV/JSON encodings.

use std::fs::File;
use std::io::{BufWriter, Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use clbeta_core::sharp::full_report;
use clbeta_core::Beta;

use crate::args::{Format, SweepArgs};
use crate::{parse_beta, with_thread_cap, CliError, AGREE_TOL};

/// CSV header, in column order.
pub const CSV_HEADER: [&str; 8] = [
    "beta",
    "n",
    "bound_t1",
    "bound_t2",
    "gs_bound",
    "t0",
    "u_n_angle",
    "methods_agree",
];

/// One grid point of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub beta: f64,
    pub n: usize,
    pub bound_t1: f64,
    pub bound_t2: Option<f64>,
    pub gs_bound: f64,
    pub t0: Option<f64>,
    pub u_n_angle: f64,
    /// `|bound_t1 − bound_t2| < 1e−8`; vacuously true when `bound_t2` is absent.
    pub methods_agree: bool,
}

impl SweepRow {
    pub fn compute(beta: Beta, n: usize) -> Result<Self, clbeta_core::Error> {
        let r = full_report(n, beta)?;
        Ok(SweepRow {
            beta: beta.value(),
            n,
            bound_t1: r.bound_t1,
            bound_t2: r.bound_t2,
            gs_bound: r.gs_bound,
            t0: r.t0,
            u_n_angle: r.u_n.angle(),
            methods_agree: r.bound_t2.is_none_or(|t2| (r.bound_t1 - t2).abs() < AGREE_TOL),
        })
    }
}

/// `steps` equally spaced β values from `beta_min` to `beta_max` inclusive.
pub fn beta_grid(beta_min: Beta, beta_max: Beta, steps: usize) -> Vec<Beta> {
    let (lo, hi) = (beta_min.value(), beta_max.value());
    (0..steps)
        .map(|i| {
            let v = if i + 1 == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (steps - 1) as f64
            };
            Beta::new(v).expect("grid stays between admissible endpoints")
        })
        .collect()
}

/// Computes all rows in parallel; the result is in grid order.
pub fn compute_rows(betas: &[Beta], n: usize) -> Result<Vec<SweepRow>, clbeta_core::Error> {
    betas.par_iter().map(|&b| SweepRow::compute(b, n)).collect()
}

/// 17 significant digits, enough to round-trip any `f64`.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            fmt_f64(r.beta),
            r.n.to_string(),
            fmt_f64(r.bound_t1),
            r.bound_t2.map(fmt_f64).unwrap_or_default(),
            fmt_f64(r.gs_bound),
            r.t0.map(fmt_f64).unwrap_or_default(),
            fmt_f64(r.u_n_angle),
            r.methods_agree.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>, CliError> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(CliError::Usage(format!("unexpected CSV header: {header:?}")));
    }
    rdr.deserialize().map(|r| r.map_err(CliError::from)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepFlags {
    pub beta_min: f64,
    pub beta_max: f64,
    pub steps: usize,
    pub n: usize,
    pub degrees: bool,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMeta {
    pub version: String,
    pub flags: SweepFlags,
}

/// JSON document: `{"meta": {...}, "rows": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub meta: SweepMeta,
    pub rows: Vec<SweepRow>,
}

pub fn write_json<W: Write>(doc: &SweepDocument, mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub(crate) fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {}", a.n)));
    }
    if a.steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {}", a.steps)));
    }
    let lo = parse_beta(a.beta_min, a.degrees)?;
    let hi = parse_beta(a.beta_max, a.degrees)?;
    let betas = beta_grid(lo, hi, a.steps);
    let rows = with_thread_cap(|| compute_rows(&betas, a.n))??;

    let file = BufWriter::new(File::create(&a.out)?);
    match a.format {
        Format::Csv => write_csv(&rows, file)?,
        Format::Json => {
            let doc = SweepDocument {
                meta: SweepMeta {
                    version: env!("CARGO_PKG_VERSION").to_string(),
                    flags: SweepFlags {
                        beta_min: a.beta_min,
                        beta_max: a.beta_max,
                        steps: a.steps,
                        n: a.n,
                        degrees: a.degrees,
                        format: a.format.to_string(),
                    },
                },
                rows: rows.clone(),
            };
            write_json(&doc, file)?;
        }
    }
    let disagree = rows.iter().filter(|r| !r.methods_agree).count();
    writeln!(
        out,
        "wrote {} rows to {} ({} methods disagree)",
        rows.len(),
        a.out.display(),
        disagree
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(v: f64) -> Beta {
        Beta::new(v).unwrap()
    }

    #[test]
    fn header_is_exact() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "beta,n,bound_t1,bound_t2,gs_bound,t0,u_n_angle,methods_agree\n"
        );
    }

    #[test]
    fn grid_includes_endpoints() {
        let g = beta_grid(b(-1.2), b(1.2), 49);
        assert_eq!(g.len(), 49);
        assert_eq!(g[0].value(), -1.2);
        assert_eq!(g[48].value(), 1.2);
        assert!(g[24].value().abs() < 1e-15);
    }

    #[test]
    fn n3_rows_agree() {
        let rows = compute_rows(&beta_grid(b(-1.2), b(1.2), 49), 3).unwrap();
        assert!(rows.iter().all(|r| r.methods_agree && r.t0.is_some()));
        let mid = &rows[24];
        assert!((mid.bound_t1 - 3.0).abs() < 1e-9);
    }

    #[test]
    fn n2_rows_match_closed_form() {
        let rows = compute_rows(&beta_grid(b(-1.4), b(1.4), 31), 2).unwrap();
        for r in &rows {
            assert!((r.bound_t1 - (1.0 + r.beta.cos())).abs() < 1e-10);
            assert!(r.bound_t2.is_none() && r.t0.is_none() && r.methods_agree);
        }
    }

    #[test]
    fn empty_optionals_round_trip() {
        let rows = compute_rows(&[b(0.5)], 4).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.lines().nth(1).unwrap().contains(",,"));
        assert_eq!(read_csv(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![any::<f64>().prop_filter("finite", |x| x.is_finite()), -10.0..10.0f64]
    }

    proptest! {
        #[test]
        fn csv_round_trip(
            rows in proptest::collection::vec(
                (finite(), 2usize..50, finite(), proptest::option::of(finite()), finite(),
                 proptest::option::of(0.0..1.0f64), finite(), any::<bool>()),
                0..20)
        ) {
            let rows: Vec<SweepRow> = rows.into_iter().map(|(beta, n, t1, t2, gs, t0, u, agree)| SweepRow {
                beta, n, bound_t1: t1, bound_t2: t2, gs_bound: gs, t0, u_n_angle: u, methods_agree: agree,
            }).collect();
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).unwrap();
            prop_assert_eq!(read_csv(&buf[..]).unwrap(), rows);
        }
    }
}
