//! Randomized verification: sampled functions must stay below the sharp
//! bound, and the extremal kernel must reach it.

use std::io::Write;

use clbeta_core::oracle::{stress_bound, DiscreteMeasure};
use clbeta_core::sharp::{extremal_attainment, sharp_bound};

use crate::args::VerifyArgs;
use crate::{parse_beta, CliError};

/// Smallest acceptable `bound − max_observed`.
pub const MARGIN_TOL: f64 = -1e-10;
/// Largest acceptable `|attained − bound|`.
pub const ATTAINMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub max_observed: f64,
    pub bound: f64,
    pub margin: f64,
    pub attainment_residual: f64,
    pub worst: (DiscreteMeasure, DiscreteMeasure),
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.margin >= MARGIN_TOL && self.attainment_residual <= ATTAINMENT_TOL
    }
}

pub fn run_verify(a: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if a.n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {}", a.n)));
    }
    if a.atoms < 1 || a.trials < 1 {
        return Err(CliError::Usage("--trials and --atoms must be at least 1".into()));
    }
    let beta = parse_beta(a.beta, a.degrees)?;
    let sharp = sharp_bound(a.n, beta)?.bound_t1;
    let stress = stress_bound(a.n, beta, a.trials, a.atoms, a.seed)?;
    let bound = sharp - a.debug_bound_offset;
    Ok(VerifyReport {
        max_observed: stress.max_observed,
        bound,
        margin: bound - stress.max_observed,
        attainment_residual: (extremal_attainment(a.n, beta)? - bound).abs(),
        worst: stress.worst,
    })
}

fn fmt_measure(m: &DiscreteMeasure) -> String {
    m.atoms()
        .iter()
        .map(|(p, w)| format!("{}@{}", w, p.angle()))
        .collect::<Vec<_>>()
        .join(";")
}

pub(crate) fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let r = run_verify(a)?;
    writeln!(out, "{:<22}{}", "max_observed", r.max_observed)?;
    writeln!(out, "{:<22}{}", "bound", r.bound)?;
    writeln!(out, "{:<22}{}", "margin", r.margin)?;
    writeln!(out, "{:<22}{}", "attainment_residual", r.attainment_residual)?;
    if r.passed() {
        writeln!(out, "status                ok")?;
        return Ok(());
    }
    writeln!(out, "status                FAILED")?;
    // weight@angle pairs of the sample with the largest coefficient
    writeln!(out, "worst_mu              {}", fmt_measure(&r.worst.0))?;
    writeln!(out, "worst_nu              {}", fmt_measure(&r.worst.1))?;
    Err(CliError::Verification(format!(
        "margin {:e}, attainment residual {:e}",
        r.margin, r.attainment_residual
    )))
}
