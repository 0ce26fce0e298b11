//! Command-line front end for `clbeta-core`: single bounds, β sweeps written
//! as CSV or JSON, and randomized verification against discrete measures.

pub mod args;
pub mod error;
pub mod sweep;
pub mod verify;

use std::io::Write;

use clbeta_core::sharp::{goodman_saff_bound, sharp_bound};
use clbeta_core::third::third_coefficient_bound;
use clbeta_core::Beta;

pub use args::{Cli, Command};
pub use error::CliError;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "CLBETA_THREADS";

/// Agreement threshold between the two bounds for `n = 3`.
pub const AGREE_TOL: f64 = 1e-8;

/// Converts a user-supplied angle to an admissible [`Beta`].
pub fn parse_beta(value: f64, degrees: bool) -> Result<Beta, CliError> {
    let radians = if degrees { value.to_radians() } else { value };
    Beta::new(radians).map_err(|e| CliError::Usage(e.to_string()))
}

fn check_index(n: usize) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

/// Runs one parsed command, writing its report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Bound(a) => cmd_bound(a, out),
        Command::Sweep(a) => sweep::cmd_sweep(a, out),
        Command::Verify(a) => verify::cmd_verify(a, out),
    }
}

fn cmd_bound(a: &args::BoundArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_index(a.n)?;
    let beta = parse_beta(a.beta, a.degrees)?;
    if a.method != args::Method::Theorem1 && a.n != 3 {
        return Err(CliError::Usage(format!(
            "--method {} needs --n 3, got {}",
            a.method.name(),
            a.n
        )));
    }
    let mut lines: Vec<(&str, String)> = vec![("beta", beta.value().to_string()), ("n", a.n.to_string())];
    match a.method {
        args::Method::Theorem1 => {
            let r = sharp_bound(a.n, beta)?;
            lines.push(("bound_t1", r.bound_t1.to_string()));
            lines.push(("phi_max", r.phi_max.to_string()));
            lines.push(("u_n_angle", r.u_n.angle().to_string()));
            lines.push(("gs_bound", r.gs_bound.to_string()));
        }
        args::Method::Theorem2 => {
            let r = third_coefficient_bound(beta)?;
            lines.push(("bound_t2", r.bound.to_string()));
            lines.push(("t0", r.t0.to_string()));
            lines.push(("u3_angle", r.u3.angle().to_string()));
            lines.push(("alpha0", r.alpha0.to_string()));
            lines.push(("gs_bound", goodman_saff_bound(3, beta).to_string()));
        }
        args::Method::Both => {
            let r = sharp_bound(3, beta)?;
            let t2 = third_coefficient_bound(beta)?;
            lines.push(("bound_t1", r.bound_t1.to_string()));
            lines.push(("bound_t2", t2.bound.to_string()));
            lines.push(("phi_max", r.phi_max.to_string()));
            lines.push(("u_n_angle", r.u_n.angle().to_string()));
            lines.push(("t0", t2.t0.to_string()));
            lines.push(("u3_angle", t2.u3.angle().to_string()));
            lines.push(("alpha0", t2.alpha0.to_string()));
            lines.push(("gs_bound", r.gs_bound.to_string()));
            lines.push(("methods_agree", ((r.bound_t1 - t2.bound).abs() < AGREE_TOL).to_string()));
        }
    }
    for (key, value) in lines {
        writeln!(out, "{key:<14}{value}")?;
    }
    Ok(())
}

/// Runs `f` on a rayon pool capped by [`THREADS_ENV`] when it is set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().ok().filter(|&t| t > 0).ok_or_else(|| {
            CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))
        })?),
        Err(_) => None,
    };
    match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}
