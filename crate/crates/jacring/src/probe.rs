//! Seeded Monte-Carlo probe of the weak Lefschetz property for `(n, d)`
//! families, including the regimes where no general statement is known.
//! Each sample draws a form and (when it is smooth) one random linear form,
//! and records the injectivity of multiplication in degree `d-1`. Records
//! are reproducible: the per-sample seed is a fixed mix of the master seed
//! and the sample index, so a parallel run produces the same stream as a
//! serial one.

use std::io::{self, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jacobian::{smoothness_check, JacobianRing, SmoothnessStatus};
use crate::lefschetz::multiplication_map;
use crate::monomial::graded_dimension;
use crate::random::{derive_seed, random_homogeneous, random_linear_form, CoeffPolicy};

#[derive(Clone, Copy, Debug)]
pub struct ProbeConfig {
    /// Projective dimension: forms live in `n + 1` variables.
    pub n: u32,
    pub d: u32,
    pub field: Field,
    pub samples: u32,
    pub master_seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeRecord {
    pub n: u32,
    pub d: u32,
    pub characteristic: u32,
    pub sample: u32,
    pub seed: u64,
    pub smooth: SmoothnessStatus,
    /// Empty for samples that failed the smoothness test.
    pub wlp_injective: Option<bool>,
    pub kernel_dimension: Option<usize>,
    pub ms: u128,
}

/// Hard cap on `dim R_d`; beyond this the dense elimination is no longer a
/// desk-scale computation and the probe refuses to start.
pub const PROBE_DIMENSION_LIMIT: usize = 2000;

pub fn probe_guard(n: u32, d: u32) -> Result<()> {
    let dim = graded_dimension(n as usize + 1, d);
    if dim > PROBE_DIMENSION_LIMIT {
        return Err(Error::ResourceGuard(format!(
            "dim R_{d} = {dim} in {} variables exceeds the probe limit {PROBE_DIMENSION_LIMIT}",
            n + 1
        )));
    }
    Ok(())
}

/// Runs the probe over a worker pool; records come back sorted by sample
/// index regardless of scheduling.
pub fn run_probe(cfg: &ProbeConfig) -> Result<Vec<ProbeRecord>> {
    probe_guard(cfg.n, cfg.d)?;
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| probe_sample(cfg, i))
        .collect()
}

fn probe_sample(cfg: &ProbeConfig, index: u32) -> Result<ProbeRecord> {
    let start = Instant::now();
    let num_vars = cfg.n as usize + 1;
    let seed = derive_seed(cfg.master_seed, index as u64);
    let form = random_homogeneous(num_vars, cfg.d, cfg.field, seed, CoeffPolicy::default());
    let verdict = smoothness_check(&form, None)?;

    let (wlp_injective, kernel_dimension) = if verdict.is_smooth() {
        let jr = JacobianRing::new(form)?;
        let l = random_linear_form(
            num_vars,
            cfg.field,
            derive_seed(seed, 1),
            CoeffPolicy::default(),
        );
        let map = multiplication_map(&jr, &l, cfg.d - 1)?;
        (Some(map.is_injective()), Some(map.kernel_dimension()))
    } else {
        (None, None)
    };

    Ok(ProbeRecord {
        n: cfg.n,
        d: cfg.d,
        characteristic: cfg.field.characteristic(),
        sample: index,
        seed,
        smooth: verdict.status,
        wlp_injective,
        kernel_dimension,
        ms: start.elapsed().as_millis(),
    })
}

pub const CSV_HEADER: &str = "n,d,char,sample,seed,smooth,wlp_injective,kernel_dim,ms";

fn smooth_label(status: SmoothnessStatus) -> &'static str {
    match status {
        SmoothnessStatus::Smooth => "smooth",
        SmoothnessStatus::Singular => "singular",
        SmoothnessStatus::Unknown => "unknown",
    }
}

pub fn write_csv<W: Write>(records: &[ProbeRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.n,
            r.d,
            r.characteristic,
            r.sample,
            r.seed,
            smooth_label(r.smooth),
            r.wlp_injective.map(|b| b.to_string()).unwrap_or_default(),
            r.kernel_dimension
                .map(|k| k.to_string())
                .unwrap_or_default(),
            r.ms
        )?;
    }
    Ok(())
}
