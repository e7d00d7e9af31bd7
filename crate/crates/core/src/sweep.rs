//! Seeded Monte Carlo sweeps of the triangulated-cycle fraction over a grid
//! of `c` values, with `p = c / √n`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::certifier::{triangulated_fraction, CycleSample, SearchLimits};
use crate::error::{Error, Result};
use crate::random_complex::{splitmix64, Complex2};

/// `1/√γ = 3√3/16`.
pub fn threshold_c() -> f64 {
    3.0 * 3f64.sqrt() / 16.0
}

/// Grid points, given as `c` values or as raw probabilities.
#[derive(Clone, Debug, PartialEq)]
pub enum Grid {
    C(Vec<f64>),
    P(Vec<f64>),
}

impl Grid {
    /// `min, min + step, ...` up to `max` inclusive.
    pub fn c_range(min: f64, max: f64, step: f64) -> Result<Self> {
        if step.is_nan() || step <= 0.0 || max < min || min < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "bad c grid min={min} max={max} step={step}"
            )));
        }
        let count = ((max - min) / step + 1e-9).floor() as usize + 1;
        Ok(Grid::C(
            (0..count)
                .map(|i| ((min + i as f64 * step) * 1e12).round() / 1e12)
                .collect(),
        ))
    }

    fn points(&self, n: u32) -> Vec<(f64, f64)> {
        let root = f64::from(n).sqrt();
        match self {
            Grid::C(cs) => cs.iter().map(|&c| (c, (c / root).clamp(0.0, 1.0))).collect(),
            Grid::P(ps) => ps.iter().map(|&p| (p * root, p)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub n: u32,
    pub grid: Grid,
    pub trials: u64,
    pub master_seed: u64,
    pub limits: SearchLimits,
    /// Cycles per trial; `None` checks all `C(n,3)`.
    pub cycle_samples: Option<usize>,
    /// Reuse one complex seed and cycle sample per trial across the grid, so
    /// complexes grow monotonically with `c`.
    pub coupled: bool,
}

impl SweepConfig {
    /// Seed of the complex for `(point, trial)`.
    pub fn trial_seed(&self, point: usize, trial: u64) -> u64 {
        let base = if self.coupled {
            self.master_seed
        } else {
            splitmix64(self.master_seed, point as u64 + 1)
        };
        splitmix64(base, trial)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub c: f64,
    pub p: f64,
    pub trial: u64,
    pub seed: u64,
    pub fraction_triangulated: f64,
    pub mean_internal_used: f64,
    pub budget_exhausted_count: usize,
}

fn validate(cfg: &SweepConfig) -> Result<()> {
    let empty = match &cfg.grid {
        Grid::C(v) | Grid::P(v) => v.is_empty(),
    };
    if empty {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    if let Grid::P(ps) = &cfg.grid {
        if let Some(&p) = ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::Probability(p));
        }
    }
    if let Grid::C(cs) = &cfg.grid {
        if let Some(&c) = cs.iter().find(|c| c.is_nan() || **c < 0.0) {
            return Err(Error::InvalidArgument(format!("negative c {c}")));
        }
    }
    Ok(())
}

/// Rows in grid order, trials ascending within each point.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    validate(cfg)?;
    let points = cfg.grid.points(cfg.n);
    let jobs: Vec<(usize, u64)> = (0..points.len())
        .flat_map(|i| (0..cfg.trials).map(move |t| (i, t)))
        .collect();
    jobs.par_iter()
        .map(|&(i, trial)| {
            let (c, p) = points[i];
            let seed = cfg.trial_seed(i, trial);
            let y = Complex2::sample(cfg.n, p, seed)?;
            let sample = match cfg.cycle_samples {
                None => CycleSample::All,
                Some(count) => CycleSample::Random {
                    count,
                    seed: splitmix64(seed, u64::MAX),
                },
            };
            let r = triangulated_fraction(&y, cfg.limits, &sample)?;
            Ok(SweepRow {
                n: cfg.n,
                c,
                p,
                trial,
                seed,
                fraction_triangulated: r.fraction,
                mean_internal_used: r.mean_internal_used,
                budget_exhausted_count: r.budget_exhausted,
            })
        })
        .collect()
}

pub const CSV_COLUMNS: &str =
    "n,c,p,trial,seed,fraction_triangulated,mean_internal_used,budget_exhausted_count";

/// `# schema=1` CSV. The second line carries the crate version; everything
/// else depends only on the config.
pub fn sweep_csv(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let mut out = String::from("# schema=1\n");
    let _ = writeln!(out, "# tridisk {}", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(out, "# gamma=256/27 threshold_c={} (3*sqrt(3)/16)", threshold_c());
    let _ = writeln!(
        out,
        "# n={} trials={} max_internal={} budget={} cycle_samples={} master_seed={} coupled={}",
        cfg.n,
        cfg.trials,
        cfg.limits.max_internal,
        cfg.limits.budget,
        cfg.cycle_samples.map_or("all".to_string(), |c| c.to_string()),
        cfg.master_seed,
        cfg.coupled
    );
    out.push_str(CSV_COLUMNS);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n,
            r.c,
            r.p,
            r.trial,
            r.seed,
            r.fraction_triangulated,
            r.mean_internal_used,
            r.budget_exhausted_count
        );
    }
    out
}
