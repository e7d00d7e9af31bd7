//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::certifier::{
    certify_simply_connected, default_max_internal, find_triangulated_disk, triangulated_fraction,
    CycleSample, CycleStatus, SearchLimits, SearchOutcome, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::face::{Face, Vertex};
use crate::moments::{
    abundance_csv, first_moment_bound, moment_report, mu_delta_enumerated, p_from_c, parse_rational,
    ratio_table_csv, Family, DEFAULT_MEMBER_LIMIT,
};
use crate::random_complex::Complex2;
use crate::subset_params::{build_xs, scan_exhaustive, scan_sampled, FIXED};
use crate::sweep::{run_sweep, sweep_csv, Grid, SweepConfig};
use crate::tri_enum::{
    count_j_dense, count_j_nested_enumerated, count_l_simple, count_n_labeled, count_triangulations,
    Census,
};

#[derive(Debug, Parser)]
#[command(name = "tridisk", version, about = "Triangulated disks in random 2-complexes")]
pub struct Cli {
    /// Default seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (advisory; 0 lets the runtime decide).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate triangulations of [1,2,3] and report exact counts.
    Census(CensusArgs),
    /// Scan sub-face-sets of census members and check the parameter relations.
    Subsets(SubsetsArgs),
    /// Sample a random complex Y_2(n, p) and write it to a file.
    Sample(SampleArgs),
    /// Search for triangulated disks bounding 3-cycles.
    Certify(CertifyArgs),
    /// Sweep the triangulated-cycle fraction over a grid of c = p·√n.
    Sweep(SweepArgs),
    /// Exact moments, dense ratios and Janson bounds.
    Moments(MomentsArgs),
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub k: usize,
    /// Print every labeled triangulation, one per line.
    #[arg(long)]
    pub list: bool,
    /// Also count l-simple triangulations.
    #[arg(long)]
    pub simple: Option<usize>,
    /// Also count j-dense and j-nested triangulations.
    #[arg(long)]
    pub dense: Option<usize>,
    /// Also report the count with internal labels drawn from {4..n}.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SubsetsArgs {
    #[arg(long)]
    pub k: Option<usize>,
    /// Sample this many subsets instead of scanning all of them.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Report X_S for one face set, e.g. "1,2,6;2,3,14".
    #[arg(long)]
    pub faces: Option<String>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Read the complex from a file.
    #[arg(long = "in", conflicts_with_all = ["n", "p"])]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "p")]
    pub n: Option<u32>,
    #[arg(long, requires = "n")]
    pub p: Option<f64>,
    /// Internal-vertex cap; defaults to min(8, ceil(ln(n)^2)).
    #[arg(long)]
    pub max_internal: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// A single cycle "a,b,c".
    #[arg(long, conflicts_with_all = ["all", "cycle_samples"])]
    pub cycle: Option<String>,
    /// Every 3-cycle; exit code 2 if any search runs out of budget.
    #[arg(long, conflicts_with = "cycle_samples")]
    pub all: bool,
    #[arg(long)]
    pub cycle_samples: Option<usize>,
    #[arg(long)]
    pub cycle_seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, requires_all = ["c_max", "c_step"], conflicts_with_all = ["c_list", "p_list"])]
    pub c_min: Option<f64>,
    #[arg(long)]
    pub c_max: Option<f64>,
    #[arg(long)]
    pub c_step: Option<f64>,
    /// Comma-separated c values.
    #[arg(long, value_delimiter = ',', conflicts_with = "p_list")]
    pub c_list: Option<Vec<f64>>,
    /// Comma-separated probabilities.
    #[arg(long, value_delimiter = ',')]
    pub p_list: Option<Vec<f64>>,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    #[arg(long)]
    pub max_internal: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Cycles checked per trial; all of them if omitted.
    #[arg(long)]
    pub cycle_samples: Option<usize>,
    /// Draw independent complexes at every grid point.
    #[arg(long)]
    pub uncoupled: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    All,
    Simple,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long, required_unless_present_any = ["ratios", "abundance"])]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Exact probability, "a/b" or a decimal.
    #[arg(long, conflicts_with = "c")]
    pub p: Option<String>,
    /// p = c/√n with 1/√n approximated to 40 decimal places.
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    pub family: FamilyArg,
    /// Density bound for `--family simple`; defaults to ⌈k/2⌉.
    #[arg(long)]
    pub simplicity: Option<usize>,
    /// Compute Δ by scanning all pairs.
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long, default_value_t = DEFAULT_MEMBER_LIMIT)]
    pub member_limit: usize,
    /// Report the first-moment upper bound for (n, c).
    #[arg(long, requires = "c")]
    pub first_moment: bool,
    /// CSV of dense ratios against the factorial form and α_i.
    #[arg(long, requires = "kmax")]
    pub ratios: bool,
    /// CSV of ⌈k/2⌉-simple shares for k = 1..kmax.
    #[arg(long, requires = "kmax")]
    pub abundance: bool,
    #[arg(long)]
    pub kmax: Option<usize>,
}

/// Parses and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if cli.threads > 0 {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match &cli.command {
        Command::Census(a) => census(a, out),
        Command::Subsets(a) => subsets(a, cli.seed, out),
        Command::Sample(a) => {
            let y = Complex2::sample(a.n, a.p, cli.seed)?;
            y.write(&a.out)?;
            emit(out, &format!("wrote {} faces to {}\n", y.face_count(), a.out.display()))?;
            Ok(0)
        }
        Command::Certify(a) => certify(a, cli.seed, out),
        Command::Sweep(a) => sweep(a, cli.seed, out),
        Command::Moments(a) => moments(a, out),
    }
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    emit(out, &(s + "\n"))
}

#[derive(Serialize)]
struct CensusSummary {
    k: usize,
    enumerated: ExactCount,
    closed_form: ExactCount,
    shapes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple: Option<(usize, ExactCount)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dense: Option<(usize, ExactCount)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nested: Option<(usize, ExactCount)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_labeled: Option<(usize, ExactCount)>,
}

fn census(a: &CensusArgs, out: &mut dyn Write) -> Result<i32> {
    let c = Census::standard(a.k)?;
    if a.list {
        let mut buf = String::new();
        for t in &c {
            let faces: Vec<String> = t.faces().iter().map(|f| f.to_string()).collect();
            buf.push_str(&faces.join(" "));
            buf.push('\n');
            if buf.len() > 1 << 16 {
                emit(out, &buf)?;
                buf.clear();
            }
        }
        emit(out, &buf)?;
        return Ok(0);
    }
    let summary = CensusSummary {
        k: a.k,
        enumerated: ExactCount::from(c.iter().count() as u64),
        closed_form: count_triangulations(a.k),
        shapes: c.shapes().len(),
        simple: a.simple.map(|l| count_l_simple(a.k, l).map(|v| (l, v))).transpose()?,
        dense: a.dense.map(|j| count_j_dense(a.k, j).map(|v| (j, v))).transpose()?,
        nested: a
            .dense
            .map(|j| count_j_nested_enumerated(a.k, j).map(|v| (j, v)))
            .transpose()?,
        n_labeled: a.n.map(|n| (n, count_n_labeled(n, a.k))),
    };
    emit_json(out, &summary)?;
    Ok(0)
}

fn parse_faces(s: &str) -> Result<Vec<Face>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v = parse_triple(t)?;
            Face::from_triple(v)
        })
        .collect()
}

fn parse_triple(s: &str) -> Result<[Vertex; 3]> {
    let parts: Vec<Vertex> = s
        .split(',')
        .map(|x| x.trim().parse::<Vertex>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("bad triple {s:?}")))?;
    <[Vertex; 3]>::try_from(parts).map_err(|_| Error::InvalidArgument(format!("bad triple {s:?}")))
}

#[derive(Serialize)]
struct XsSummary {
    faces: usize,
    e0: usize,
    e1: usize,
    e2: usize,
    beta0: usize,
    beta1: usize,
    phi: String,
    fixed: [Vertex; 3],
    boundary: Vec<Vertex>,
    internal: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v_outer: Option<usize>,
}

fn subsets(a: &SubsetsArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    if let Some(text) = &a.faces {
        let faces = parse_faces(text)?;
        let xs = build_xs(&faces)?;
        let classes = xs.classify_vertices();
        let used = classes.boundary.len() + classes.internal.len();
        let v_outer = match a.k {
            Some(k) if k < used => return Err(Error::NegativeOuter { k, used }),
            Some(k) => Some(k - used),
            None => None,
        };
        emit_json(
            out,
            &XsSummary {
                faces: xs.faces().len(),
                e0: xs.e0,
                e1: xs.e1,
                e2: xs.e2,
                beta0: xs.beta0,
                beta1: xs.beta1,
                phi: xs.phi().to_string(),
                fixed: FIXED,
                boundary: classes.boundary,
                internal: classes.internal,
                v_outer,
            },
        )?;
        return Ok(0);
    }
    let k = a
        .k
        .ok_or_else(|| Error::InvalidArgument("subsets needs --k or --faces".into()))?;
    let scan = match a.samples {
        Some(m) => scan_sampled(k, m, seed)?,
        None => scan_exhaustive(k)?,
    };
    emit(out, &scan.to_csv())?;
    Ok(0)
}

fn load_complex(a: &CertifyArgs, seed: u64) -> Result<Complex2> {
    match (&a.input, a.n, a.p) {
        (Some(path), _, _) => Complex2::read(path),
        (None, Some(n), Some(p)) => Complex2::sample(n, p, seed),
        _ => Err(Error::InvalidArgument("certify needs --in FILE or --n N --p P".into())),
    }
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    cycle: [Vertex; 3],
    status: CycleStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<&'a [Face]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    internal: Option<usize>,
    states: u64,
    faces_probed: u64,
}

fn certify(a: &CertifyArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let y = load_complex(a, seed)?;
    let limits = SearchLimits::new(
        a.max_internal.unwrap_or_else(|| default_max_internal(y.n())),
        a.budget,
    );
    let Format::Json = a.format;
    if let Some(text) = &a.cycle {
        let cycle = parse_triple(text)?;
        let o = find_triangulated_disk(&y, cycle, limits)?;
        let stats = o.stats();
        let (status, faces, internal) = match &o {
            SearchOutcome::Found(c) => (CycleStatus::Certified, Some(c.disk.faces()), Some(c.internal_used)),
            SearchOutcome::Absent(_) => (CycleStatus::Absent, None, None),
            SearchOutcome::BudgetExhausted(_) => (CycleStatus::BudgetExhausted, None, None),
        };
        emit_json(
            out,
            &CertificateJson {
                cycle,
                status,
                faces,
                internal,
                states: stats.states,
                faces_probed: stats.faces_probed,
            },
        )?;
        return Ok(0);
    }
    if a.all {
        let report = certify_simply_connected(&y, limits)?;
        emit_json(out, &report)?;
        return Ok(if report.budget_exhausted > 0 { 2 } else { 0 });
    }
    let sample = match a.cycle_samples {
        Some(count) => CycleSample::Random {
            count,
            seed: a.cycle_seed.unwrap_or(seed),
        },
        None => CycleSample::Explicit(vec![FIXED]),
    };
    let report = triangulated_fraction(&y, limits, &sample)?;
    emit_json(out, &report)?;
    Ok(0)
}

fn sweep(a: &SweepArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let grid = match (&a.c_list, &a.p_list, a.c_min, a.c_max, a.c_step) {
        (Some(cs), _, _, _, _) => Grid::C(cs.clone()),
        (_, Some(ps), _, _, _) => Grid::P(ps.clone()),
        (_, _, Some(lo), Some(hi), Some(step)) => Grid::c_range(lo, hi, step)?,
        _ => {
            return Err(Error::InvalidArgument(
                "sweep needs --c-min/--c-max/--c-step, --c-list or --p-list".into(),
            ))
        }
    };
    let cfg = SweepConfig {
        n: a.n,
        grid,
        trials: a.trials,
        master_seed: seed,
        limits: SearchLimits::new(
            a.max_internal.unwrap_or_else(|| default_max_internal(a.n)),
            a.budget,
        ),
        cycle_samples: a.cycle_samples,
        coupled: !a.uncoupled,
    };
    let csv = sweep_csv(&cfg, &run_sweep(&cfg)?);
    match &a.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Error::io(path, e))?,
        None => emit(out, &csv)?,
    }
    Ok(0)
}

fn probability(a: &MomentsArgs, n: usize) -> Result<BigRational> {
    match (&a.p, &a.c) {
        (Some(p), _) => parse_rational(p),
        (None, Some(c)) => p_from_c(&parse_rational(c)?, n),
        (None, None) => Err(Error::InvalidArgument("moments needs --p or --c".into())),
    }
}

fn moments(a: &MomentsArgs, out: &mut dyn Write) -> Result<i32> {
    if a.ratios {
        emit(out, &ratio_table_csv(a.kmax.unwrap_or(12))?)?;
        return Ok(0);
    }
    if a.abundance {
        emit(out, &abundance_csv(1, a.kmax.unwrap_or(7))?)?;
        return Ok(0);
    }
    let n = a.n.ok_or_else(|| Error::InvalidArgument("moments needs --n".into()))?;
    if a.first_moment {
        let c = parse_rational(a.c.as_deref().unwrap_or_default())?;
        emit_json(out, &first_moment_bound(n, &c)?)?;
        return Ok(0);
    }
    let k = a.k.ok_or_else(|| Error::InvalidArgument("moments needs --k".into()))?;
    let p = probability(a, n)?;
    let family = match a.family {
        FamilyArg::All => Family::All,
        FamilyArg::Simple => a.simplicity.map_or(Family::HalfSimple, Family::LSimple),
    };
    let report = if a.enumerate {
        mu_delta_enumerated(n, k, &p, family, a.member_limit)?
    } else {
        moment_report(n, k, &p, family)?
    };
    emit_json(out, &report)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("tridisk").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(&cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn census_json() {
        let (code, out) = run_args(&["census", "--k", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["enumerated"], "78");
        assert_eq!(v["closed_form"], "78");
    }

    #[test]
    fn certify_single_cycle() {
        let (_, out) = run_args(&["certify", "--n", "8", "--p", "1", "--cycle", "1,2,3", "--max-internal", "0"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "certified");
        assert_eq!(v["internal"], 0);
    }

    #[test]
    fn ratios_csv() {
        let (_, out) = run_args(&["moments", "--ratios", "--kmax", "5"]);
        assert!(out.contains("3,2,1,9/13"));
        assert!(!out.contains(",false,"));
    }

    #[test]
    fn xs_summary() {
        let (_, out) = run_args(&["subsets", "--faces", "1,2,4;1,3,4", "--k", "1"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["phi"], "0");
        assert_eq!(v["v_outer"], 0);
    }
}
