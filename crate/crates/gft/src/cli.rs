//! The `gft` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gft_core::neighborhood::{distance, hypothesis_check, in_neighborhood};
use gft_core::partial_sums::{extremal_partial, theorem_bounds};
use gft_core::verifier::{
    ConditionProbe, DEFAULT_R_MAX, DEFAULT_R_MIN, DEFAULT_RADII, DEFAULT_THETA_COUNT,
};
use gft_core::{
    ClassParams, Complex64, ConicSpec, GridSpec, NeighborhoodSpec, OperatorParams, TruncatedSeries,
};
use serde::Serialize;

use crate::format::{
    BoundsJson, ConditionReportJson, DistanceJson, InclusionJson, PartialSumsJson, RatioReportJson,
    VerdictJson, parse_series, series_to_json, to_json, write_grid_csv,
};
use crate::parallel::{
    par_grid_min_condition, par_inclusion_property_test, par_values, par_verify_ratio_bounds,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gft",
    version,
    about = "Checks for the class k-US(eta; lambda, mu, gamma, t)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of the operator multipliers Phi(n) for n = 1..=N.
    Phi {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(short = 'N', default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Coefficient-inequality membership verdict for a negative-form series.
    Check {
        #[command(flatten)]
        params: ParamArgs,
        series: PathBuf,
    },
    /// Grid minimum of the defining condition over the disk.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        series: PathBuf,
        /// `csv` dumps every grid value instead of the summary.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sharp single-term function or extremal partial-sum witness.
    Extremal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(
            long,
            conflicts_with = "partial_m",
            required_unless_present = "partial_m"
        )]
        n: Option<usize>,
        #[arg(long)]
        partial_m: Option<usize>,
    },
    /// Distance between two series, or a seeded neighborhood inclusion test.
    Neighborhood {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        f: PathBuf,
        #[arg(long, conflicts_with = "trials", required_unless_present = "trials")]
        g: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, requires_all = ["seed", "alpha"])]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Order of the sampled neighbors (at least the order of f).
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Partial-sum ratio bounds and their grid verification.
    PartialSums {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        grid: GridArgs,
        f: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Shape of the conic region for k and gamma.
    ClassifyConic {
        #[arg(long)]
        k: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OperatorArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 0)]
    pub eta: u32,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[command(flatten)]
    pub op: OperatorArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub k: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long = "t-re", default_value_t = -1.0, allow_negative_numbers = true)]
    pub t_re: f64,
    #[arg(long = "t-im", default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_im: f64,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = DEFAULT_RADII)]
    pub radii: usize,
    #[arg(long, default_value_t = DEFAULT_R_MIN)]
    pub r_min: f64,
    #[arg(long, default_value_t = DEFAULT_R_MAX)]
    pub r_max: f64,
    #[arg(long, default_value_t = DEFAULT_THETA_COUNT)]
    pub theta_count: usize,
    /// Extra argument to sample at every radius; repeatable.
    #[arg(long = "ray", allow_negative_numbers = true)]
    pub rays: Vec<f64>,
}

impl OperatorArgs {
    fn build(&self) -> gft_core::Result<OperatorParams> {
        OperatorParams::new(self.lambda, self.mu, self.eta)
    }
}

impl ParamArgs {
    pub fn build(&self) -> gft_core::Result<ClassParams> {
        ClassParams::new(
            self.op.build()?,
            self.k,
            self.gamma,
            Complex64::new(self.t_re, self.t_im),
        )
    }
}

impl GridArgs {
    pub fn build(&self) -> gft_core::Result<GridSpec> {
        let grid = GridSpec::log_spaced(self.radii, self.r_min, self.r_max, self.theta_count)?;
        Ok(self.rays.iter().fold(grid, |g, &t| g.with_ray(t)))
    }
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<gft_core::Error> for Failure {
    fn from(e: gft_core::Error) -> Self {
        let code = if e.is_degeneracy() {
            EXIT_DEGENERATE
        } else if matches!(e, gft_core::Error::NotMember { .. }) {
            EXIT_FAIL
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_series(path: &Path) -> Result<TruncatedSeries, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_series(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn verdict(pass: bool) -> i32 {
    if pass { EXIT_PASS } else { EXIT_FAIL }
}

#[derive(Serialize)]
struct PhiJson {
    lambda: f64,
    mu: f64,
    eta: u32,
    phi: Vec<f64>,
}

#[derive(Serialize)]
struct ConicJson {
    k: f64,
    gamma: f64,
    kind: &'static str,
}

/// Runs one parsed command, writing its report to `out`; returns the exit code.
pub fn execute<W: Write>(command: &Command, out: &mut W) -> Result<i32, Failure> {
    let mut emit = |text: &str| {
        out.write_all(text.as_bytes()).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("write failed: {e}"),
        })
    };
    match command {
        Command::Phi { op, n, format } => {
            let op = op.build()?;
            let phi = (1..=*n)
                .map(|i| op.phi(i))
                .collect::<gft_core::Result<Vec<_>>>()?;
            match format {
                Format::Json => emit(&to_json(&PhiJson {
                    lambda: op.lambda(),
                    mu: op.mu(),
                    eta: op.eta(),
                    phi,
                }))?,
                Format::Csv => {
                    let mut s = String::from("n,phi\n");
                    for (i, v) in phi.iter().enumerate() {
                        s.push_str(&format!("{},{}\n", i + 1, v));
                    }
                    emit(&s)?
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Check { params, series } => {
            let p = params.build()?;
            let f = read_series(series)?;
            let v = p.is_member(&f)?;
            emit(&to_json(&VerdictJson::from(&v)))?;
            Ok(verdict(v.member))
        }
        Command::Verify {
            params,
            grid,
            series,
            format,
        } => {
            let p = params.build()?;
            let grid = grid.build()?;
            let f = read_series(series)?;
            match format {
                Format::Json => {
                    let report = par_grid_min_condition(&p, &f, &grid)?;
                    emit(&to_json(&ConditionReportJson::from(&report)))?;
                    Ok(verdict(report.pass))
                }
                Format::Csv => {
                    let probe = ConditionProbe::new(&p, &f);
                    let rows = par_values(&grid, &probe)?;
                    let mut buf = Vec::new();
                    write_grid_csv(&mut buf, &rows[1..]).expect("in-memory write");
                    emit(&String::from_utf8(buf).expect("ascii"))?;
                    Ok(verdict(
                        rows.iter()
                            .all(|(_, g)| *g >= -gft_core::verifier::GRID_TOLERANCE),
                    ))
                }
            }
        }
        Command::Extremal {
            params,
            n,
            partial_m,
        } => {
            let p = params.build()?;
            let f = match (n, partial_m) {
                (Some(n), None) => p.extremal_function(*n)?,
                (None, Some(m)) => extremal_partial(&p, *m)?,
                _ => return Err(usage("exactly one of --n and --partial-m is required")),
            };
            emit(&series_to_json(&f))?;
            Ok(EXIT_PASS)
        }
        Command::Neighborhood {
            params,
            grid,
            f,
            g,
            alpha,
            trials,
            seed,
            order,
        } => {
            let p = params.build()?;
            let f = read_series(f)?;
            if let Some(g) = g {
                let g = read_series(g)?;
                let d = distance(&p, &f, &g)?;
                let inside = match alpha {
                    Some(a) => Some(in_neighborhood(&NeighborhoodSpec::new(p, *a)?, &f, &g)?),
                    None => None,
                };
                emit(&to_json(&DistanceJson {
                    distance: d,
                    alpha: *alpha,
                    in_neighborhood: inside,
                }))?;
                return Ok(verdict(inside.unwrap_or(true)));
            }
            let (Some(trials), Some(seed), Some(alpha)) = (trials, seed, alpha) else {
                return Err(usage("--trials needs --seed and --alpha"));
            };
            let spec = NeighborhoodSpec::new(p, *alpha)?;
            if !hypothesis_check(
                &spec,
                &f,
                gft_core::neighborhood::DEFAULT_RING_SAMPLES,
                gft_core::neighborhood::DEFAULT_RING_COUNT,
            )? {
                return Err(Failure {
                    code: EXIT_FAIL,
                    message: String::from(
                        "hypothesis check failed: f + eps z scaled leaves the class",
                    ),
                });
            }
            let grid = grid.build()?;
            let report = par_inclusion_property_test(&spec, &f, *trials, *order, &grid, *seed)?;
            emit(&to_json(&InclusionJson::from(&report)))?;
            Ok(verdict(report.all_pass()))
        }
        Command::PartialSums { params, grid, f, m } => {
            let p = params.build()?;
            let grid = grid.build()?;
            let f = read_series(f)?;
            let bounds = theorem_bounds(&p, *m, f.order())?;
            let reports = par_verify_ratio_bounds(&p, &f, *m, &grid)?;
            let pass = reports.iter().all(|r| r.pass);
            emit(&to_json(&PartialSumsJson {
                bounds: BoundsJson::from(&bounds),
                reports: reports.iter().map(RatioReportJson::from).collect(),
            }))?;
            Ok(verdict(pass))
        }
        Command::ClassifyConic { k, gamma } => {
            let c = ConicSpec::new(*k, *gamma)?;
            emit(&to_json(&ConicJson {
                k: c.k(),
                gamma: c.gamma(),
                kind: c.classify().as_str(),
            }))?;
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
