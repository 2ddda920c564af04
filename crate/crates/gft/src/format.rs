//! JSON and CSV representations of series, verdicts and reports.

use std::fmt;
use std::io::{self, Write};

use gft_core::neighborhood::InclusionReport;
use gft_core::partial_sums::PartialSumBounds;
use gft_core::{
    Complex64, GridSpec, MembershipVerdict, PolarPoint, SignForm, TruncatedSeries,
    VerificationReport,
};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Series(gft_core::Error),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "malformed series JSON: {e}"),
            FormatError::Series(e) => write!(f, "invalid series: {e}"),
        }
    }
}

impl std::error::Error for FormatError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormTag {
    Negative,
    General,
}

impl From<SignForm> for FormTag {
    fn from(form: SignForm) -> Self {
        match form {
            SignForm::NegativeCoefficients => FormTag::Negative,
            SignForm::General => FormTag::General,
        }
    }
}

impl From<FormTag> for SignForm {
    fn from(tag: FormTag) -> Self {
        match tag {
            FormTag::Negative => SignForm::NegativeCoefficients,
            FormTag::General => SignForm::General,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientJson {
    pub n: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// On-disk series: unlisted indices are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub form: FormTag,
    pub order: usize,
    pub coefficients: Vec<CoefficientJson>,
}

impl SeriesJson {
    /// Lists every non-zero stored coefficient in increasing `n`.
    pub fn from_series(f: &TruncatedSeries) -> Self {
        Self {
            form: f.form().into(),
            order: f.order(),
            coefficients: f
                .terms()
                .filter(|(_, c)| *c != Complex64::new(0.0, 0.0))
                .map(|(n, c)| CoefficientJson {
                    n,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn to_series(&self) -> Result<TruncatedSeries, FormatError> {
        TruncatedSeries::from_terms(
            self.form.into(),
            self.order,
            self.coefficients
                .iter()
                .map(|c| (c.n, Complex64::new(c.re, c.im))),
        )
        .map_err(FormatError::Series)
    }
}

pub fn parse_series(text: &str) -> Result<TruncatedSeries, FormatError> {
    let raw: SeriesJson = serde_json::from_str(text).map_err(FormatError::Json)?;
    raw.to_series()
}

pub fn series_to_json(f: &TruncatedSeries) -> String {
    to_json(&SeriesJson::from_series(f))
}

/// Pretty JSON with a trailing newline. Floats use the shortest representation
/// that parses back to the same bits.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub member: bool,
    pub sum: f64,
    pub budget: f64,
    pub slack: f64,
}

impl From<&MembershipVerdict> for VerdictJson {
    fn from(v: &MembershipVerdict) -> Self {
        Self {
            member: v.member,
            sum: v.sum,
            budget: v.budget,
            slack: v.slack,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub r: f64,
    pub theta: f64,
}

impl From<PolarPoint> for PointJson {
    fn from(p: PolarPoint) -> Self {
        Self {
            r: p.r,
            theta: p.theta,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridJson {
    pub r_values: Vec<f64>,
    pub theta_count: usize,
    pub rays: Vec<f64>,
}

impl From<&GridSpec> for GridJson {
    fn from(g: &GridSpec) -> Self {
        Self {
            r_values: g.r_values().to_vec(),
            theta_count: g.theta_count(),
            rays: g.rays().to_vec(),
        }
    }
}

/// Condition-minimum report, with the grid it was taken over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReportJson {
    pub quantity: String,
    pub bound: f64,
    pub grid_min: f64,
    pub margin: f64,
    pub argmin: PointJson,
    pub tolerance: f64,
    pub pass: bool,
    pub grid: GridJson,
}

impl From<&VerificationReport> for ConditionReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            quantity: r.quantity.clone(),
            bound: r.bound,
            grid_min: r.minimum,
            margin: r.margin(),
            argmin: r.argmin.into(),
            tolerance: r.tolerance,
            pass: r.pass,
            grid: (&r.grid).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReportJson {
    pub ratio: String,
    pub bound: f64,
    pub grid_min: f64,
    pub margin: f64,
    pub argmin: PointJson,
    pub pass: bool,
}

impl From<&VerificationReport> for RatioReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            ratio: r.quantity.clone(),
            bound: r.bound,
            grid_min: r.minimum,
            margin: r.margin(),
            argmin: r.argmin.into(),
            pass: r.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub m: usize,
    pub delta: f64,
    pub bound_f_over_fm: f64,
    pub bound_fm_over_f: f64,
    pub bound_df_over_dfm: f64,
    pub bound_dfm_over_df: f64,
    pub checked_to: usize,
    pub value_ratios_proven: bool,
    pub derivative_ratios_proven: bool,
}

impl From<&PartialSumBounds> for BoundsJson {
    fn from(b: &PartialSumBounds) -> Self {
        Self {
            m: b.m,
            delta: b.delta,
            bound_f_over_fm: b.bound_f_over_fm,
            bound_fm_over_f: b.bound_fm_over_f,
            bound_df_over_dfm: b.bound_df_over_dfm,
            bound_dfm_over_df: b.bound_dfm_over_df,
            checked_to: b.checked_to,
            value_ratios_proven: b.value_ratios_proven(),
            derivative_ratios_proven: b.derivative_ratios_proven(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialSumsJson {
    pub bounds: BoundsJson,
    pub reports: Vec<RatioReportJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InclusionJson {
    pub alpha: f64,
    pub trials: usize,
    pub passes: usize,
    pub min_grid_margin: f64,
    pub seed: u64,
}

impl From<&InclusionReport> for InclusionJson {
    fn from(r: &InclusionReport) -> Self {
        Self {
            alpha: r.alpha,
            trials: r.trials,
            passes: r.passes,
            min_grid_margin: r.min_grid_margin,
            seed: r.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceJson {
    pub distance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_neighborhood: Option<bool>,
}

/// Writes `r,theta,G` rows, header first, in grid order.
pub fn write_grid_csv<W: Write>(out: &mut W, rows: &[(PolarPoint, f64)]) -> io::Result<()> {
    writeln!(out, "r,theta,G")?;
    for (p, g) in rows {
        writeln!(out, "{},{},{}", p.r, p.theta, g)?;
    }
    Ok(())
}
