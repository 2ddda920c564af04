use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    Domain(&'static str),
    /// Class or operator parameters violate their range constraints.
    InvalidParams(&'static str),
    /// Malformed coefficient data.
    InvalidSeries(&'static str),
    /// The operation requires a series in negative-coefficient form.
    Form,
    /// The class weight of index `n` vanishes, so the bound is vacuous.
    DegenerateWeight { n: usize },
    /// The neighborhood kernel denominator `gamma (s - 1) - 2 s` vanishes.
    DegenerateDenominator,
    /// A ratio denominator vanishes at the given polar grid point.
    ZeroDenominator { r: f64, theta: f64 },
    /// Evaluation produced a NaN or infinity at the given polar grid point.
    NonFinite { r: f64, theta: f64 },
    /// The series violates the coefficient inequality of the class.
    NotMember { sum: f64, budget: f64 },
}

impl Error {
    /// True for the numerical degeneracies (vanishing weights or denominators).
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::DegenerateWeight { .. }
                | Error::DegenerateDenominator
                | Error::ZeroDenominator { .. }
                | Error::NonFinite { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidSeries(msg) => write!(f, "invalid series: {msg}"),
            Error::Form => write!(f, "operation requires a negative-coefficient series"),
            Error::DegenerateWeight { n } => write!(f, "class weight w_{n} vanishes"),
            Error::DegenerateDenominator => write!(f, "kernel denominator gamma(s-1)-2s vanishes"),
            Error::ZeroDenominator { r, theta } => {
                write!(f, "denominator vanishes at r={r}, theta={theta}")
            }
            Error::NonFinite { r, theta } => {
                write!(f, "non-finite value at r={r}, theta={theta}")
            }
            Error::NotMember { sum, budget } => {
                write!(f, "coefficient sum {sum} exceeds budget {budget}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
