use thiserror::Error;

/// A single violated invariant, produced by the validators.
///
/// Validators accumulate all violations they find instead of stopping at
/// the first one, so a `Vec<Violation>` is the usual failure payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short machine-readable tag, e.g. `"cycle"` or `"unstable"`.
    pub kind: String,
    /// Human-readable detail naming the offending element.
    pub detail: String,
}

impl Violation {
    pub fn new(kind: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            kind: kind.into(),
            detail: detail.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.kind, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// A candidate object failed validation; every broken invariant is listed.
    #[error("validation failed: {}", format_violations(.0))]
    Invalid(Vec<Violation>),

    /// Preconditions of an operation were not met.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series computation could not resolve a leading term / valuation
    /// at the available truncation order. Names the operation that lost
    /// resolution so degeneration runs can be debugged.
    #[error("insufficient precision in {op}{}", needed.as_ref().map(|n| format!(" (need order >= {n})")).unwrap_or_default())]
    InsufficientPrecision {
        op: String,
        needed: Option<String>,
    },

    /// The computation would leave the rational residue field. The input
    /// must be reparametrized (t -> t^k) or uses cycles this tool cannot
    /// represent exactly.
    #[error("irrational residue in {op}: {detail}")]
    IrrationalResidue { op: String, detail: String },
}

impl Error {
    pub fn insufficient(op: impl Into<String>) -> Self {
        Error::InsufficientPrecision {
            op: op.into(),
            needed: None,
        }
    }

    pub fn insufficient_at(op: impl Into<String>, needed: impl Into<String>) -> Self {
        Error::InsufficientPrecision {
            op: op.into(),
            needed: Some(needed.into()),
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid(kind: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Invalid(vec![Violation::new(kind, detail)])
    }
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
