use innerbody::GeomError;

/// Failures of a command, each mapped to one process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, bad arguments. Exit 2.
    Usage(String),
    /// A body file whose contents do not describe one consistent body. Exit 3.
    Inconsistent(String),
    /// Erosion past the inradius. Exit 4.
    Collapsed { inradius: f64 },
    /// Operation not available in this dimension. Exit 5.
    Unsupported(usize),
    /// Internal numeric failure. Exit 6.
    Numeric(String),
    /// A verification suite ran and some check failed. Exit 1.
    ChecksFailed { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::ChecksFailed { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Inconsistent(_) => 3,
            CliError::Collapsed { .. } => 4,
            CliError::Unsupported(_) => 5,
            CliError::Numeric(_) => 6,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Inconsistent(m) => write!(f, "inconsistent body: {m}"),
            CliError::Collapsed { inradius } => {
                write!(f, "collapsed: inradius {}", crate::format::sig(*inradius))
            }
            CliError::Unsupported(n) => write!(f, "unsupported dimension {n}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::ChecksFailed { failed } => write!(f, "{failed} check(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}

/// Maps errors raised while operating on already-valid bodies.
impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::UnsupportedDimension(n) => CliError::Unsupported(n),
            GeomError::InvalidInput(m) => CliError::Usage(m),
            GeomError::DimensionMismatch { expected, found } => {
                CliError::Usage(format!("dimension mismatch: expected {expected}, found {found}"))
            }
            other => CliError::Numeric(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
