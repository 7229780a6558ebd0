use crate::network_file::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("network file: {0}")]
    Network(#[from] ParseError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 3 for non-physical states, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Numerical(_) => 3,
            _ => 2,
        }
    }
}

impl From<cvwl_core::Error> for CliError {
    fn from(e: cvwl_core::Error) -> Self {
        match e {
            cvwl_core::Error::NonPhysical(m) => Self::Numerical(m),
            other => Self::Config(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Io(std::io::Error::other(e))
    }
}
