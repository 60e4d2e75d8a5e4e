use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] splitcheck::expr::ParseError),
    #[error("resource cap: {0}")]
    Cap(String),
    #[error("{0}")]
    Core(splitcheck::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<splitcheck::Error> for CliError {
    fn from(e: splitcheck::Error) -> Self {
        match e {
            splitcheck::Error::Parse(p) => CliError::Parse(p),
            splitcheck::Error::SizeTooLarge { .. } | splitcheck::Error::CapTooSmall { .. } => {
                CliError::Cap(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap(_) => 3,
            _ => 2,
        }
    }
}
