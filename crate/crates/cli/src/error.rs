use horadam_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> Self {
        let context = context.into();
        move |source| Self::Io { context, source }
    }

    /// 1 for arithmetic failures inside a computation, 2 for bad input or setup.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Core(
                CoreError::ZeroDivisor { .. }
                | CoreError::SingularCoefficient { .. }
                | CoreError::IrrationalResidue(_)
                | CoreError::InexactDivision(_)
                | CoreError::DivisionByZero(_),
            ) => 1,
            _ => 2,
        }
    }
}
