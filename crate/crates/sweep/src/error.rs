use dicke_ising::Error as ModelError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid {field}: {reason}")]
    Validation { field: String, reason: String },
    #[error("{0}")]
    Domain(ModelError),
    #[error("{failed} hard oracle check(s) failed")]
    OracleFailure { failed: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn validation(field: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Validation {
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// Model errors caused by bad parameters become validation errors naming
    /// `field`; the rest are domain errors.
    pub fn from_model(field: &str, err: ModelError) -> Self {
        match err {
            ModelError::OutOfNormalPhase { .. }
            | ModelError::NonPositiveFrequency { .. }
            | ModelError::ChainTooShort { .. }
            | ModelError::TooLarge { .. } => CliError::validation(field, err.to_string()),
            ModelError::InvalidParameter { name, ref reason } => {
                CliError::validation(format!("{field} ({name})"), reason.clone())
            }
            other => CliError::Domain(other),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } => 2,
            CliError::Domain(_) => 3,
            CliError::OracleFailure { .. } => 4,
            CliError::Io { .. } => 1,
        }
    }
}
