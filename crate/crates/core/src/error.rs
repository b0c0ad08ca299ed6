//! Crate-wide error type and the CLI exit-code classes.

use thiserror::Error;

use crate::dynamics::DynamicsError;
use crate::extension::ExtensionError;
use crate::numeric::NumericError;
use crate::plmap::PlError;
use crate::realizer::RealizeError;
use crate::tree_pair::TreeError;
use crate::word::WordError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Element(#[from] PlError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Exit-code class of an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Other = 1,
    Parse = 2,
    Budget = 3,
    LevelMismatch = 4,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Numeric(_) | Error::Element(_) | Error::Tree(_) | Error::Usage(_) => {
                ErrorClass::Parse
            }
            Error::Dynamics(_) => ErrorClass::Budget,
            Error::Extension(e) => extension_class(e),
            Error::Word(e) => match e {
                WordError::Extension(e) => extension_class(e),
                WordError::UnknownGenerator(_) => ErrorClass::Other,
                _ => ErrorClass::Parse,
            },
            Error::Realize(e) => match e {
                RealizeError::Extension(e) => extension_class(e),
                RealizeError::NegativeTarget(_) | RealizeError::InvalidRotation { .. } => {
                    ErrorClass::Parse
                }
                _ => ErrorClass::Other,
            },
            Error::Io { .. } => ErrorClass::Other,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.class() as i32
    }

    /// Short machine-readable tag for the one-line error report.
    pub fn kind(&self) -> &'static str {
        match self.class() {
            ErrorClass::Parse => "parse",
            ErrorClass::Budget => "budget",
            ErrorClass::LevelMismatch => "level-mismatch",
            ErrorClass::Other => "error",
        }
    }
}

fn extension_class(e: &ExtensionError) -> ErrorClass {
    match e {
        ExtensionError::LevelMismatch { .. } => ErrorClass::LevelMismatch,
        ExtensionError::Dynamics(_) => ErrorClass::Budget,
        ExtensionError::ZeroLevel | ExtensionError::NotThompson => ErrorClass::Other,
        ExtensionError::Element(_) | ExtensionError::Tree(_) | ExtensionError::Json(_) => {
            ErrorClass::Parse
        }
    }
}
