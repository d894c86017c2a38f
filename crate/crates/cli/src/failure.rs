use std::fmt::Display;

use nullcover::{Classify, ErrorClass};
use serde::Serialize;

/// An error on its way to the user, tagged with its exit status class.
#[derive(Debug)]
pub struct Failure {
    pub class: FailureClass,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureClass {
    Schema,
    Precondition,
    CapExceeded,
    Internal,
    Io,
}

impl FailureClass {
    pub fn exit_code(self) -> i32 {
        match self {
            FailureClass::Io => 1,
            FailureClass::Schema => 2,
            FailureClass::Precondition => 3,
            FailureClass::CapExceeded => 4,
            FailureClass::Internal => 10,
        }
    }
}

impl From<ErrorClass> for FailureClass {
    fn from(c: ErrorClass) -> Self {
        match c {
            ErrorClass::Schema => FailureClass::Schema,
            ErrorClass::Precondition => FailureClass::Precondition,
            ErrorClass::CapExceeded => FailureClass::CapExceeded,
            ErrorClass::Internal => FailureClass::Internal,
        }
    }
}

impl Failure {
    pub fn new(class: FailureClass, message: impl Display) -> Self {
        Failure {
            class,
            message: message.to_string(),
        }
    }

    pub fn schema(message: impl Display) -> Self {
        Self::new(FailureClass::Schema, message)
    }

    pub fn classified<E: Classify + Display>(e: E) -> Self {
        Self::new(e.class().into(), e)
    }
}

macro_rules! classified_from {
    ($($t:ty),*) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::classified(e)
            }
        })*
    };
}

classified_from!(
    nullcover::CoverError,
    nullcover::GroupError,
    nullcover::NullsetError,
    nullcover::StructureError
);

/// Error document printed on failure.
#[derive(Debug, Serialize)]
pub struct ErrorReport<'a> {
    pub error: ErrorBody<'a>,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody<'a> {
    pub class: FailureClass,
    pub exit_code: i32,
    pub message: &'a str,
    /// Everything needed to rerun an internal failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduction: Option<Reproduction<'a>>,
}

#[derive(Debug, Serialize)]
pub struct Reproduction<'a> {
    pub args: &'a [String],
    pub input: Option<&'a serde_json::Value>,
}
