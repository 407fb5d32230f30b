//! Structured findings attached to pipeline results.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    #[serde(default)]
    pub data: serde_json::Value,
}

impl Diagnostic {
    pub fn new(severity: Severity, code: &str, message: impl Into<String>) -> Self {
        Self {
            severity,
            code: code.to_string(),
            message: message.into(),
            data: serde_json::Value::Null,
        }
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = data;
        self
    }
}

pub mod codes {
    pub const NECESSARY_PASSED_NOT_IN_SIGMA: &str = "NECESSARY_PASSED_NOT_IN_SIGMA";
    pub const NECESSARY_PASSED: &str = "NECESSARY_PASSED";
    pub const LIFT_SENSITIVE: &str = "LIFT_SENSITIVE";
    pub const KERNEL_OUTSIDE_XI12_SPAN: &str = "KERNEL_OUTSIDE_XI12_SPAN";
    pub const LIE_SPHERICAL: &str = "LIE_SPHERICAL";
    pub const LIE_INCONCLUSIVE: &str = "LIE_INCONCLUSIVE";
    pub const LIE_NOT_SPHERICAL: &str = "LIE_NOT_SPHERICAL";
    pub const NON_UNIQUE: &str = "NON_UNIQUE";
    pub const PARABOLIC_INDUCTION: &str = "PARABOLIC_INDUCTION";
}
