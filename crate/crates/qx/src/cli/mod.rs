//! Command-line front end: verbs, the identity registry, the suite runner
//! and JSON/text reports.

pub mod command;
pub mod registry;
pub mod report;
pub mod suite;

pub use command::{run, Cli, Output};
pub use registry::{check_for, evaluate, plan, run_check, run_perturbed, Caps, Check, Options, IDENTITIES, MAX_N};
pub use report::{reports_json, Report};
pub use suite::run_suite;

use crate::ncalg::{Case, PresKind};
use std::fmt;
use thiserror::Error;

/// Algebra selected with `--case`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Algebra {
    #[value(name = "O")]
    O,
    #[value(name = "Sp")]
    Sp,
    #[value(name = "Mat")]
    Mat,
    #[value(name = "Ext")]
    Ext,
}

impl Algebra {
    pub fn pres_kind(self) -> PresKind {
        match self {
            Algebra::O => PresKind::X(Case::O),
            Algebra::Sp => PresKind::X(Case::Sp),
            Algebra::Mat => PresKind::Mat,
            Algebra::Ext => PresKind::Ext,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::O => "O",
            Algebra::Sp => "Sp",
            Algebra::Mat => "Mat",
            Algebra::Ext => "Ext",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
