//! Experiment campaigns: declarative configuration, seeded multi-run
//! execution, CSV records, and summary statistics.

mod campaign;
mod config;
mod records;
mod stats;

pub use campaign::{front_dump_path, results_path, run_campaign, CampaignOptions};
pub use config::{ExperimentConfig, ProblemSpec, VariationOverrides, OUTPUT_DIR_ENV};
pub use records::{read_records, write_front, RunRecord, CSV_HEADER};
pub use stats::{friedman_test, summarize, CellSummary, FriedmanResult};

/// Errors from campaign configuration, execution, and result files.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("config parse error: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid campaign: {0}")]
    Invalid(String),
}

pub type HarnessResult<T> = std::result::Result<T, HarnessError>;
