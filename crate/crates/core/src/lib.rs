//! Workbench library for semantic textual similarity experiments on the
//! STS Benchmark: corpus parsing, handcrafted structural text features,
//! ingestion of external model score columns, in-repo boosting regressors
//! (gradient boosted trees with optional one-side sampling, AdaBoost.R2),
//! word-vector baselines, correlation/KS statistics, and edge-of-range
//! error analysis.
//!
//! Everything is deterministic given a seed: the same inputs produce the
//! same bytes in every artifact, independent of thread count.

pub mod analysis;
pub mod baselines;
pub mod boost;
pub mod corpus;
pub mod error;
pub mod plot;
pub mod scores;
pub mod stats;
pub mod textfeat;

pub use error::{Error, Result};
