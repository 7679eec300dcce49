//! Run configuration: explicit work budgets, worker count, output options.

use serde::{Deserialize, Serialize};

/// Output format for CLI results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

/// Budgets and run options with hard defaults. Every enumeration that can
/// blow up checks one of these before starting; exceeding a budget is a
/// reported error, never a silent truncation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    /// Largest vertex count accepted anywhere.
    pub max_d: usize,
    /// Largest explicit color-count argument n accepted from callers.
    pub max_n: u64,
    /// Bound on n^d for one brute-force coloring enumeration.
    pub max_oracle_work: u128,
    /// Bound on 2^|E| for edge-subset sums (inclusion-exclusion, tree flats).
    pub max_edge_subsets: u64,
    /// Bound on the number of vertex partitions inspected while enumerating
    /// flats.
    pub max_flat_partitions: u64,
    /// Bound on the total weight Lambda_V accepted by the unit-weight
    /// reduction (output graphs have Lambda_V vertices).
    pub max_reduction_weight: u64,
    /// Largest d the tree scanner runs without an explicit budget raise.
    pub max_scan_d: usize,
    /// Worker count for the scanner; 0 means one worker per CPU.
    pub jobs: usize,
    /// Output format for reports.
    pub format: OutputFormat,
    /// Number of cached G-partition series coefficients.
    pub n_trunc: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_d: 12,
            max_n: 8,
            max_oracle_work: 1 << 32,
            max_edge_subsets: 1 << 20,
            max_flat_partitions: 1 << 20,
            max_reduction_weight: 16,
            max_scan_d: 10,
            jobs: 0,
            format: OutputFormat::Text,
            n_trunc: 30,
        }
    }
}

impl RunConfig {
    /// Effective worker count (resolves 0 to the number of CPUs).
    pub fn effective_jobs(&self) -> usize {
        if self.jobs == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            self.jobs
        }
    }
}
