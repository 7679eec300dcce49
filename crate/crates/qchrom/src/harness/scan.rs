//! The conjecture scanner: fingerprints of all non-isomorphic trees on d
//! vertices, with collision detection.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{leading_coeff_tree, normalized_fingerprint};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{generate_trees_with_forms, WeightVector};
use crate::qalgebra::{q_factorial, QPoly, QRat};

/// Result of scanning all trees on d vertices for leading-coefficient
/// collisions. Serialized fields are deterministic for fixed inputs and
/// config; wall-clock timing stays out of the JSON.
#[derive(Clone, Debug, Serialize)]
pub struct TreeScanReport {
    pub schema: &'static str,
    pub d: usize,
    pub tree_count: usize,
    /// canonical form -> normalized fingerprint ([d]_q!/q^d) c^1_T(q)
    pub fingerprints: BTreeMap<String, QPoly>,
    /// groups of >= 2 trees sharing a fingerprint
    pub collisions: Vec<Collision>,
    /// canonical forms whose tree-formula audit disagreed (must stay empty)
    pub audit_failures: Vec<String>,
    /// set when the scan was refused by budget; nothing was computed
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aborted: Option<String>,
    pub runtime_stats: RuntimeStats,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Collision {
    pub trees: Vec<String>,
    pub fingerprint: QPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuntimeStats {
    /// not serialized: the JSON report must be identical for any worker count
    #[serde(skip)]
    pub workers: usize,
    pub audited: usize,
}

/// Scans every canonical tree on d vertices: fingerprints via the
/// orientation route, a deterministic 5% spot audit via the tree closed
/// form, and collision grouping. Work is sharded statically over the
/// canonical tree list and merged in canonical order, so the report is
/// identical for any worker count.
pub fn scan_trees(d: usize, config: &RunConfig) -> Result<TreeScanReport> {
    if !(2..=12).contains(&d) {
        return Err(Error::InvalidInput(format!(
            "scan supports 2 <= d <= 12, got {d}"
        )));
    }
    let workers = config.effective_jobs();
    if d > config.max_scan_d {
        return Ok(TreeScanReport {
            schema: "qchrom/1",
            d,
            tree_count: 0,
            fingerprints: BTreeMap::new(),
            collisions: Vec::new(),
            audit_failures: Vec::new(),
            aborted: Some(format!(
                "aborted: d = {d} exceeds the scan budget (max_scan_d = {}); raise --budget-scan-d",
                config.max_scan_d
            )),
            runtime_stats: RuntimeStats {
                workers,
                audited: 0,
            },
            elapsed_ms: 0,
        });
    }

    let start = Instant::now();
    let trees = generate_trees_with_forms(d, config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))?;

    let factorial = q_factorial(d as u64);
    let rows: Vec<(String, QPoly, bool)> = pool.install(|| {
        trees
            .par_iter()
            .enumerate()
            .map(|(idx, (form, tree))| {
                let fingerprint = normalized_fingerprint(tree);
                // audit every 20th tree in canonical order against the
                // tree-formula route
                let mut audit_ok = true;
                if idx % 20 == 0 {
                    let c = leading_coeff_tree(tree, &WeightVector::unit(d), config)
                        .expect("canonical representative is a tree");
                    let from_tree_formula = QRat::new(fingerprint.shift_up(d), factorial.clone())
                        .expect("factorial nonzero");
                    audit_ok = c == from_tree_formula;
                }
                (form.clone(), fingerprint, audit_ok)
            })
            .collect()
    });

    let audited = rows.len().div_ceil(20);
    let mut fingerprints = BTreeMap::new();
    let mut audit_failures = Vec::new();
    let mut by_fingerprint: BTreeMap<QPoly, Vec<String>> = BTreeMap::new();
    for (form, fingerprint, audit_ok) in rows {
        if !audit_ok {
            audit_failures.push(form.clone());
        }
        by_fingerprint
            .entry(fingerprint.clone())
            .or_default()
            .push(form.clone());
        fingerprints.insert(form, fingerprint);
    }
    let collisions: Vec<Collision> = by_fingerprint
        .into_iter()
        .filter(|(_, trees)| trees.len() > 1)
        .map(|(fingerprint, trees)| Collision { trees, fingerprint })
        .collect();

    Ok(TreeScanReport {
        schema: "qchrom/1",
        d,
        tree_count: fingerprints.len(),
        fingerprints,
        collisions,
        audit_failures,
        aborted: None,
        runtime_stats: RuntimeStats { workers, audited },
        elapsed_ms: start.elapsed().as_millis(),
    })
}
