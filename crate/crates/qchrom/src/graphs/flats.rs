//! Flats of the graphic arrangement and the Möbius function of their lattice.
//!
//! A flat is an edge set S such that adding any further edge strictly merges
//! components; equivalently, S is exactly the set of edges inside the blocks
//! of a partition of V into connected pieces, and that partition determines
//! the flat.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// A flat: its edge set and the component partition P(S).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Bit k set iff canonical edge k of the parent graph lies in S.
    pub edge_mask: u64,
    /// The edges of S, in canonical order.
    pub edges: Vec<(usize, usize)>,
    /// Vertex blocks of the components of (V, S), blocks sorted by minimum.
    pub partition: Vec<Vec<usize>>,
}

/// All flats, ordered by (|S|, edge bitmask). The empty flat is first.
pub fn flats(graph: &Graph, config: &RunConfig) -> Result<Vec<Flat>> {
    let d = graph.vertex_count();
    let adj = graph.adjacency_masks();
    let mut found: Vec<Flat> = Vec::new();
    let mut inspected: u64 = 0;

    // enumerate set partitions of V by restricted growth, keeping those whose
    // blocks are connected in G
    let mut assignment = vec![0usize; d];
    #[allow(clippy::too_many_arguments)]
    fn walk(
        v: usize,
        used: usize,
        assignment: &mut [usize],
        graph: &Graph,
        adj: &[u64],
        inspected: &mut u64,
        budget: u64,
        found: &mut Vec<Flat>,
    ) -> Result<()> {
        let d = assignment.len();
        if v == d {
            *inspected += 1;
            if *inspected > budget {
                return Err(Error::BudgetExceeded(format!(
                    "flat enumeration inspected more than {budget} partitions"
                )));
            }
            if let Some(flat) = flat_from_assignment(assignment, used, graph, adj) {
                found.push(flat);
            }
            return Ok(());
        }
        for block in 0..=used.min(v) {
            assignment[v] = block;
            let next_used = used.max(block + 1);
            walk(
                v + 1,
                next_used,
                assignment,
                graph,
                adj,
                inspected,
                budget,
                found,
            )?;
        }
        Ok(())
    }
    if d == 0 {
        found.push(Flat {
            edge_mask: 0,
            edges: Vec::new(),
            partition: Vec::new(),
        });
    } else {
        walk(
            0,
            0,
            &mut assignment,
            graph,
            &adj,
            &mut inspected,
            config.max_flat_partitions,
            &mut found,
        )?;
    }
    found.sort_by_key(|f| (f.edges.len(), f.edge_mask));
    Ok(found)
}

/// Builds the flat for a block assignment when every block is connected.
fn flat_from_assignment(
    assignment: &[usize],
    used: usize,
    graph: &Graph,
    adj: &[u64],
) -> Option<Flat> {
    let d = assignment.len();
    let mut block_masks = vec![0u64; used];
    for (v, &b) in assignment.iter().enumerate() {
        block_masks[b] |= 1 << v;
    }
    for &mask in &block_masks {
        if !mask_connected(mask, adj) {
            return None;
        }
    }
    let mut edge_mask = 0u64;
    let mut edges = Vec::new();
    for (k, &(a, b)) in graph.edges().iter().enumerate() {
        if assignment[a] == assignment[b] {
            edge_mask |= 1 << k;
            edges.push((a, b));
        }
    }
    let mut partition: Vec<Vec<usize>> = block_masks
        .iter()
        .map(|&mask| (0..d).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    partition.sort_by_key(|b: &Vec<usize>| b[0]);
    Some(Flat {
        edge_mask,
        edges,
        partition,
    })
}

fn mask_connected(mask: u64, adj: &[u64]) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// The Möbius function mu(empty, S) of the flat lattice, aligned with the
/// order of [`flats`]. Computed by the defining recursion
/// mu(empty) = 1, mu(S) = -sum of mu(S') over flats S' strictly below S.
pub fn mobius_flats(graph: &Graph, config: &RunConfig) -> Result<Vec<(Flat, i64)>> {
    let all = flats(graph, config)?;
    let mut mu: Vec<i64> = Vec::with_capacity(all.len());
    for i in 0..all.len() {
        if all[i].edges.is_empty() {
            mu.push(1);
            continue;
        }
        let mask = all[i].edge_mask;
        let mut acc: i64 = 0;
        for j in 0..i {
            if all[j].edge_mask & !mask == 0 && all[j].edge_mask != mask {
                acc += mu[j];
            }
        }
        mu.push(-acc);
    }
    Ok(all.into_iter().zip(mu).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn tree_flats_are_all_subsets_with_sign_mobius() {
        let t = Graph::path(4);
        let fm = mobius_flats(&t, &cfg()).unwrap();
        assert_eq!(fm.len(), 8); // 2^(d-1)
        for (flat, mu) in &fm {
            assert_eq!(*mu, if flat.edges.len() % 2 == 0 { 1 } else { -1 });
        }
        // alternating sum over a lattice with bottom != top
        let total: i64 = fm.iter().map(|(_, mu)| mu).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn triangle_has_five_flats() {
        let k3 = Graph::complete(3);
        let fm = mobius_flats(&k3, &cfg()).unwrap();
        // empty, three singletons, and E; the two-edge subsets are not flats
        assert_eq!(fm.len(), 5);
        let top = fm.iter().find(|(f, _)| f.edges.len() == 3).unwrap();
        assert_eq!(top.1, 2);
    }

    #[test]
    fn edgeless_graph_single_flat() {
        let g = Graph::edgeless(3);
        let fm = mobius_flats(&g, &cfg()).unwrap();
        assert_eq!(fm.len(), 1);
        assert_eq!(fm[0].1, 1);
        assert_eq!(fm[0].0.partition, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn budget_is_enforced() {
        let mut config = cfg();
        config.max_flat_partitions = 10;
        assert!(matches!(
            flats(&Graph::complete(4), &config),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
