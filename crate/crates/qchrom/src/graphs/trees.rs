//! Free-tree generation (one representative per isomorphism class) and
//! AHU-style canonical forms.
//!
//! Trees are generated by enumerating every Prüfer sequence and deduplicating
//! by canonical form; the dedup is simple enough to double as its own oracle.
//! Enumeration is linear in d^(d-2), so d = 11, 12 are allowed but slow.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::Graph;

const MAX_TREE_D: usize = 12;

/// Rooted AHU code bit-packed as (length, bits): '(' = 0, ')' = 1, first
/// symbol in the most significant used bit. Codes have length 2d <= 24 bits.
type Code = (u8, u32);

/// Left-aligned value for lexicographic comparison of codes.
fn code_key(c: Code) -> u64 {
    (c.1 as u64) << (64 - c.0 as u32)
}

/// Scratch adjacency for one small tree, heap-free.
struct TreeAdj {
    d: usize,
    neighbors: [[u8; MAX_TREE_D]; MAX_TREE_D],
    degree: [u8; MAX_TREE_D],
}

impl TreeAdj {
    fn new(d: usize) -> TreeAdj {
        TreeAdj {
            d,
            neighbors: [[0; MAX_TREE_D]; MAX_TREE_D],
            degree: [0; MAX_TREE_D],
        }
    }

    fn clear(&mut self) {
        self.degree = [0; MAX_TREE_D];
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.neighbors[a][self.degree[a] as usize] = b as u8;
        self.neighbors[b][self.degree[b] as usize] = a as u8;
        self.degree[a] += 1;
        self.degree[b] += 1;
    }

    fn neighbors(&self, v: usize) -> &[u8] {
        &self.neighbors[v][..self.degree[v] as usize]
    }

    /// The 1 or 2 centers, by iterated leaf removal.
    fn centers(&self) -> (usize, Option<usize>) {
        let d = self.d;
        if d == 1 {
            return (0, None);
        }
        let mut deg = self.degree;
        let mut removed = [false; MAX_TREE_D];
        let mut layer: Vec<usize> = (0..d).filter(|&v| deg[v] == 1).collect();
        let mut remaining = d;
        while remaining > 2 {
            let mut next = Vec::with_capacity(layer.len());
            for &v in &layer {
                removed[v] = true;
                remaining -= 1;
                for &u in self.neighbors(v) {
                    let u = u as usize;
                    if !removed[u] {
                        deg[u] -= 1;
                        if deg[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut centers = (0..d).filter(|&v| !removed[v]);
        let c1 = centers.next().unwrap();
        (c1, centers.next())
    }

    fn rooted_code(&self, v: usize, parent: usize) -> Code {
        let mut child_codes = [(0u8, 0u32); MAX_TREE_D];
        let mut count = 0;
        for &u in self.neighbors(v) {
            let u = u as usize;
            if u != parent {
                child_codes[count] = self.rooted_code(u, v);
                count += 1;
            }
        }
        let codes = &mut child_codes[..count];
        codes.sort_unstable_by_key(|&c| code_key(c));
        let mut bits = 0u32; // leading '(' is the zero bit we shift under
        let mut len = 1u8;
        for &(clen, cbits) in codes.iter() {
            bits = (bits << clen) | cbits;
            len += clen;
        }
        bits = (bits << 1) | 1;
        len += 1;
        (len, bits)
    }

    /// Canonical code of the unrooted tree: the smaller rooted code over the
    /// centers.
    fn canonical_code(&self) -> Code {
        let (c1, c2) = self.centers();
        let code1 = self.rooted_code(c1, usize::MAX);
        match c2 {
            None => code1,
            Some(c2) => {
                let code2 = self.rooted_code(c2, usize::MAX);
                if code_key(code2) < code_key(code1) {
                    code2
                } else {
                    code1
                }
            }
        }
    }

    /// Canonically labeled copy: preorder labels from the canonical root,
    /// children visited in ascending code order. Isomorphic trees produce
    /// identical labeled graphs.
    fn canonical_graph(&self) -> Graph {
        let (c1, c2) = self.centers();
        let root = match c2 {
            None => c1,
            Some(c2) => {
                if code_key(self.rooted_code(c2, usize::MAX))
                    < code_key(self.rooted_code(c1, usize::MAX))
                {
                    c2
                } else {
                    c1
                }
            }
        };
        let mut labels = [usize::MAX; MAX_TREE_D];
        let mut next = 0usize;
        let mut edges = Vec::with_capacity(self.d.saturating_sub(1));
        self.assign_labels(root, usize::MAX, &mut labels, &mut next, &mut edges);
        Graph::new(self.d, edges)
    }

    fn assign_labels(
        &self,
        v: usize,
        parent: usize,
        labels: &mut [usize; MAX_TREE_D],
        next: &mut usize,
        edges: &mut Vec<(usize, usize)>,
    ) {
        labels[v] = *next;
        *next += 1;
        let mut children = [(0u64, 0usize); MAX_TREE_D];
        let mut count = 0;
        for &u in self.neighbors(v) {
            let u = u as usize;
            if u != parent {
                children[count] = (code_key(self.rooted_code(u, v)), u);
                count += 1;
            }
        }
        children[..count].sort_unstable();
        for &(_, u) in &children[..count] {
            edges.push((labels[v], *next));
            self.assign_labels(u, v, labels, next, edges);
        }
    }
}

fn code_to_string(code: Code) -> String {
    let (len, bits) = code;
    (0..len)
        .rev()
        .map(|i| if bits >> i & 1 == 1 { ')' } else { '(' })
        .collect()
}

fn adj_of_graph(g: &Graph) -> TreeAdj {
    let mut adj = TreeAdj::new(g.vertex_count());
    for &(a, b) in g.edges() {
        adj.add_edge(a, b);
    }
    adj
}

/// AHU canonical encoding of a tree, rooted at its center (for bicentral
/// trees, the lexicographically smaller of the two rooted encodings).
/// Equal strings iff the trees are isomorphic.
pub fn tree_canonical_form(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        )));
    }
    Ok(code_to_string(adj_of_graph(g).canonical_code()))
}

/// Canonically relabeled representative of a tree's isomorphism class.
pub fn tree_canonical_graph(g: &Graph) -> Result<Graph> {
    if !g.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        )));
    }
    Ok(adj_of_graph(g).canonical_graph())
}

/// Standard linear Prüfer decode into the scratch adjacency.
fn decode_prufer(seq: &[usize], adj: &mut TreeAdj) {
    let d = seq.len() + 2;
    adj.clear();
    let mut degree = [1u8; MAX_TREE_D];
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        adj.add_edge(leaf, v);
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    adj.add_edge(leaf, d - 1);
}

/// Exactly one canonically labeled representative per isomorphism class of
/// free trees on d vertices, ordered by canonical form.
pub fn generate_trees(d: usize, config: &RunConfig) -> Result<Vec<Graph>> {
    Ok(generate_trees_with_forms(d, config)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// Like [`generate_trees`] but paired with each tree's canonical form.
pub fn generate_trees_with_forms(d: usize, config: &RunConfig) -> Result<Vec<(String, Graph)>> {
    if !(1..=MAX_TREE_D).contains(&d) {
        return Err(Error::InvalidInput(format!(
            "tree generation supports 1 <= d <= {MAX_TREE_D}, got {d}"
        )));
    }
    if d > config.max_d {
        return Err(Error::BudgetExceeded(format!(
            "d = {d} exceeds max_d = {}",
            config.max_d
        )));
    }
    if d == 1 {
        let g = Graph::edgeless(1);
        return Ok(vec![(tree_canonical_form(&g)?, g)]);
    }
    let total: u64 = (d as u64).pow(d as u32 - 2);
    let chunk_count = if total < 1 << 16 { 1 } else { 64 };
    let chunk_size = total.div_ceil(chunk_count);
    let maps: Vec<HashMap<u64, Graph>> = (0..chunk_count)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_size;
            let hi = ((c + 1) * chunk_size).min(total);
            scan_prufer_range(d, lo, hi)
        })
        .collect();
    let mut by_form: Vec<(String, Graph)> = Vec::new();
    let mut seen = HashMap::new();
    for map in maps {
        for (key, graph) in map {
            if seen.insert(key, ()).is_none() {
                let form = code_to_string(((key >> 32) as u8, key as u32));
                by_form.push((form, graph));
            }
        }
    }
    by_form.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(by_form)
}

/// Scans Prüfer indices [lo, hi), returning canonical-key -> representative.
fn scan_prufer_range(d: usize, lo: u64, hi: u64) -> HashMap<u64, Graph> {
    let m = d - 2;
    let mut seq = vec![0usize; m];
    // mixed-radix digits of lo, least significant first
    let mut idx = lo;
    for digit in seq.iter_mut() {
        *digit = (idx % d as u64) as usize;
        idx /= d as u64;
    }
    let mut adj = TreeAdj::new(d);
    let mut found: HashMap<u64, Graph> = HashMap::new();
    let mut i = lo;
    while i < hi {
        decode_prufer(&seq, &mut adj);
        let (len, bits) = adj.canonical_code();
        let key = ((len as u64) << 32) | bits as u64;
        found.entry(key).or_insert_with(|| adj.canonical_graph());
        // increment the mixed-radix counter
        i += 1;
        for digit in seq.iter_mut() {
            *digit += 1;
            if *digit == d {
                *digit = 0;
            } else {
                break;
            }
        }
    }
    found
}
