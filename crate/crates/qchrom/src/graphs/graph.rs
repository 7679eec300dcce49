//! Simple undirected graphs on vertices 0..d with positive integer weights.
//!
//! Vertices are 0-indexed internally; all file formats and display output use
//! 1-indexed labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph in canonical form: edges are pairs `(i, j)` with
/// `i < j`, strictly sorted, no duplicates, no loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing edge order. Panics on loops or
    /// out-of-range endpoints; use the harness parsers for untrusted input.
    pub fn new(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut es: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        for &(a, b) in &es {
            assert!(a < b, "loop at vertex {a}");
            assert!(b < d, "edge ({a}, {b}) out of range for d = {d}");
        }
        es.sort_unstable();
        es.dedup();
        Graph { d, edges: es }
    }

    /// Path on d vertices: 0-1-2-...-(d-1).
    pub fn path(d: usize) -> Graph {
        Graph::new(d, (1..d).map(|i| (i - 1, i)))
    }

    /// Star on d vertices with center 0.
    pub fn star(d: usize) -> Graph {
        Graph::new(d, (1..d).map(|i| (0, i)))
    }

    /// Complete graph on d vertices.
    pub fn complete(d: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                edges.push((i, j));
            }
        }
        Graph::new(d, edges)
    }

    pub fn edgeless(d: usize) -> Graph {
        Graph {
            d,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a <= b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Adjacency bitmasks (d <= 64 assumed; desk scale is d <= 12).
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.d];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Connected components of `(V, S)` for an edge subset `S`, as vertex
    /// blocks: each block sorted, blocks sorted by minimum element.
    pub fn components(&self, subset: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.d);
        for &(a, b) in subset {
            debug_assert!(self.has_edge(a, b), "subset edge not in graph");
            dsu.union(a, b);
        }
        dsu.blocks()
    }

    /// Component blocks of the whole graph.
    pub fn component_blocks(&self) -> Vec<Vec<usize>> {
        self.components(&self.edges.clone())
    }

    pub fn is_connected(&self) -> bool {
        self.d <= 1 || self.component_blocks().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.d >= 1 && self.edges.len() == self.d - 1 && self.is_connected()
    }

    /// Removes the edge e, keeping all vertices.
    pub fn delete(&self, e: (usize, usize)) -> Result<Graph> {
        let e = norm(e);
        let idx = self
            .edges
            .binary_search(&e)
            .map_err(|_| Error::EdgeNotFound(e.0 + 1, e.1 + 1))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { d: self.d, edges })
    }

    /// Contracts the edge e = (u, v): merges v into the lower endpoint u,
    /// relabels vertices above v down by one, collapses parallel edges, and
    /// adds the endpoint weights.
    pub fn contract(
        &self,
        e: (usize, usize),
        lambda: &WeightVector,
    ) -> Result<(Graph, WeightVector)> {
        let (u, v) = norm(e);
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(u + 1, v + 1));
        }
        let relabel = |w: usize| -> usize {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&ed| ed != (u, v))
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let mut weights = Vec::with_capacity(self.d - 1);
        for w in 0..self.d {
            if w == v {
                continue;
            }
            let mut lam = lambda.get(w);
            if w == u {
                lam += lambda.get(v);
            }
            weights.push(lam);
        }
        Ok((Graph::new(self.d - 1, edges), WeightVector::new(weights)?))
    }

    /// The expansion graph at v: splits v into v' (keeps index v, weight
    /// lambda_v - 1) and v'' (new index d, weight 1), both adjacent to every
    /// old neighbor of v. Requires lambda_v >= 2.
    pub fn expand_vertex(&self, v: usize, lambda: &WeightVector) -> Result<(Graph, WeightVector)> {
        if lambda.get(v) < 2 {
            return Err(Error::NothingToSplit(v + 1));
        }
        let mut edges = self.edges.clone();
        for &(a, b) in &self.edges {
            if a == v {
                edges.push((b, self.d));
            } else if b == v {
                edges.push((a, self.d));
            }
        }
        let mut weights = lambda.weights().to_vec();
        weights[v] -= 1;
        weights.push(1);
        Ok((Graph::new(self.d + 1, edges), WeightVector::new(weights)?))
    }

    /// The addition graph at v: the expansion graph plus the edge {v', v''}.
    pub fn add_vertex_edge(
        &self,
        v: usize,
        lambda: &WeightVector,
    ) -> Result<(Graph, WeightVector)> {
        let (g, w) = self.expand_vertex(v, lambda)?;
        let mut edges = g.edges.clone();
        edges.push((v, self.d));
        Ok((Graph::new(self.d + 1, edges), w))
    }

    /// Canonical text format: first line d, then one 1-indexed edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.d);
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }
}

fn norm(e: (usize, usize)) -> (usize, usize) {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

/// Positive integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<WeightVector> {
        if weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        Ok(WeightVector(weights))
    }

    /// All-ones weights on d vertices.
    pub fn unit(d: usize) -> WeightVector {
        WeightVector(vec![1; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }

    /// Lambda_W: the weight of a vertex subset.
    pub fn sum_over(&self, vertices: &[usize]) -> u64 {
        vertices.iter().map(|&v| self.0[v]).sum()
    }

    /// Lambda_V: the total weight.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Union-find over 0..d.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(d: usize) -> Dsu {
        Dsu {
            parent: (0..d).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so block minima are stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Blocks sorted by minimum element, members ascending.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let d = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); d];
        for v in 0..d {
            let r = self.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|b| !b.is_empty()).collect()
    }
}
