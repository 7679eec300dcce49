//! Acyclic orientations of a graph.

use crate::graphs::Graph;

/// An acyclic orientation: one direction bit per canonical edge, `true`
/// meaning the edge points from its lower to its higher endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    directions: Vec<bool>,
}

impl Orientation {
    /// Builds an orientation, verifying acyclicity.
    pub fn new(graph: Graph, directions: Vec<bool>) -> Option<Orientation> {
        assert_eq!(directions.len(), graph.edge_count());
        let o = Orientation { graph, directions };
        o.is_acyclic().then_some(o)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn directions(&self) -> &[bool] {
        &self.directions
    }

    /// Directed edges (source, target).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.directions)
            .map(|(&(a, b), &fwd)| if fwd { (a, b) } else { (b, a) })
    }

    fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let d = self.graph.vertex_count();
        let mut indeg = vec![0usize; d];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (s, t) in self.arcs() {
            indeg[t] += 1;
            out[s].push(t);
        }
        let mut stack: Vec<usize> = (0..d).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &t in &out[v] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == d
    }
}

/// All acyclic orientations, ordered lexicographically on the direction
/// bit-vector (edge 0 most significant).
pub fn acyclic_orientations(graph: &Graph) -> Vec<Orientation> {
    let m = graph.edge_count();
    assert!(m < 64, "too many edges for orientation enumeration");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let directions: Vec<bool> = (0..m).map(|k| mask >> (m - 1 - k) & 1 == 1).collect();
        if let Some(o) = Orientation::new(graph.clone(), directions) {
            out.push(o);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_small_cases() {
        // one edge: both directions acyclic
        assert_eq!(acyclic_orientations(&Graph::path(2)).len(), 2);
        // triangle: 8 orientations minus the 2 directed cycles
        assert_eq!(acyclic_orientations(&Graph::complete(3)).len(), 6);
        // edgeless graph: exactly the empty orientation
        assert_eq!(acyclic_orientations(&Graph::edgeless(3)).len(), 1);
    }

    #[test]
    fn every_tree_orientation_is_acyclic() {
        let t = Graph::path(4);
        assert_eq!(acyclic_orientations(&t).len(), 8);
    }

    #[test]
    fn order_is_lexicographic() {
        let os = acyclic_orientations(&Graph::path(3));
        let dirs: Vec<Vec<bool>> = os.iter().map(|o| o.directions().to_vec()).collect();
        let mut sorted = dirs.clone();
        sorted.sort();
        assert_eq!(dirs, sorted);
    }
}
