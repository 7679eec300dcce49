//! Descent statistics aggregated over all pairs of an acyclic orientation
//! and a linear extension of its induced poset.
//!
//! Every permutation of V is a linear extension of exactly one acyclic
//! orientation, so the pair count is always d!. The statistics are computed
//! in each poset's natural labeling.

use crate::graphs::{acyclic_orientations, for_each_linear_extension, poset_of, Graph};

/// Histograms over all (orientation, extension) pairs, indexed by statistic
/// value. All counts are exact.
#[derive(Clone, Debug)]
pub struct DescentData {
    pub d: usize,
    /// `des_comaj[des][comaj]` = number of pairs with those statistics.
    pub des_comaj: Vec<Vec<u64>>,
    /// `maj[k]` = number of pairs with maj = k.
    pub maj: Vec<u64>,
    /// `maj_op[k]` = number of pairs whose reversed word has maj = k.
    pub maj_op: Vec<u64>,
    /// Total number of pairs (= d!).
    pub pairs: u64,
}

/// One pass over all (orientation, extension) pairs.
pub fn descent_data(graph: &Graph) -> DescentData {
    let d = graph.vertex_count();
    let top = if d == 0 { 0 } else { d * (d - 1) / 2 };
    let mut data = DescentData {
        d,
        des_comaj: vec![vec![0; top + 1]; d.max(1)],
        maj: vec![0; top + 1],
        maj_op: vec![0; top + 1],
        pairs: 0,
    };
    for orientation in acyclic_orientations(graph) {
        let poset = poset_of(&orientation);
        for_each_linear_extension(&poset, |perm| {
            let mut des = 0usize;
            let mut maj = 0usize;
            let mut comaj = 0usize;
            let mut maj_op = 0usize;
            for j in 1..d {
                if perm[j] < perm[j - 1] {
                    des += 1;
                    maj += j;
                    comaj += d - j;
                } else {
                    // ascent at position j is a descent of the reversed word
                    // at position d - j
                    maj_op += d - j;
                }
            }
            data.des_comaj[des][comaj] += 1;
            data.maj[maj] += 1;
            data.maj_op[maj_op] += 1;
            data.pairs += 1;
        });
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_count_is_d_factorial() {
        for g in [
            Graph::path(4),
            Graph::star(5),
            Graph::complete(4),
            Graph::edgeless(3),
        ] {
            let d = g.vertex_count();
            let data = descent_data(&g);
            assert_eq!(data.pairs, (1..=d as u64).product::<u64>());
        }
    }

    #[test]
    fn p2_histograms() {
        // two pairs, both the identity extension: maj 0, maj of reverse 1
        let data = descent_data(&Graph::path(2));
        assert_eq!(data.maj[0], 2);
        assert_eq!(data.maj_op[1], 2);
        assert_eq!(data.des_comaj[0][0], 2);
    }
}
