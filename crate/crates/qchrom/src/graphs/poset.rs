//! Posets induced by acyclic orientations, natural labelings, and linear
//! extensions with their descent statistics.

use crate::graphs::Orientation;

/// A finite poset on elements 0..d with a transitively closed strict order,
/// together with a fixed natural labeling (an order-preserving bijection onto
/// 0..d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    d: usize,
    /// Row-major strict-order matrix: `less[i * d + j]` iff element i < element j.
    less: Vec<bool>,
    /// `labels[element] = natural label` (0-based).
    labels: Vec<usize>,
}

impl Poset {
    /// Builds a poset from an explicit strict-order relation, taking the
    /// transitive closure. Panics on a cyclic relation.
    pub fn from_relations(d: usize, relations: &[(usize, usize)]) -> Poset {
        let mut less = vec![false; d * d];
        for &(a, b) in relations {
            less[a * d + b] = true;
        }
        // Warshall closure
        for k in 0..d {
            for i in 0..d {
                if less[i * d + k] {
                    for j in 0..d {
                        if less[k * d + j] {
                            less[i * d + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..d {
            assert!(!less[i * d + i], "relation has a cycle through {i}");
        }
        let labels = natural_labeling(d, &less);
        Poset { d, less, labels }
    }

    /// The antichain on d elements.
    pub fn antichain(d: usize) -> Poset {
        Poset::from_relations(d, &[])
    }

    /// The chain 0 < 1 < ... < d-1.
    pub fn chain(d: usize) -> Poset {
        let rels: Vec<(usize, usize)> = (1..d).map(|i| (i - 1, i)).collect();
        Poset::from_relations(d, &rels)
    }

    pub fn size(&self) -> usize {
        self.d
    }

    /// Strict comparison of elements (original indices).
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a * self.d + b]
    }

    /// The natural label of an element.
    pub fn label(&self, element: usize) -> usize {
        self.labels[element]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Strict order transported to label space.
    pub fn label_lt(&self, a: usize, b: usize) -> bool {
        let inv = self.inverse_labels();
        self.lt(inv[a], inv[b])
    }

    fn inverse_labels(&self) -> Vec<usize> {
        let mut inv = vec![0; self.d];
        for (el, &lab) in self.labels.iter().enumerate() {
            inv[lab] = el;
        }
        inv
    }

    /// Predecessor bitmasks in label space: bit b of `masks[a]` is set iff
    /// label b must appear before label a in every linear extension.
    pub(crate) fn predecessor_masks(&self) -> Vec<u32> {
        assert!(self.d <= 32, "poset too large for mask-based enumeration");
        let inv = self.inverse_labels();
        let mut masks = vec![0u32; self.d];
        for a in 0..self.d {
            for b in 0..self.d {
                if self.lt(inv[b], inv[a]) {
                    masks[a] |= 1 << b;
                }
            }
        }
        masks
    }
}

/// Topological order emitting the smallest available original index first;
/// the k-th emitted element receives label k.
fn natural_labeling(d: usize, less: &[bool]) -> Vec<usize> {
    // cover-or-closure both work: use the full closure's in-degrees
    let mut remaining: Vec<bool> = vec![true; d];
    let mut labels = vec![0usize; d];
    for next_label in 0..d {
        let mut pick = usize::MAX;
        'candidates: for v in 0..d {
            if !remaining[v] {
                continue;
            }
            for u in 0..d {
                if remaining[u] && less[u * d + v] {
                    continue 'candidates;
                }
            }
            pick = v;
            break;
        }
        assert!(pick != usize::MAX, "cyclic relation");
        labels[pick] = next_label;
        remaining[pick] = false;
    }
    labels
}

/// The poset induced by an acyclic orientation: the transitive closure of its
/// arcs, with the smallest-available-vertex natural labeling.
pub fn poset_of(orientation: &Orientation) -> Poset {
    let d = orientation.graph().vertex_count();
    let arcs: Vec<(usize, usize)> = orientation.arcs().collect();
    Poset::from_relations(d, &arcs)
}

/// A linear extension recorded as a permutation in the natural labeling,
/// with its descent statistics.
///
/// `Des = { j in 1..d : perm[j+1] < perm[j] }` (positions 1-based),
/// `maj = sum of Des`, `comaj = sum of (d - j) over Des`, `asc = d - 1 - des`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    pub perm: Vec<usize>,
    pub descent_set: Vec<usize>,
    pub des: usize,
    pub asc: usize,
    pub maj: usize,
    pub comaj: usize,
}

impl LinearExtension {
    pub fn from_perm(perm: Vec<usize>) -> LinearExtension {
        let d = perm.len();
        let descent_set: Vec<usize> = (1..d).filter(|&j| perm[j] < perm[j - 1]).collect();
        let des = descent_set.len();
        let maj = descent_set.iter().sum();
        let comaj = descent_set.iter().map(|j| d - j).sum();
        LinearExtension {
            perm,
            descent_set,
            des,
            asc: d.saturating_sub(1) - des,
            maj,
            comaj,
        }
    }

    /// maj of the reversed word sigma-op, sigma-op(j) = sigma(d+1-j).
    pub fn maj_op(&self) -> usize {
        let d = self.perm.len();
        (1..d)
            .filter(|&j| self.perm[d - 1 - j] < self.perm[d - j])
            .sum()
    }
}

/// Visits every linear extension of the poset in lexicographic order
/// (as permutations in the natural labeling).
pub fn for_each_linear_extension<F: FnMut(&[usize])>(poset: &Poset, mut f: F) {
    let d = poset.size();
    if d == 0 {
        f(&[]);
        return;
    }
    let preds = poset.predecessor_masks();
    let mut perm = Vec::with_capacity(d);
    let full: u32 = if d == 32 { u32::MAX } else { (1 << d) - 1 };
    fn rec<F: FnMut(&[usize])>(
        preds: &[u32],
        full: u32,
        placed: u32,
        perm: &mut Vec<usize>,
        f: &mut F,
    ) {
        if placed == full {
            f(perm);
            return;
        }
        let d = preds.len();
        for label in 0..d {
            let bit = 1u32 << label;
            if placed & bit == 0 && preds[label] & !placed == 0 {
                perm.push(label);
                rec(preds, full, placed | bit, perm, f);
                perm.pop();
            }
        }
    }
    rec(&preds, full, 0, &mut perm, &mut f);
}

/// All linear extensions with statistics, lexicographic order.
pub fn linear_extensions(poset: &Poset) -> Vec<LinearExtension> {
    let mut out = Vec::new();
    for_each_linear_extension(poset, |perm| {
        out.push(LinearExtension::from_perm(perm.to_vec()));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{acyclic_orientations, Graph};

    #[test]
    fn poset_of_oriented_edge() {
        let t = Graph::path(2);
        let os = acyclic_orientations(&t);
        // second orientation in lex order is 0 -> 1
        let chain = poset_of(&os[1]);
        assert!(chain.lt(0, 1));
        assert!(!chain.lt(1, 0));
        assert_eq!(chain.labels(), &[0, 1]);
    }

    #[test]
    fn transitive_closure_of_oriented_triangle() {
        // K3 oriented 0->1, 0->2, 1->2 is a 3-chain; closure adds 0 < 2
        let k3 = Graph::complete(3);
        let o = Orientation::new(k3, vec![true, true, true]).unwrap();
        let p = poset_of(&o);
        assert!(p.lt(0, 2));
        assert_eq!(linear_extensions(&p).len(), 1);
    }

    #[test]
    fn star_poset_extensions() {
        // center 0 below leaves 1, 2: two extensions [0,1,2] and [0,2,1]
        let s = Graph::star(3);
        let o = Orientation::new(s, vec![true, true]).unwrap();
        let p = poset_of(&o);
        let exts = linear_extensions(&p);
        assert_eq!(exts.len(), 2);
        assert_eq!(exts[0].perm, vec![0, 1, 2]);
        assert_eq!(exts[0].des, 0);
        assert_eq!(exts[0].maj, 0);
        assert_eq!(exts[0].comaj, 0);
        assert_eq!(exts[1].perm, vec![0, 2, 1]);
        assert_eq!(exts[1].descent_set, vec![2]);
        assert_eq!(exts[1].maj, 2);
        assert_eq!(exts[1].comaj, 1);
    }

    #[test]
    fn antichain_statistics() {
        let exts = linear_extensions(&Poset::antichain(2));
        assert_eq!(exts.len(), 2);
        assert_eq!((exts[0].des, exts[0].maj, exts[0].comaj), (0, 0, 0));
        assert_eq!((exts[1].des, exts[1].maj, exts[1].comaj), (1, 1, 1));
    }

    #[test]
    fn chain_has_single_extension() {
        let exts = linear_extensions(&Poset::chain(3));
        assert_eq!(exts.len(), 1);
        assert_eq!(exts[0].perm, vec![0, 1, 2]);
    }

    #[test]
    fn stats_identities_over_all_pairs() {
        // asc + des = d - 1 and maj + comaj = d * des for every extension of
        // every orientation-induced poset of a few graphs
        for g in [Graph::path(4), Graph::star(4), Graph::complete(4)] {
            let d = g.vertex_count();
            let mut total = 0usize;
            for o in acyclic_orientations(&g) {
                let p = poset_of(&o);
                for e in linear_extensions(&p) {
                    assert_eq!(e.asc + e.des, d - 1);
                    assert_eq!(e.maj + e.comaj, d * e.des);
                    // the word respects the order: a below b appears earlier
                    for i in 0..d {
                        for j in i + 1..d {
                            assert!(!p.label_lt(e.perm[j], e.perm[i]));
                        }
                    }
                    total += 1;
                }
            }
            // every permutation of V is a linear extension of exactly one
            // acyclic orientation
            assert_eq!(total, (1..=d).product::<usize>());
        }
    }

    #[test]
    fn natural_labeling_is_order_preserving() {
        for g in [Graph::path(4), Graph::complete(4)] {
            for o in acyclic_orientations(&g) {
                let p = poset_of(&o);
                for a in 0..p.size() {
                    for b in 0..p.size() {
                        if p.lt(a, b) {
                            assert!(p.label(a) < p.label(b));
                        }
                    }
                }
            }
        }
    }
}
