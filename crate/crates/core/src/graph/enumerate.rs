use super::{Graph, GraphError};

/// Default upper limit for exhaustive enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Upper limit when the caller explicitly opts into the larger run.
pub const MAX_ENUMERATION_ORDER_OVERRIDE: usize = 8;

/// Vertex pairs `(u, v)`, `u < v`, in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn edge_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

/// Every connected labeled graph on `n` vertices, in increasing edge-bitmask order.
pub fn enumerate_connected(n: usize, allow_large: bool) -> Result<ConnectedGraphs, GraphError> {
    let max = if allow_large { MAX_ENUMERATION_ORDER_OVERRIDE } else { MAX_ENUMERATION_ORDER };
    if n == 0 || n > max {
        return Err(GraphError::EnumerationRange { n, max });
    }
    Ok(ConnectedGraphs::new(n, 0..1u64 << (n * (n - 1) / 2)))
}

/// Stream of connected graphs over a range of edge bitmasks.
///
/// Disjoint mask ranges partition the enumeration, so callers may split the
/// full range across workers.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    masks: std::ops::Range<u64>,
}

impl ConnectedGraphs {
    pub fn new(n: usize, masks: std::ops::Range<u64>) -> Self {
        assert!((1..=MAX_ENUMERATION_ORDER_OVERRIDE).contains(&n));
        Self { n, pairs: edge_pairs(n).collect(), masks }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Remaining mask range.
    pub fn masks(&self) -> std::ops::Range<u64> {
        self.masks.clone()
    }

    fn rows(&self, mask: u64) -> [u16; MAX_ENUMERATION_ORDER_OVERRIDE] {
        let mut rows = [0u16; MAX_ENUMERATION_ORDER_OVERRIDE];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        rows
    }

    fn mask_connected(&self, mask: u64) -> bool {
        let rows = self.rows(mask);
        let all = (1u16 << self.n) - 1;
        let mut reached = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == all
    }
}

impl Iterator for ConnectedGraphs {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(mask) = self.masks.next() {
            if self.mask_connected(mask) {
                return Some((mask, Graph::from_edge_mask(self.n, mask)));
            }
        }
        None
    }
}

/// Connectivity by union-find over the edge list; independent of the search
/// routines used elsewhere.
pub fn connected_by_union_find(g: &Graph) -> bool {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut components = n;
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(n: usize) -> usize {
        (0..1u64 << (n * (n - 1) / 2))
            .filter(|&mask| connected_by_union_find(&Graph::from_edge_mask(n, mask)))
            .count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_connected(2, false).unwrap().count(), 1);
        assert_eq!(enumerate_connected(3, false).unwrap().count(), brute_force_count(3));
        assert_eq!(brute_force_count(3), 4);
        assert_eq!(enumerate_connected(4, false).unwrap().count(), brute_force_count(4));
        assert_eq!(brute_force_count(4), 38);
    }

    #[test]
    fn counts_match_union_find_pass() {
        for n in 5..=6 {
            let listed: Vec<_> = enumerate_connected(n, false).unwrap().collect();
            assert_eq!(listed.len(), brute_force_count(n));
            assert!(listed.iter().all(|(_, g)| g.is_connected()));
            assert!(listed.windows(2).all(|w| w[0].0 < w[1].0));
        }
        assert_eq!(brute_force_count(5), 728);
    }

    #[test]
    fn range_guard() {
        assert!(enumerate_connected(0, false).is_err());
        assert!(matches!(enumerate_connected(8, false), Err(GraphError::EnumerationRange { max: 7, .. })));
        assert!(enumerate_connected(8, true).is_ok());
        assert!(enumerate_connected(9, true).is_err());
    }

    #[test]
    fn partitioned_ranges_cover_the_stream() {
        let whole: Vec<u64> = enumerate_connected(5, false).unwrap().map(|(m, _)| m).collect();
        let mut split: Vec<u64> = ConnectedGraphs::new(5, 0..300).map(|(m, _)| m).collect();
        split.extend(ConnectedGraphs::new(5, 300..1024).map(|(m, _)| m));
        assert_eq!(whole, split);
    }

    #[test]
    fn edge_order_matches_graph6() {
        let pairs: Vec<_> = edge_pairs(4).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
    }
}
