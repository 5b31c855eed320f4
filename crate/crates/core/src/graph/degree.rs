use super::{Graph, GraphError};

/// Degrees sorted non-increasing, with cached prefix sums.
///
/// `prefix[k]` is the sum of the `k` largest degrees, so `prefix[0] == 0` and
/// `prefix[n] == 2m`. Levels in the public API are 1-based to match the usual
/// `d_1 >= ... >= d_n` indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    prefix: Vec<u64>,
}

impl DegreeSequence {
    /// Sorts `degrees` non-increasing. The sum must be even.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, GraphError> {
        if degrees.is_empty() {
            return Err(GraphError::Empty);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let seq = Self::from_sorted(degrees);
        if seq.total() % 2 == 1 {
            return Err(GraphError::OddDegreeSum(seq.total()));
        }
        Ok(seq)
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(degrees)
    }

    fn from_sorted(degrees: Vec<usize>) -> Self {
        let mut prefix = Vec::with_capacity(degrees.len() + 1);
        prefix.push(0u64);
        let mut acc = 0u64;
        for &d in &degrees {
            acc += d as u64;
            prefix.push(acc);
        }
        Self { degrees, prefix }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Edge count `m`.
    pub fn edges(&self) -> u64 {
        self.total() / 2
    }

    fn total(&self) -> u64 {
        *self.prefix.last().unwrap()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `d_level`, 1-based.
    pub fn degree(&self, level: usize) -> usize {
        self.degrees[level - 1]
    }

    /// Sum of the `k` largest degrees.
    pub fn prefix(&self, k: usize) -> u64 {
        self.prefix[k]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees[0]
    }

    pub fn min_degree(&self) -> usize {
        *self.degrees.last().unwrap()
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn is_graphical(&self) -> bool {
        is_graphical(&self.degrees)
    }
}

/// Erdős–Gallai test. `degrees` need not be sorted.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().map(|&x| x as u64).sum::<u64>() % 2 == 1 {
        return false;
    }
    if d.first().is_some_and(|&top| top >= n) {
        return false;
    }
    let mut lhs = 0u64;
    for k in 1..=n {
        lhs += d[k - 1] as u64;
        let rhs = (k * (k - 1)) as u64 + d[k..].iter().map(|&x| x.min(k) as u64).sum::<u64>();
        if lhs > rhs {
            return false;
        }
    }
    true
}
