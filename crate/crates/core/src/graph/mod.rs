//! Simple undirected graphs, their degree sequences, and the ways to obtain them:
//! graph6 and edge-list parsing, named and equality-family generators, and
//! exhaustive enumeration of small connected labeled graphs.

mod degree;
mod edgelist;
mod enumerate;
mod generate;
mod graph6;

pub use degree::{is_graphical, DegreeSequence};
pub use edgelist::{parse_edge_list, parse_edge_list_corpus};
pub use enumerate::{
    connected_by_union_find, edge_pairs, enumerate_connected, ConnectedGraphs, MAX_ENUMERATION_ORDER,
    MAX_ENUMERATION_ORDER_OVERRIDE,
};
pub use generate::{gen_join_dominating, gen_named, Family};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("{family} requires n >= {min}, got {n}")]
    FamilyTooSmall { family: &'static str, min: usize, n: usize },
    #[error("invalid join parameters n={n}, t={t}, r={r}: {reason}")]
    JoinParameters { n: usize, t: usize, r: usize, reason: &'static str },
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },
    #[error("degree sequence has odd sum {0}")]
    OddDegreeSum(u64),
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted and free of duplicates and self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw(adjacency))
    }

    /// Builds the graph whose edge `k` (in graph6 bit order, see [`edge_pairs`])
    /// is present iff bit `k` of `mask` is set.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n >= 1, "graph must have at least one vertex");
        let mut adjacency = vec![Vec::new(); n];
        for (k, (u, v)) in edge_pairs(n).enumerate() {
            if mask >> k & 1 == 1 {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        Self::from_raw(adjacency)
    }

    fn from_raw(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut twice_edges = 0;
        for neighbours in &mut adjacency {
            neighbours.sort_unstable();
            neighbours.dedup();
            twice_edges += neighbours.len();
        }
        Self { adjacency, edge_count: twice_edges / 2 }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_graph(self)
    }

    /// Breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// Vertices ordered by non-increasing degree, ties broken by original label.
    pub fn degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        order
    }

    /// Graph with vertex `order[i]` renamed to `i`.
    pub fn relabel(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.order(), "relabeling must be a permutation");
        let mut position = vec![usize::MAX; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let adjacency = order
            .iter()
            .map(|&old| self.adjacency[old].iter().map(|&w| position[w]).collect())
            .collect();
        Self::from_raw(adjacency)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}
