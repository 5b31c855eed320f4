use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
}

impl Family {
    fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            other => Err(format!("unknown graph family {other:?}")),
        }
    }
}

/// Paths and cycles follow index order; the star is centred at 0.
pub fn gen_named(family: Family, n: usize) -> Result<Graph, GraphError> {
    if n < family.min_order() {
        return Err(GraphError::FamilyTooSmall { family: family.name(), min: family.min_order(), n });
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
    };
    Graph::new(n, edges)
}

/// Join of `K_{t-1}` (vertices `0..t-1`) with an `r`-regular circulant on the
/// remaining `n - t + 1` vertices.
///
/// The circulant links `i` to `i ± 1, ..., i ± ⌊r/2⌋` and, for odd `r`, to the
/// antipodal vertex. Sorted degrees come out as `t - 1` copies of `n - 1`
/// followed by `n - t + 1` copies of `r + t - 1`.
pub fn gen_join_dominating(n: usize, t: usize, r: usize) -> Result<Graph, GraphError> {
    let bad = |reason| Err(GraphError::JoinParameters { n, t, r, reason });
    if t < 2 || t > n {
        return bad("t must satisfy 2 <= t <= n");
    }
    if r > n - t {
        return bad("r must satisfy r <= n - t");
    }
    let h = n - t + 1;
    if r * h % 2 == 1 {
        return bad("no r-regular graph exists on an odd number of vertices for odd r");
    }

    let core = t - 1;
    let mut edges = Vec::new();
    for u in 0..core {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for i in 0..h {
        for offset in 1..=r / 2 {
            edges.push((core + i, core + (i + offset) % h));
        }
        if r % 2 == 1 && i < h / 2 {
            edges.push((core + i, core + i + h / 2));
        }
    }
    let g = Graph::new(n, edges)?;
    debug_assert!((0..n).all(|v| g.degree(v) == if v < core { n - 1 } else { r + t - 1 }));
    Ok(g)
}
