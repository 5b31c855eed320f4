//! Executable form of the diagonal-scaling argument: with vertices in
//! non-increasing degree order, `U = diag(x_1, ..., x_{ℓ−1}, 1, ..., 1)` and
//! `x_i = 1 + (d_i − d_ℓ)/(φ_ℓ + 1)`, every row sum of `U⁻¹AU` is at most
//! `φ_ℓ`. Since `U⁻¹AU` is similar to `A`, the row-sum bound then caps `ρ`.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{phi, BoundsError};
use crate::{DegreeSequence, Graph, Scalar};

pub const DEFAULT_REPLAY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReplayError {
    #[error(transparent)]
    Level(#[from] BoundsError),
    #[error("graph is not connected")]
    Disconnected,
    #[error("row {row} of the scaled matrix sums to {row_sum}, above phi = {phi}")]
    CertificateViolation { row: usize, row_sum: f64, phi: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingCertificate<T> {
    pub level: usize,
    /// `x_1..x_{ℓ−1}`.
    pub x: Vec<T>,
    /// Row sums of `U⁻¹AU`, indexed by position in degree order.
    pub row_sums: Vec<T>,
    /// Original vertex label of each row.
    pub vertex_order: Vec<usize>,
    pub phi: T,
    pub max_row_sum: T,
}

pub fn scaling_vector<T: Scalar>(seq: &DegreeSequence, level: usize) -> Result<Vec<T>, BoundsError> {
    let phi_l: T = phi(seq, level)?;
    let d_l = seq.degree(level);
    Ok((1..level).map(|i| T::one() + T::from_count(seq.degree(i) - d_l) / (phi_l + T::one())).collect())
}

/// Row sums of `U⁻¹AU` accumulated over neighbour lists, checked against
/// `φ_ℓ + tol`.
pub fn row_sums_scaled<T: Scalar>(g: &Graph, level: usize, tol: T) -> Result<ScalingCertificate<T>, ReplayError> {
    if !g.is_connected() {
        return Err(ReplayError::Disconnected);
    }
    let seq = g.degree_sequence();
    let x: Vec<T> = scaling_vector(&seq, level)?;
    let phi_l: T = phi(&seq, level)?;

    let order = g.degree_order();
    let sorted = g.relabel(&order);
    let scale = |v: usize| if v + 1 < level { x[v] } else { T::one() };

    let row_sums: Vec<T> = (0..sorted.order())
        .map(|i| sorted.neighbors(i).iter().fold(T::zero(), |acc, &k| acc + scale(k)) / scale(i))
        .collect();

    let mut max_row_sum = T::neg_infinity();
    for (row, &r) in row_sums.iter().enumerate() {
        if r > phi_l + tol {
            return Err(ReplayError::CertificateViolation {
                row,
                row_sum: r.to_f64().unwrap_or(f64::NAN),
                phi: phi_l.to_f64().unwrap_or(f64::NAN),
            });
        }
        max_row_sum = max_row_sum.max(r);
    }
    Ok(ScalingCertificate { level, x, row_sums, vertex_order: order, phi: phi_l, max_row_sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_named, Family};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn scaling_vectors() {
        let regular = DegreeSequence::new(vec![3; 6]).unwrap();
        assert!(scaling_vector::<f64>(&regular, 4).unwrap().iter().all(|&x| x == 1.0));

        let star = DegreeSequence::new(vec![3, 1, 1, 1]).unwrap();
        let x = scaling_vector::<f64>(&star, 2).unwrap();
        assert_eq!(x.len(), 1);
        assert!(close(x[0], 3f64.sqrt()));

        let worked = DegreeSequence::new(vec![4, 3, 3, 2, 1, 1]).unwrap();
        assert_eq!(scaling_vector::<f64>(&worked, 4).unwrap(), vec![1.5, 1.25, 1.25]);
        assert!(scaling_vector::<f64>(&worked, 1).unwrap().is_empty());
        assert!(scaling_vector::<f64>(&worked, 7).is_err());
    }

    #[test]
    fn complete_graph_rows() {
        let k4 = gen_named(Family::Complete, 4).unwrap();
        for level in 1..=4 {
            let cert = row_sums_scaled::<f64>(&k4, level, DEFAULT_REPLAY_TOL).unwrap();
            assert!(cert.row_sums.iter().all(|&r| r == 3.0));
        }
    }

    #[test]
    fn star_rows_all_meet_the_bound() {
        let star = gen_named(Family::Star, 4).unwrap();
        let cert = row_sums_scaled::<f64>(&star, 2, DEFAULT_REPLAY_TOL).unwrap();
        assert!(cert.row_sums.iter().all(|&r| close(r, 3f64.sqrt())));
        assert!(close(cert.phi, 3f64.sqrt()));
    }

    #[test]
    fn path_has_slack() {
        let p6 = gen_named(Family::Path, 6).unwrap();
        let cert = row_sums_scaled::<f64>(&p6, 4, DEFAULT_REPLAY_TOL).unwrap();
        assert_eq!(cert.phi, 2.0);
        assert!(cert.max_row_sum <= 2.0 + 1e-9);
        assert!(cert.row_sums.iter().any(|&r| r < 2.0 - 1e-3));
        // vertices 1..4 come first, the two leaves last
        assert_eq!(cert.vertex_order, vec![1, 2, 3, 4, 0, 5]);
    }

    #[test]
    fn violation_is_reported() {
        // negative tolerance forces every tight row to count as a violation
        let k3 = gen_named(Family::Complete, 3).unwrap();
        match row_sums_scaled::<f64>(&k3, 2, -1e-3) {
            Err(ReplayError::CertificateViolation { row: 0, .. }) => {}
            other => panic!("expected violation, got {other:?}"),
        }
        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(row_sums_scaled::<f64>(&disconnected, 1, 1e-9), Err(ReplayError::Disconnected));
    }
}
