//! When is `ρ(G) = φ_ℓ`? Exactly when `G` is regular, or when the `t − 1`
//! largest degrees equal `n − 1` and all remaining degrees equal `d_n` for some
//! `2 <= t <= ℓ`. The structural test is exact; the numeric test exists to
//! cross-check it.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::PhiSequence;
use crate::spectral::{spectral_radius_power, PowerOptions, SpectralError};
use crate::{DegreeSequence, Graph, Scalar};

pub const DEFAULT_EQUALITY_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EqualityError {
    #[error("equality classification needs at least two vertices, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "t")]
pub enum CertificateKind {
    Regular,
    /// `d_1 = ... = d_{t−1} = n − 1 > d_t = ... = d_n`.
    Dominating(usize),
    None,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::Regular => f.write_str("regular"),
            CertificateKind::Dominating(_) => f.write_str("dominating"),
            CertificateKind::None => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityCertificate {
    #[serde(flatten)]
    pub kind: CertificateKind,
    /// Levels `ℓ` (1-based) at which `φ_ℓ = ρ`.
    pub predicted_tight_levels: Vec<usize>,
}

impl EqualityCertificate {
    pub fn t(&self) -> Option<usize> {
        match self.kind {
            CertificateKind::Dominating(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_tight_at(&self, level: usize) -> bool {
        self.predicted_tight_levels.binary_search(&level).is_ok()
    }
}

/// `t` is the maximal valid choice, one more than the number of degrees equal
/// to `n − 1`; it is also the only one when the sequence is not regular.
pub fn classify_equality(seq: &DegreeSequence) -> Result<EqualityCertificate, EqualityError> {
    let n = seq.len();
    if n < 2 {
        return Err(EqualityError::TooSmall(n));
    }
    if seq.is_regular() {
        return Ok(EqualityCertificate { kind: CertificateKind::Regular, predicted_tight_levels: (1..=n).collect() });
    }
    let dominating = seq.degrees().iter().take_while(|&&d| d == n - 1).count();
    let t = dominating + 1;
    if dominating >= 1 && seq.degree(t) == seq.min_degree() {
        debug_assert!(seq.degree(t - 1) > seq.degree(t));
        return Ok(EqualityCertificate { kind: CertificateKind::Dominating(t), predicted_tight_levels: (t..=n).collect() });
    }
    Ok(EqualityCertificate { kind: CertificateKind::None, predicted_tight_levels: Vec::new() })
}

/// Levels where `|φ_ℓ − ρ| <= tol`, with `ρ` from power iteration.
pub fn check_equality_numeric<T: Scalar>(g: &Graph, tol: T) -> Result<Vec<usize>, EqualityError> {
    let rho = spectral_radius_power(g, &PowerOptions::<T>::default())?.rho;
    Ok(tight_levels(&PhiSequence::new(&g.degree_sequence()), rho, tol))
}

/// Levels of `phis` within `tol` of `rho`.
pub fn tight_levels<T: Scalar>(phis: &PhiSequence<T>, rho: T, tol: T) -> Vec<usize> {
    phis.values
        .iter()
        .enumerate()
        .filter(|&(_, &v)| (v - rho).abs() <= tol)
        .map(|(i, _)| i + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_join_dominating, gen_named, Family};

    fn classify(d: &[usize]) -> EqualityCertificate {
        classify_equality(&DegreeSequence::new(d.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn structural_examples() {
        let c5 = classify(&[2; 5]);
        assert_eq!(c5.kind, CertificateKind::Regular);
        assert_eq!(c5.predicted_tight_levels, vec![1, 2, 3, 4, 5]);

        let star = classify(&[3, 1, 1, 1]);
        assert_eq!(star.kind, CertificateKind::Dominating(2));
        assert_eq!(star.predicted_tight_levels, vec![2, 3, 4]);

        let k4e = classify(&[3, 3, 2, 2]);
        assert_eq!(k4e.kind, CertificateKind::Dominating(3));
        assert_eq!(k4e.t(), Some(3));
        assert_eq!(k4e.predicted_tight_levels, vec![3, 4]);

        let p6 = classify(&[2, 2, 2, 2, 1, 1]);
        assert_eq!(p6.kind, CertificateKind::None);
        assert!(p6.predicted_tight_levels.is_empty());

        // dominating vertex but the rest is not uniform
        assert_eq!(classify(&[3, 2, 2, 1]).kind, CertificateKind::None);
    }

    #[test]
    fn serialized_form() {
        let json = serde_json::to_string(&classify(&[3, 1, 1, 1])).unwrap();
        assert_eq!(json, r#"{"kind":"Dominating","t":2,"predicted_tight_levels":[2,3,4]}"#);
        let json = serde_json::to_string(&classify(&[2; 3])).unwrap();
        assert_eq!(json, r#"{"kind":"Regular","predicted_tight_levels":[1,2,3]}"#);
    }

    #[test]
    fn too_small() {
        let k1 = DegreeSequence::new(vec![0]).unwrap();
        assert_eq!(classify_equality(&k1), Err(EqualityError::TooSmall(1)));
    }

    #[test]
    fn numeric_examples() {
        let k5 = gen_named(Family::Complete, 5).unwrap();
        assert_eq!(check_equality_numeric(&k5, DEFAULT_EQUALITY_TOL).unwrap(), vec![1, 2, 3, 4, 5]);
        let p6 = gen_named(Family::Path, 6).unwrap();
        assert!(check_equality_numeric(&p6, DEFAULT_EQUALITY_TOL).unwrap().is_empty());
        let star = gen_named(Family::Star, 4).unwrap();
        assert_eq!(check_equality_numeric(&star, DEFAULT_EQUALITY_TOL).unwrap(), vec![2, 3, 4]);
        let k4e = gen_join_dominating(4, 3, 0).unwrap();
        assert_eq!(check_equality_numeric(&k4e, DEFAULT_EQUALITY_TOL).unwrap(), vec![3, 4]);
    }

    #[test]
    fn join_family_classifies_with_same_t() {
        for n in 2..=10 {
            for t in 2..=n {
                for r in 0..=n - t {
                    let Ok(g) = gen_join_dominating(n, t, r) else { continue };
                    let cert = classify_equality(&g.degree_sequence()).unwrap();
                    let regular = r + t - 1 == n - 1;
                    let expected = if regular { CertificateKind::Regular } else { CertificateKind::Dominating(t) };
                    assert_eq!(cert.kind, expected, "n={n} t={t} r={r}");
                    assert_eq!(check_equality_numeric(&g, DEFAULT_EQUALITY_TOL).unwrap(), cert.predicted_tight_levels);
                }
            }
        }
    }
}
