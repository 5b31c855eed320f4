use num_traits::NumCast;

use super::{Method, SpectralError, SpectralResult};
use crate::{Graph, Scalar};

pub const MAX_CHARPOLY_ORDER: usize = 12;

const BISECTION_WIDTH: f64 = 1e-13;

/// Exact characteristic polynomial `det(xI − A)`, coefficients in ascending
/// degree order (the last entry is the leading `1`).
///
/// Faddeev–LeVerrier: `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`.
/// Every division is exact over the integers.
pub fn characteristic_polynomial(g: &Graph) -> Result<Vec<i128>, SpectralError> {
    let n = g.order();
    if n > MAX_CHARPOLY_ORDER {
        return Err(SpectralError::UnsupportedSize { n, max: MAX_CHARPOLY_ORDER });
    }
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![0i128; n * n];
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1} I, reusing `am` = A·M_{k-1}
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = am[i * n + j];
            }
            m[i * n + i] += coeffs[n - k + 1];
        }
        for i in 0..n {
            for j in 0..n {
                am[i * n + j] = g.neighbors(i).iter().map(|&l| m[l * n + j]).sum();
            }
        }
        let trace: i128 = (0..n).map(|i| am[i * n + i]).sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    Ok(coeffs)
}

/// Largest root of the characteristic polynomial by bisection on
/// `[2m/n, d_max]`.
///
/// A point `x` lies at or above every root iff all Taylor coefficients of the
/// polynomial at `x` are non-negative (the polynomial is real-rooted), which
/// gives a bracket test that ignores the smaller eigenvalues.
pub fn spectral_radius_charpoly<T: Scalar>(g: &Graph) -> Result<SpectralResult<T>, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let coeffs = characteristic_polynomial(g)?;
    let n = g.order();
    let twice_m = 2 * g.size();
    let d_max = (0..n).map(|v| g.degree(v)).max().unwrap();
    if twice_m == n * d_max {
        return Ok(SpectralResult { rho: T::from_count(d_max), iterations: 0, residual: T::zero(), method: Method::Charpoly });
    }

    let coeffs: Vec<T> = coeffs.iter().map(|&c| T::from_int(c)).collect();
    let mut lo = T::from_count(twice_m) / T::from_count(n);
    let mut hi = T::from_count(d_max);
    let width = <T as NumCast>::from(BISECTION_WIDTH).unwrap().max(T::epsilon() * hi * T::from_count(4));
    let mut iterations = 0;
    while hi - lo > width {
        let mid = (lo + hi) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        if at_or_above_all_roots(&coeffs, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    Ok(SpectralResult { rho: (lo + hi) * T::half(), iterations, residual: hi - lo, method: Method::Charpoly })
}

/// Taylor coefficients at `x` by repeated synthetic division; all must be
/// non-negative.
fn at_or_above_all_roots<T: Scalar>(coeffs: &[T], x: T) -> bool {
    let mut work = coeffs.to_vec();
    let degree = work.len() - 1;
    for k in 0..degree {
        for i in (k..degree).rev() {
            let carried = work[i + 1] * x;
            work[i] = work[i] + carried;
        }
        if work[k] < T::zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_join_dominating, gen_named, Family};

    #[test]
    fn polynomials() {
        assert_eq!(characteristic_polynomial(&gen_named(Family::Complete, 3).unwrap()).unwrap(), vec![-2, -3, 0, 1]);
        assert_eq!(characteristic_polynomial(&gen_named(Family::Path, 3).unwrap()).unwrap(), vec![0, -2, 0, 1]);
        // C4: x^4 - 4x^2
        assert_eq!(characteristic_polynomial(&gen_named(Family::Cycle, 4).unwrap()).unwrap(), vec![0, 0, -4, 0, 1]);
        assert_eq!(characteristic_polynomial(&gen_named(Family::Path, 1).unwrap()).unwrap(), vec![0, 1]);
    }

    #[test]
    fn polynomial_matches_brute_force_determinant() {
        // det(xI - A) at integer points by permutation expansion
        fn det(mat: &[Vec<i128>]) -> i128 {
            let n = mat.len();
            if n == 1 {
                return mat[0][0];
            }
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i128>> =
                        mat[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * mat[0][j] * det(&minor)
                })
                .sum()
        }
        let g = gen_join_dominating(6, 2, 2).unwrap();
        let coeffs = characteristic_polynomial(&g).unwrap();
        for x in -3i128..=3 {
            let mat: Vec<Vec<i128>> = (0..6)
                .map(|i| (0..6).map(|j| if i == j { x } else if g.has_edge(i, j) { -1 } else { 0 }).collect())
                .collect();
            let horner = coeffs.iter().rev().fold(0i128, |acc, &c| acc * x + c);
            assert_eq!(horner, det(&mat));
        }
    }

    #[test]
    fn largest_roots() {
        let rho = |g: Graph| spectral_radius_charpoly::<f64>(&g).unwrap().rho;
        assert_eq!(rho(gen_named(Family::Complete, 3).unwrap()), 2.0);
        assert!((rho(gen_named(Family::Path, 3).unwrap()) - 2f64.sqrt()).abs() < 1e-12);
        let k4_minus_edge = gen_join_dominating(4, 3, 0).unwrap();
        assert!((rho(k4_minus_edge) - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(rho(gen_named(Family::Path, 1).unwrap()), 0.0);
    }

    #[test]
    fn twelve_vertices_supported() {
        let r = spectral_radius_charpoly::<f64>(&gen_named(Family::Path, 12).unwrap()).unwrap();
        assert!((r.rho - 2.0 * (std::f64::consts::PI / 13.0).cos()).abs() < 1e-11);
        assert!(r.residual <= 1e-13);
        let k12 = gen_named(Family::Complete, 12).unwrap();
        assert_eq!(spectral_radius_charpoly::<f64>(&k12).unwrap().rho, 11.0);
    }

    #[test]
    fn errors() {
        let p13 = gen_named(Family::Path, 13).unwrap();
        assert_eq!(spectral_radius_charpoly::<f64>(&p13), Err(SpectralError::UnsupportedSize { n: 13, max: 12 }));
        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(spectral_radius_charpoly::<f64>(&disconnected), Err(SpectralError::Disconnected));
    }
}
