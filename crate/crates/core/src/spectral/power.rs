use num_traits::NumCast;

use super::{Method, SpectralError, SpectralResult};
use crate::{Graph, Scalar};

pub const DEFAULT_POWER_TOL: f64 = 1e-12;
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions<T> {
    /// Stop once successive Rayleigh quotients differ by less than this.
    pub tol: T,
    /// Required bound on `‖Av − ρv‖∞ / ‖v‖∞` at the returned vector.
    pub residual_tol: T,
    pub max_iterations: usize,
}

impl<T: Scalar> Default for PowerOptions<T> {
    /// `1e-12` / `1e-9` in `f64`; floored at a few ulps for narrower types.
    fn default() -> Self {
        let eps = T::epsilon();
        let cast = |x: f64| <T as NumCast>::from(x).unwrap();
        Self {
            tol: cast(DEFAULT_POWER_TOL).max(eps * cast(16.0)),
            residual_tol: cast(DEFAULT_RESIDUAL_TOL).max(eps * cast(1024.0)),
            max_iterations: MAX_POWER_ITERATIONS,
        }
    }
}

impl<T: Scalar> PowerOptions<T> {
    pub fn with_tol(tol: T) -> Self {
        Self { tol, ..Self::default() }
    }
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// The shift keeps the Perron root strictly dominant in magnitude for
/// bipartite graphs. Iteration continues until both the Rayleigh-quotient
/// step and the eigen-residual are under their tolerances.
pub fn spectral_radius_power<T: Scalar>(
    g: &Graph,
    opts: &PowerOptions<T>,
) -> Result<SpectralResult<T>, SpectralError> {
    if opts.tol.is_nan() || opts.tol <= T::zero() || opts.residual_tol.is_nan() || opts.residual_tol <= T::zero() {
        return Err(SpectralError::InvalidTolerance);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.order();
    let mut v = vec![T::one() / T::from_count(n).sqrt(); n];
    let mut w = vec![T::zero(); n];
    let mut previous: Option<T> = None;
    let mut last = (T::zero(), T::infinity());

    for iteration in 1..=opts.max_iterations {
        shifted_product(g, &v, &mut w);
        // v has unit 2-norm, so vᵀ(A+I)v − 1 is the Rayleigh quotient of A.
        let rq = dot(&v, &w) - T::one();
        let norm = dot(&w, &w).sqrt();
        for (vi, &wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
        let converged = previous.is_some_and(|p| (rq - p).abs() < opts.tol);
        previous = Some(rq);
        if converged {
            last = rayleigh_with_residual(g, &v, &mut w);
            if last.1 <= opts.residual_tol {
                return Ok(SpectralResult { rho: last.0, iterations: iteration, residual: last.1, method: Method::Power });
            }
        }
    }
    if last.1.is_infinite() {
        last = rayleigh_with_residual(g, &v, &mut w);
    }
    Err(SpectralError::NoConvergence {
        iterations: opts.max_iterations,
        last_estimate: last.0.to_f64().unwrap_or(f64::NAN),
        residual: last.1.to_f64().unwrap_or(f64::NAN),
    })
}

fn shifted_product<T: Scalar>(g: &Graph, v: &[T], out: &mut [T]) {
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = g.neighbors(i).iter().fold(v[i], |acc, &j| acc + v[j]);
    }
}

/// Rayleigh quotient of `A` at unit vector `v` and the scaled residual.
fn rayleigh_with_residual<T: Scalar>(g: &Graph, v: &[T], scratch: &mut [T]) -> (T, T) {
    for (i, slot) in scratch.iter_mut().enumerate() {
        *slot = g.neighbors(i).iter().fold(T::zero(), |acc, &j| acc + v[j]);
    }
    let rho = dot(v, scratch);
    let scale = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let residual = scratch.iter().zip(v).fold(T::zero(), |m, (&av, &vi)| m.max((av - rho * vi).abs()));
    (rho, residual / scale)
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}
