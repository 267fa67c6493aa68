//! Volume and net-size bounds for hyperbolic 3-manifolds, and greedy nets
//! in finite metric spaces.

use alloc::vec::Vec;
use core::f64::consts::PI;

/// Volume of the regular ideal hyperbolic tetrahedron.
pub const V3: f64 = 1.014_941_606_409_653_6;

/// Absolute tolerance for metric checks.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum HypError {
    #[error("{name} must be positive and finite, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error("need at least 2 twist regions, got {0}")]
    TooFewTwistRegions(usize),
    #[error("distance matrix must be square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("d({i}, {j}) = {value} is negative or not finite")]
    BadDistance { i: usize, j: usize, value: f64 },
    #[error("d({i}, {i}) = {value} is not zero")]
    NonZeroDiagonal { i: usize, value: f64 },
    #[error("d({i}, {j}) != d({j}, {i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("triangle inequality fails: d({i}, {k}) > d({i}, {j}) + d({j}, {k})")]
    Triangle { i: usize, j: usize, k: usize },
}

fn positive(name: &'static str, value: f64) -> Result<f64, HypError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(HypError::NotPositive { name, value })
    }
}

/// `sinh x - x` without cancellation for small `x`.
fn sinh_minus_id(x: f64) -> f64 {
    if libm::fabs(x) < 0.5 {
        // x^3/3! + x^5/5! + ...; with |x| < 1/2 twelve terms reach full
        // precision.
        let (mut term, mut sum) = (x * x * x / 6.0, 0.0f64);
        for k in 0..12 {
            sum += term;
            let k = 2.0 * k as f64 + 3.0;
            term *= x * x / ((k + 1.0) * (k + 2.0));
        }
        sum
    } else {
        libm::sinh(x) - x
    }
}

/// Volume of a hyperbolic ball of radius `r`: `pi (sinh 2r - 2r)`.
pub fn ball_volume(r: f64) -> Result<f64, HypError> {
    let r = positive("radius", r)?;
    Ok(PI * sinh_minus_id(2.0 * r))
}

/// Upper bounds on the size of an `eps`-separated set in a manifold of
/// volume `vol`: disjoint balls of radius `eps / 2` give
/// `vol / (pi (sinh eps - eps))`, and `sinh x - x >= x^3 / 6` gives the
/// simpler `(6 / pi) vol / eps^3`. Returns `(tight, simple)`.
pub fn net_size_bound(vol: f64, eps: f64) -> Result<(f64, f64), HypError> {
    let vol = positive("volume", vol)?;
    let eps = positive("epsilon", eps)?;
    let tight = vol / (PI * sinh_minus_id(eps));
    let simple = 6.0 / PI * vol / (eps * eps * eps);
    Ok((tight, simple))
}

/// Lower bound `2 v3 n` on the volume of a 2-bridge knot exterior whose
/// diagram has `n` twist regions.
pub fn two_bridge_volume_lower(n: usize) -> Result<f64, HypError> {
    if n < 2 {
        return Err(HypError::TooFewTwistRegions(n));
    }
    Ok(2.0 * V3 * n as f64)
}

/// A finite metric space given by its distance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMetric {
    n: usize,
    d: Vec<f64>,
}

impl FiniteMetric {
    /// Validates symmetry, zero diagonal and the triangle inequality, each
    /// up to [`TOLERANCE`].
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, HypError> {
        let n = rows.len();
        let mut d = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(HypError::NotSquare { row, len: r.len(), n });
            }
            d.extend_from_slice(r);
        }
        let m = Self { n, d };
        for i in 0..n {
            for j in 0..n {
                let v = m.dist(i, j);
                if !v.is_finite() || v < 0.0 {
                    return Err(HypError::BadDistance { i, j, value: v });
                }
            }
            if libm::fabs(m.dist(i, i)) > TOLERANCE {
                return Err(HypError::NonZeroDiagonal { i, value: m.dist(i, i) });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if libm::fabs(m.dist(i, j) - m.dist(j, i)) > TOLERANCE {
                    return Err(HypError::NotSymmetric { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if m.dist(i, k) > m.dist(i, j) + m.dist(j, k) + TOLERANCE {
                        return Err(HypError::Triangle { i, j, k });
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.d.chunks(self.n.max(1)).take(self.n)
    }
}

/// Scans points in index order, keeping each point at distance at least
/// `eps` from everything kept so far. The result is `eps`-separated, and
/// every point lies within distance `< eps` of it.
pub fn greedy_net(metric: &FiniteMetric, eps: f64) -> Result<Vec<usize>, HypError> {
    let eps = positive("epsilon", eps)?;
    let mut net: Vec<usize> = Vec::new();
    for p in 0..metric.len() {
        if net.iter().all(|&q| metric.dist(p, q) >= eps) {
            net.push(p);
        }
    }
    Ok(net)
}
