//! Log-domain helpers and a plain bisection solver.

use crate::error::{ModelError, Result};

/// `ln(e^a + e^b)` without overflow.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let hi = a.max(b);
    let lo = a.min(b);
    hi + (lo - hi).exp().ln_1p()
}

/// `ln(1 + e^x)`.
pub fn softplus(x: f64) -> f64 {
    if x > 35.0 {
        // e^-x below f64 resolution relative to x
        x + (-x).exp()
    } else {
        x.exp().ln_1p()
    }
}

/// `ln(1 + c*v)` where `ln_v` is the log of a non-negative quantity and `c > 0`.
pub fn ln_1p_scaled(c: f64, ln_v: f64) -> f64 {
    softplus(c.ln() + ln_v)
}

/// Relative difference `|a-b| / max(|a|,|b|)`, zero when both are zero.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Stopping rule for [`bisect`].
#[derive(Debug, Clone, Copy)]
pub struct BisectionTolerance {
    /// Stop once `|g(x)|` falls below this.
    pub residual: f64,
    /// Stop once the bracket is narrower than this.
    pub width: f64,
    pub max_iterations: usize,
}

/// Finds a sign change of `g` on `[lo, hi]`.
///
/// `g(lo)` and `g(hi)` must have opposite signs (or one of them is zero).
/// Returns the midpoint of the final bracket.
pub fn bisect<F>(mut g: F, mut lo: f64, mut hi: f64, tol: BisectionTolerance) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let g_lo = g(lo);
    let g_hi = g(hi);
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    if g_lo.signum() == g_hi.signum() || g_lo.is_nan() || g_hi.is_nan() {
        return Err(ModelError::NoConvergence {
            iterations: 0,
            residual: g_lo.abs().min(g_hi.abs()),
        });
    }
    let lo_positive = g_lo > 0.0;
    let mut residual = f64::INFINITY;
    for _ in 0..tol.max_iterations {
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid);
        residual = g_mid.abs();
        if residual <= tol.residual || (hi - lo) <= tol.width {
            return Ok(mid);
        }
        if (g_mid > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(ModelError::NoConvergence {
        iterations: tol.max_iterations,
        residual,
    })
}
