//! Discrete oracle zoo and exact tail summation.
//!
//! The parametric families carry the structure the discrete bounds need:
//! closed-form moments, a unimodal shape, and (on unbounded supports) a
//! ratio certificate p(k+1)/p(k) ≤ r(k), so every tail sum here is exact up
//! to a certified truncation remainder below 1e-14.

use crate::discrete::{DiscreteError, DiscreteSpec, PmfShape, Support};
use crate::special::ln_gamma;
use std::sync::Arc;

/// Certified remainder allowance for unbounded tail sums.
const TAIL_SUM_TOL: f64 = 1e-15;

/// Poisson(λ): p(k) = λ^k e^{−λ}/k!, mean λ, variance λ, mode ⌊λ⌋.
pub fn poisson(lambda: f64) -> Result<DiscreteSpec, DiscreteError> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(DiscreteError::InvalidVariance(lambda));
    }
    let pmf = move |k: i64| -> f64 {
        if k < 0 {
            return 0.0;
        }
        let kf = k as f64;
        (kf * lambda.ln() - lambda - ln_gamma(kf + 1.0)).exp()
    };
    // p(j+1)/p(j) = λ/(j+1) ≤ λ/(k+1) for all j ≥ k.
    let ratio = move |k: i64| lambda / (k as f64 + 1.0);
    DiscreteSpec::from_closure(
        "poisson",
        Arc::new(pmf),
        Support::HalfLine { lo: 0 },
        lambda,
        lambda,
        PmfShape::Unimodal {
            mode: lambda.floor() as i64,
        },
        Some(Arc::new(ratio)),
    )
}

/// Binomial(n, p): mean np, variance np(1−p), mode ⌊(n+1)p⌋ capped at n.
pub fn binomial(n: u32, p: f64) -> Result<DiscreteSpec, DiscreteError> {
    if n == 0 {
        return Err(DiscreteError::EmptySupport);
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(DiscreteError::InvalidVariance(p));
    }
    let nf = n as f64;
    let ln_p = p.ln();
    let ln_q = (1.0 - p).ln();
    let pmf = move |k: i64| -> f64 {
        if k < 0 || k > n as i64 {
            return 0.0;
        }
        let kf = k as f64;
        let ln_choose = ln_gamma(nf + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(nf - kf + 1.0);
        (ln_choose + kf * ln_p + (nf - kf) * ln_q).exp()
    };
    let mode = (((n + 1) as f64 * p).floor() as i64).min(n as i64);
    DiscreteSpec::from_closure(
        "binomial",
        Arc::new(pmf),
        Support::Finite {
            lo: 0,
            hi: n as i64,
        },
        nf * p,
        nf * p * (1.0 - p),
        PmfShape::Unimodal { mode },
        None,
    )
}

/// Geometric on {0, 1, 2, …}: p(k) = p(1−p)^k, mean (1−p)/p, variance
/// (1−p)/p². Monotone nonincreasing, so the mode is 0.
pub fn geometric(p: f64) -> Result<DiscreteSpec, DiscreteError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(DiscreteError::InvalidVariance(p));
    }
    let q = 1.0 - p;
    let pmf = move |k: i64| -> f64 {
        if k < 0 {
            return 0.0;
        }
        p * q.powi(k as i32)
    };
    let ratio = move |_k: i64| q;
    DiscreteSpec::from_closure(
        "geometric",
        Arc::new(pmf),
        Support::HalfLine { lo: 0 },
        q / p,
        q / (p * p),
        PmfShape::Unimodal { mode: 0 },
        Some(Arc::new(ratio)),
    )
}

/// Exact Pr(Y ≤ lo_edge) + Pr(Y ≥ hi_edge). Edges may lie outside the
/// support; the corresponding piece contributes zero. For unbounded
/// supports the right piece truncates with a certified remainder.
pub fn exact_tail_edges(
    spec: &DiscreteSpec,
    lo_edge: i64,
    hi_edge: i64,
) -> Result<f64, DiscreteError> {
    debug_assert!(lo_edge < hi_edge, "tail pieces must not overlap");
    let mut total = 0.0;
    let support_lo = spec.support().lo();
    let left_hi = match spec.support() {
        Support::Finite { hi, .. } => lo_edge.min(hi),
        Support::HalfLine { .. } => lo_edge,
    };
    for k in support_lo..=left_hi {
        total += spec.pmf(k);
    }
    match spec.support() {
        Support::Finite { hi, .. } => {
            for k in hi_edge.max(support_lo)..=hi {
                total += spec.pmf(k);
            }
        }
        Support::HalfLine { .. } => {
            total += spec.tail_sum_weighted(hi_edge, 0, TAIL_SUM_TOL)?;
        }
    }
    Ok(total.min(1.0))
}

/// Exact Pr((Y−μ−1/2)² ≥ ε²σ_f²): as an integer set this is
/// {k ≤ ⌊x_L⌋} ∪ {k ≥ ⌈x_R⌉}.
pub fn exact_tail_symmetric(spec: &DiscreteSpec, eps: f64) -> Result<f64, DiscreteError> {
    debug_assert!(eps >= 0.0);
    if eps == 0.0 {
        return Ok(1.0);
    }
    let geo = crate::discrete::tail_geometry(
        crate::bounds::Epsilon::new(eps).expect("eps > 0 here"),
        spec,
    );
    exact_tail_edges(spec, geo.m_eps_lo, geo.d_eps_hi)
}
