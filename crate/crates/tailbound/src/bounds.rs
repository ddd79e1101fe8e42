//! Tail probability bounds from moment data and a density supremum.
//!
//! Everything here is a pure function of (ε, moments, sup): the classical
//! comparators
//!
//!   Pr((X−μ)²/σ² ≥ ε²) ≤ 1/ε²            (two-sided)
//!   Pr((X−μ)/σ ≥ ε)   ≤ 1/(1+ε²)         (one-sided)
//!   Pr((X−μ)ᵀΣ⁻¹(X−μ) ≥ ε²) ≤ n/ε²       (multivariate)
//!
//! and the sharper bounds available when the supremum of the density on the
//! tail set is known. With m_ε = σ·‖f‖∞ over the tail set, the sharp 1-D
//! bound is α·m_ε where α is the unique positive root of
//!
//!   T(x) = x³/(2πe) + (ε/e)·x² + ε²·x − 1/m_ε
//!
//! together with the closed-form relaxation
//!
//!   min(1/ε², (e/ε)^{1/2}·m_ε^{1/2}, (2πe)^{1/3}·m_ε^{2/3})
//!
//! and the multivariate analogue min(n/ε², (2πe)^{n/(n+2)}·m_ε^{2/(n+2)})
//! with m_ε = (det Σ)^{1/2}·‖f‖∞.
//!
//! No distribution knowledge lives in this module: the supremum arrives as
//! data (see the `oracles` module for distributions that supply it).

use serde::Serialize;
use std::f64::consts::{E, PI};
use thiserror::Error;

/// 2πe, from the platform constants.
pub const TWO_PI_E: f64 = 2.0 * PI * E;

/// Errors from bound computation.
#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),

    #[error("variance must be positive and finite, got {0}")]
    InvalidVariance(f64),

    #[error("density supremum must be nonnegative and finite, got {0}")]
    InvalidSupremum(f64),

    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("covariance determinant must be positive and finite, got {0}")]
    InvalidCovDet(f64),

    /// m_ε = 0: the density vanishes a.e. on the tail set, so the tail
    /// carries no mass and the supremum-based bound is 0 by convention.
    /// The cubic itself is singular (its constant term is −1/m_ε).
    #[error("zero supremum on the tail set (bound is 0 by convention)")]
    ZeroSupremum,

    #[error("root solver failed to converge (residual {residual:e} > {tolerance:e})")]
    NoConvergence { residual: f64, tolerance: f64 },
}

/// Deviation threshold in units of standard deviations. Always positive
/// and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Epsilon(f64);

impl Epsilon {
    pub fn new(value: f64) -> Result<Self, BoundError> {
        if value > 0.0 && value.is_finite() {
            Ok(Epsilon(value))
        } else {
            Err(BoundError::InvalidEpsilon(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Epsilon {
    type Error = BoundError;

    fn try_from(value: f64) -> Result<Self, BoundError> {
        Epsilon::new(value)
    }
}

/// Moment data for a one-dimensional distribution: mean μ, variance σ² > 0,
/// and the supremum of the density on the tail set {|x−μ| ≥ εσ}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentSpec1D {
    mean: f64,
    variance: f64,
    sup_density_on_tail: f64,
}

impl MomentSpec1D {
    pub fn new(mean: f64, variance: f64, sup_density_on_tail: f64) -> Result<Self, BoundError> {
        if !(variance > 0.0 && variance.is_finite()) {
            return Err(BoundError::InvalidVariance(variance));
        }
        if !(sup_density_on_tail >= 0.0 && sup_density_on_tail.is_finite()) {
            return Err(BoundError::InvalidSupremum(sup_density_on_tail));
        }
        if !mean.is_finite() {
            return Err(BoundError::InvalidVariance(mean));
        }
        Ok(MomentSpec1D {
            mean,
            variance,
            sup_density_on_tail,
        })
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn sup_density_on_tail(&self) -> f64 {
        self.sup_density_on_tail
    }

    /// m_ε = σ·‖f‖∞ on the tail set. Dimensionless.
    pub fn m_eps(&self) -> f64 {
        self.variance.sqrt() * self.sup_density_on_tail
    }
}

/// Moment data for an n-dimensional distribution: dimension, det Σ > 0, and
/// the density supremum on the ellipsoid exterior {(x−μ)ᵀΣ⁻¹(x−μ) ≥ ε²}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentSpecMulti {
    dim: usize,
    cov_det: f64,
    sup_density_on_tail: f64,
}

impl MomentSpecMulti {
    pub fn new(dim: usize, cov_det: f64, sup_density_on_tail: f64) -> Result<Self, BoundError> {
        if dim < 1 {
            return Err(BoundError::InvalidDimension);
        }
        if !(cov_det > 0.0 && cov_det.is_finite()) {
            return Err(BoundError::InvalidCovDet(cov_det));
        }
        if !(sup_density_on_tail >= 0.0 && sup_density_on_tail.is_finite()) {
            return Err(BoundError::InvalidSupremum(sup_density_on_tail));
        }
        Ok(MomentSpecMulti {
            dim,
            cov_det,
            sup_density_on_tail,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cov_det(&self) -> f64 {
        self.cov_det
    }

    pub fn sup_density_on_tail(&self) -> f64 {
        self.sup_density_on_tail
    }

    /// m_ε = (det Σ)^{1/2}·‖f‖∞ on the tail set.
    pub fn m_eps(&self) -> f64 {
        self.cov_det.sqrt() * self.sup_density_on_tail
    }
}

/// A probability bound capped at 1. `raw` keeps the uncapped value so
/// downstream comparisons can see when the formula exceeded 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClampedProb {
    pub raw: f64,
    pub value: f64,
    pub clamped: bool,
}

impl ClampedProb {
    pub fn new(raw: f64) -> Self {
        ClampedProb {
            raw,
            value: raw.min(1.0),
            clamped: raw > 1.0,
        }
    }
}

/// Coefficients of T(x) = c3·x³ + c2·x² + c1·x + c0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl Cubic {
    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1
    }
}

/// Coefficients (1/(2πe), ε/e, ε², −1/m_ε) of the cubic whose positive root
/// gives the sharp bound α·m_ε.
pub fn cubic_coefficients(eps: Epsilon, m_eps: f64) -> Result<Cubic, BoundError> {
    if !(m_eps >= 0.0 && m_eps.is_finite()) {
        return Err(BoundError::InvalidSupremum(m_eps));
    }
    if m_eps == 0.0 {
        return Err(BoundError::ZeroSupremum);
    }
    let e = eps.value();
    Ok(Cubic {
        c3: 1.0 / TWO_PI_E,
        c2: e / E,
        c1: e * e,
        c0: -1.0 / m_eps,
    })
}

/// Residual tolerance for the root of the cubic, scaled with the constant
/// term so tiny m_ε does not make the tolerance vacuous.
pub fn alpha_residual_tolerance(m_eps: f64) -> f64 {
    1e-12 * f64::max(1.0, 1.0 / m_eps)
}

const MAX_SOLVER_ITER: usize = 200;

/// The unique positive root α of T(x) = x³/(2πe) + (ε/e)x² + ε²x − 1/m_ε.
///
/// T(0) = −1/m_ε < 0 and T′ > 0 everywhere (its discriminant
/// 4ε²(2π−3e)/(2πe²) is negative), so exactly one positive root exists.
/// Safeguarded Newton from the upper end of a sign-change bracket: T is
/// convex on [0, ∞), so the iteration descends monotonically onto the root;
/// any step leaving the bracket falls back to bisection.
///
/// Signals `ZeroSupremum` for m_ε = 0 (callers map that to a zero bound:
/// a density vanishing a.e. on the tail set carries no tail mass).
pub fn solve_alpha(eps: Epsilon, m_eps: f64) -> Result<f64, BoundError> {
    let cubic = cubic_coefficients(eps, m_eps)?;
    let tol = alpha_residual_tolerance(m_eps);
    let e = eps.value();

    // T(B) > 0 already from the first term: B³/(2πe) > 1/m_ε.
    let bracket = (TWO_PI_E / m_eps).cbrt() + TWO_PI_E / (e * e * m_eps) + 1.0;

    let mut lo = 0.0_f64;
    let mut hi = bracket;
    let mut x = hi;
    for _ in 0..MAX_SOLVER_ITER {
        let t = cubic.eval(x);
        if t > 0.0 {
            hi = x;
        } else if t < 0.0 {
            lo = x;
        } else {
            return Ok(x);
        }
        let d = cubic.derivative(x);
        let mut next = x - t / d;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if next == x {
            break;
        }
        x = next;
    }

    let residual = cubic.eval(x).abs();
    if residual <= tol {
        Ok(x)
    } else {
        Err(BoundError::NoConvergence {
            residual,
            tolerance: tol,
        })
    }
}

/// Sharp 1-D bound Pr(|X−μ| ≥ εσ) ≤ α·m_ε, capped at 1 with a flag.
///
/// m_ε = 0 yields a zero bound.
pub fn bound_1d_theorem(eps: Epsilon, spec: &MomentSpec1D) -> Result<ClampedProb, BoundError> {
    let m = spec.m_eps();
    match solve_alpha(eps, m) {
        Ok(alpha) => Ok(ClampedProb::new(alpha * m)),
        Err(BoundError::ZeroSupremum) => Ok(ClampedProb::new(0.0)),
        Err(e) => Err(e),
    }
}

/// The three closed-form relaxations of the cubic bound and their minimum.
/// All values are uncapped; `reported()` applies the cap at 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Corollary1D {
    /// 1/ε²
    pub chebyshev: f64,
    /// (e/ε)^{1/2}·m_ε^{1/2}
    pub term_sqrt: f64,
    /// (2πe)^{1/3}·m_ε^{2/3}
    pub term_cuberoot: f64,
    /// min of the three terms
    pub min: f64,
}

impl Corollary1D {
    pub fn reported(&self) -> ClampedProb {
        ClampedProb::new(self.min)
    }
}

/// Closed-form bound min(1/ε², (e/ε)^{1/2}·m_ε^{1/2}, (2πe)^{1/3}·m_ε^{2/3}).
pub fn bound_1d_corollary(eps: Epsilon, spec: &MomentSpec1D) -> Corollary1D {
    corollary_terms(eps, spec.m_eps())
}

pub(crate) fn corollary_terms(eps: Epsilon, m_eps: f64) -> Corollary1D {
    let e = eps.value();
    let chebyshev = 1.0 / (e * e);
    let term_sqrt = (E / e).sqrt() * m_eps.sqrt();
    let term_cuberoot = TWO_PI_E.cbrt() * m_eps.powf(2.0 / 3.0);
    Corollary1D {
        chebyshev,
        term_sqrt,
        term_cuberoot,
        min: chebyshev.min(term_sqrt).min(term_cuberoot),
    }
}

/// Classical two-sided bound min(1, 1/ε²).
pub fn bound_chebyshev_classical(eps: Epsilon) -> f64 {
    let e = eps.value();
    (1.0 / (e * e)).min(1.0)
}

/// One-sided bound 1/(1+ε²). Never exceeds 1.
pub fn bound_chebyshev_one_sided(eps: Epsilon) -> f64 {
    let e = eps.value();
    1.0 / (1.0 + e * e)
}

/// Multivariate comparator min(1, n/ε²).
pub fn bound_multivariate_chen(eps: Epsilon, dim: usize) -> f64 {
    assert!(dim >= 1, "dimension must be at least 1");
    let e = eps.value();
    (dim as f64 / (e * e)).min(1.0)
}

/// Multivariate supremum bound with its components, uncapped; the reported
/// value caps the minimum at 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultiBound {
    /// n/ε²
    pub chen: f64,
    /// (2πe)^{n/(n+2)}·m_ε^{2/(n+2)}
    pub term_maxent: f64,
    /// min of the two terms
    pub min: f64,
}

impl MultiBound {
    pub fn reported(&self) -> ClampedProb {
        ClampedProb::new(self.min)
    }
}

/// Multivariate bound min(n/ε², (2πe)^{n/(n+2)}·m_ε^{2/(n+2)}) with
/// m_ε = (det Σ)^{1/2}·‖f‖∞. A zero supremum yields a zero bound.
pub fn bound_multivariate_improved(eps: Epsilon, spec: &MomentSpecMulti) -> MultiBound {
    let e = eps.value();
    let n = spec.dim() as f64;
    let m = spec.m_eps();
    let chen = n / (e * e);
    let term_maxent = if m == 0.0 {
        0.0
    } else {
        TWO_PI_E.powf(n / (n + 2.0)) * m.powf(2.0 / (n + 2.0))
    };
    MultiBound {
        chen,
        term_maxent,
        min: chen.min(term_maxent),
    }
}

/// All 1-D bounds for one ε: the cubic-root bound, the closed-form
/// relaxations, and the classical comparator, plus the tightest value
/// capped at 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub epsilon: f64,
    pub m_eps: f64,
    /// α·m_ε, uncapped
    pub theorem_bound: f64,
    /// exact min of the three corollary terms, uncapped
    pub corollary_bound: f64,
    /// 1/ε², uncapped
    pub chebyshev: f64,
    pub term_sqrt: f64,
    pub term_cuberoot: f64,
    /// min(1, tightest bound)
    pub reported: f64,
    /// true when the cap at 1 was active
    pub clamped: bool,
}

/// Assembles the full 1-D report for one (ε, spec) pair.
pub fn bound_report_1d(eps: Epsilon, spec: &MomentSpec1D) -> Result<BoundReport, BoundError> {
    let theorem = bound_1d_theorem(eps, spec)?;
    let cor = bound_1d_corollary(eps, spec);
    let tightest = theorem.raw.min(cor.min);
    Ok(BoundReport {
        epsilon: eps.value(),
        m_eps: spec.m_eps(),
        theorem_bound: theorem.raw,
        corollary_bound: cor.min,
        chebyshev: cor.chebyshev,
        term_sqrt: cor.term_sqrt,
        term_cuberoot: cor.term_cuberoot,
        reported: tightest.min(1.0),
        clamped: tightest > 1.0,
    })
}
