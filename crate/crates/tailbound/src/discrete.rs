//! Tail bounds for integer-valued distributions.
//!
//! An integer pmf p embeds into the piecewise-constant density
//! f(x) = p(⌊x⌋), which has mean μ+1/2 and variance σ_f² = σ²+1/12. The
//! continuous bounds applied to f give discrete bounds in terms of
//!
//!   x_L = μ+1/2−εσ_f,  x_R = μ+1/2+εσ_f,
//!   D_ε = {k ≤ ⌊x_L⌋−1 or k ≥ ⌈x_R⌉},
//!   M_ε = {k ≤ ⌊x_L⌋ or k ≥ ⌊x_R⌋},   m_ε = σ_f·max_{k∈M_ε} p(k):
//!
//!   Pr(D_ε) ≤ α·m_ε                           (floor/ceil tail set)
//!   Pr((Y−μ−1/2)² ≥ ε²σ_f²) ≤ α·m_ε + p(⌊x_L⌋) (symmetric tail set)
//!
//! with α the positive root of the same cubic as in [`crate::bounds`]. The
//! D_ε/M_ε floor-ceil asymmetry is deliberate: f(x) = p(⌊x⌋) makes the
//! supremum over [x_R, ∞) start at k = ⌊x_R⌋.
//!
//! Unbounded supports must declare a unimodal shape and a pmf ratio
//! certificate so that maxima and tail sums need only finitely many
//! evaluations.

use crate::bounds::{self, BoundError, ClampedProb, Epsilon};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Errors from discrete spec construction and bound evaluation.
#[derive(Debug, Error)]
pub enum DiscreteError {
    #[error("variance must be positive and finite, got {0}")]
    InvalidVariance(f64),

    #[error("mean must be finite, got {0}")]
    InvalidMean(f64),

    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("support is empty")]
    EmptySupport,

    #[error("pmf value at k={k} is negative or not finite: {value}")]
    InvalidPmfValue { k: i64, value: f64 },

    #[error("pmf mass sums to {mass:.15}, expected 1 within 1e-12")]
    MassNotNormalized { mass: f64 },

    #[error("declared {what} {declared} disagrees with recomputed {recomputed}")]
    MomentMismatch {
        what: &'static str,
        declared: f64,
        recomputed: f64,
    },

    #[error("mode {mode} lies outside the support")]
    ModeOutsideSupport { mode: i64 },

    #[error(
        "unbounded support requires a unimodal shape and a tail ratio certificate \
         so tail maxima and sums are finitely computable"
    )]
    UnboundedWithoutStructure,

    #[error("series failed to reach certified truncation within {0} terms")]
    NoCertifiedTruncation(usize),

    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// Integer support: a finite range or a half line unbounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Finite { lo: i64, hi: i64 },
    HalfLine { lo: i64 },
}

impl Support {
    pub fn lo(&self) -> i64 {
        match *self {
            Support::Finite { lo, .. } | Support::HalfLine { lo } => lo,
        }
    }

    pub fn contains(&self, k: i64) -> bool {
        match *self {
            Support::Finite { lo, hi } => k >= lo && k <= hi,
            Support::HalfLine { lo } => k >= lo,
        }
    }
}

/// Where the pmf maximum can sit, so tail maxima need finitely many
/// evaluations. `FullScan` is only available on finite supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmfShape {
    FullScan,
    /// Nondecreasing up to `mode`, nonincreasing after (plateaus allowed).
    /// A monotone nonincreasing pmf is `Unimodal { mode: support_lo }`.
    Unimodal { mode: i64 },
}

type PmfClosure = Arc<dyn Fn(i64) -> f64 + Send + Sync>;
type RatioClosure = Arc<dyn Fn(i64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum PmfKind {
    Table(BTreeMap<i64, f64>),
    Closure(PmfClosure),
}

/// An integer-valued distribution: pmf accessor, support, declared mean and
/// variance (checked against the pmf at construction), shape metadata, and —
/// for unbounded supports — a certificate `r(k)` with p(j+1)/p(j) ≤ r(k) < 1
/// for all j ≥ k (for k large enough), used to certify tail truncations.
#[derive(Clone)]
pub struct DiscreteSpec {
    name: String,
    pmf: PmfKind,
    support: Support,
    mean: f64,
    variance: f64,
    shape: PmfShape,
    tail_ratio: Option<RatioClosure>,
}

impl fmt::Debug for DiscreteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiscreteSpec")
            .field("name", &self.name)
            .field("support", &self.support)
            .field("mean", &self.mean)
            .field("variance", &self.variance)
            .field("shape", &self.shape)
            .finish()
    }
}

const MAX_SERIES_TERMS: usize = 4_000_000;
const MASS_TOL: f64 = 1e-12;
const MOMENT_TOL: f64 = 1e-9;

impl DiscreteSpec {
    /// Builds a spec from an explicit finite table. Mean and variance are
    /// computed from the table itself.
    pub fn from_table(name: &str, table: BTreeMap<i64, f64>) -> Result<Self, DiscreteError> {
        let (mean, variance) = table_moments(&table)?;
        Self::from_table_with_moments(name, table, mean, variance)
    }

    /// Builds a spec from a finite table with declared moments (useful when
    /// the exact moments are known in closed form). The declared values are
    /// checked against the table within 1e-9 but kept as declared.
    pub fn from_table_with_moments(
        name: &str,
        table: BTreeMap<i64, f64>,
        mean: f64,
        variance: f64,
    ) -> Result<Self, DiscreteError> {
        if table.is_empty() {
            return Err(DiscreteError::EmptySupport);
        }
        let lo = *table.keys().next().unwrap();
        let hi = *table.keys().next_back().unwrap();
        let spec = DiscreteSpec {
            name: name.to_string(),
            pmf: PmfKind::Table(table),
            support: Support::Finite { lo, hi },
            mean,
            variance,
            shape: PmfShape::FullScan,
            tail_ratio: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Builds a spec from a pmf closure. Unbounded supports must supply a
    /// unimodal shape and a tail ratio certificate.
    pub fn from_closure(
        name: &str,
        pmf: PmfClosure,
        support: Support,
        mean: f64,
        variance: f64,
        shape: PmfShape,
        tail_ratio: Option<RatioClosure>,
    ) -> Result<Self, DiscreteError> {
        if let Support::Finite { lo, hi } = support {
            if lo > hi {
                return Err(DiscreteError::EmptySupport);
            }
        }
        if matches!(support, Support::HalfLine { .. })
            && (tail_ratio.is_none() || !matches!(shape, PmfShape::Unimodal { .. }))
        {
            return Err(DiscreteError::UnboundedWithoutStructure);
        }
        let spec = DiscreteSpec {
            name: name.to_string(),
            pmf: PmfKind::Closure(pmf),
            support,
            mean,
            variance,
            shape,
            tail_ratio,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn shape(&self) -> PmfShape {
        self.shape
    }

    /// p(k); zero outside the support.
    pub fn pmf(&self, k: i64) -> f64 {
        if !self.support.contains(k) {
            return 0.0;
        }
        match &self.pmf {
            PmfKind::Table(t) => t.get(&k).copied().unwrap_or(0.0),
            PmfKind::Closure(f) => f(k),
        }
    }

    fn validate(&self) -> Result<(), DiscreteError> {
        if !self.mean.is_finite() {
            return Err(DiscreteError::InvalidMean(self.mean));
        }
        if !(self.variance > 0.0 && self.variance.is_finite()) {
            return Err(DiscreteError::InvalidVariance(self.variance));
        }
        if let PmfShape::Unimodal { mode } = self.shape {
            if !self.support.contains(mode) {
                return Err(DiscreteError::ModeOutsideSupport { mode });
            }
        }

        let (mass, m1, m2) = match self.support {
            Support::Finite { lo, hi } => {
                let mut mass = 0.0;
                let mut m1 = 0.0;
                let mut m2 = 0.0;
                for k in lo..=hi {
                    let p = self.pmf_checked(k)?;
                    let kf = k as f64;
                    mass += p;
                    m1 += kf * p;
                    m2 += kf * kf * p;
                }
                (mass, m1, m2)
            }
            Support::HalfLine { lo } => (
                self.tail_sum_weighted(lo, 0, 1e-15)?,
                self.tail_sum_weighted(lo, 1, 1e-13)?,
                self.tail_sum_weighted(lo, 2, 1e-13)?,
            ),
        };

        if (mass - 1.0).abs() > MASS_TOL {
            return Err(DiscreteError::MassNotNormalized { mass });
        }
        let var = m2 - m1 * m1;
        if (m1 - self.mean).abs() > MOMENT_TOL * f64::max(1.0, self.mean.abs()) {
            return Err(DiscreteError::MomentMismatch {
                what: "mean",
                declared: self.mean,
                recomputed: m1,
            });
        }
        if (var - self.variance).abs() > MOMENT_TOL * f64::max(1.0, self.variance) {
            return Err(DiscreteError::MomentMismatch {
                what: "variance",
                declared: self.variance,
                recomputed: var,
            });
        }
        Ok(())
    }

    fn pmf_checked(&self, k: i64) -> Result<f64, DiscreteError> {
        let p = self.pmf(k);
        if p >= 0.0 && p.is_finite() {
            Ok(p)
        } else {
            Err(DiscreteError::InvalidPmfValue { k, value: p })
        }
    }

    /// Σ_{k ≥ from} k^deg·p(k) with a certified remainder below `tol`.
    ///
    /// The stopping certificate needs k ≥ 1, a ratio bound r(k) < 1 and the
    /// weight growth ((k+1)/k)^deg; the remainder is then below
    /// term·ρ/(1−ρ) with ρ = r(k)·((k+1)/k)^deg.
    pub(crate) fn tail_sum_weighted(
        &self,
        from: i64,
        deg: u32,
        tol: f64,
    ) -> Result<f64, DiscreteError> {
        let from = from.max(self.support.lo());
        match self.support {
            Support::Finite { hi, .. } => {
                let mut sum = 0.0;
                for k in from..=hi {
                    let p = self.pmf_checked(k)?;
                    sum += (k as f64).powi(deg as i32) * p;
                }
                Ok(sum)
            }
            Support::HalfLine { .. } => {
                let ratio = self
                    .tail_ratio
                    .as_ref()
                    .ok_or(DiscreteError::UnboundedWithoutStructure)?;
                let mut sum = 0.0;
                let mut k = from;
                for _ in 0..MAX_SERIES_TERMS {
                    let p = self.pmf_checked(k)?;
                    let term = (k as f64).powi(deg as i32) * p;
                    sum += term;
                    if k >= 1 {
                        let growth = ((k + 1) as f64 / k as f64).powi(deg as i32);
                        let rho = ratio(k) * growth;
                        if rho < 1.0 && term.abs() * rho / (1.0 - rho) < tol {
                            return Ok(sum);
                        }
                    }
                    k += 1;
                }
                Err(DiscreteError::NoCertifiedTruncation(MAX_SERIES_TERMS))
            }
        }
    }
}

fn table_moments(table: &BTreeMap<i64, f64>) -> Result<(f64, f64), DiscreteError> {
    if table.is_empty() {
        return Err(DiscreteError::EmptySupport);
    }
    let mut mass = 0.0;
    let mut m1 = 0.0;
    let mut m2 = 0.0;
    for (&k, &p) in table {
        if !(p >= 0.0 && p.is_finite()) {
            return Err(DiscreteError::InvalidPmfValue { k, value: p });
        }
        let kf = k as f64;
        mass += p;
        m1 += kf * p;
        m2 += kf * kf * p;
    }
    if (mass - 1.0).abs() > MASS_TOL {
        return Err(DiscreteError::MassNotNormalized { mass });
    }
    Ok((m1, m2 - m1 * m1))
}

/// Variance σ²+1/12 of the embedded density f(x) = p(⌊x⌋).
pub fn embed_variance(spec: &DiscreteSpec) -> f64 {
    spec.variance() + 1.0 / 12.0
}

/// The embedded density f(x) = p(⌊x⌋) itself, for quadrature checks.
pub fn embedded_density(spec: &DiscreteSpec, x: f64) -> f64 {
    if x.abs() >= 9.0e15 {
        return 0.0;
    }
    spec.pmf(x.floor() as i64)
}

/// Tail-set geometry for one (ε, spec) pair: σ_f, the real cut points
/// x_L/x_R, and the four integer edges.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DiscreteTailGeometry {
    pub sigma_f: f64,
    pub x_l: f64,
    pub x_r: f64,
    /// upper edge of the left piece of D_ε: ⌊x_L⌋−1
    pub d_eps_lo: i64,
    /// lower edge of the right piece of D_ε: ⌈x_R⌉
    pub d_eps_hi: i64,
    /// upper edge of the left piece of M_ε: ⌊x_L⌋
    pub m_eps_lo: i64,
    /// lower edge of the right piece of M_ε: ⌊x_R⌋
    pub m_eps_hi: i64,
}

/// σ_f = √(σ²+1/12), x_{L,R} = μ+1/2 ∓ εσ_f, and the floor/ceil edges of
/// D_ε and M_ε, exactly as defined above.
pub fn tail_geometry(eps: Epsilon, spec: &DiscreteSpec) -> DiscreteTailGeometry {
    let sigma_f = embed_variance(spec).sqrt();
    let center = spec.mean() + 0.5;
    let x_l = center - eps.value() * sigma_f;
    let x_r = center + eps.value() * sigma_f;
    let floor_l = clamped_floor(x_l);
    DiscreteTailGeometry {
        sigma_f,
        x_l,
        x_r,
        d_eps_lo: floor_l.saturating_sub(1),
        d_eps_hi: clamped_ceil(x_r),
        m_eps_lo: floor_l,
        m_eps_hi: clamped_floor(x_r),
    }
}

fn clamped_floor(x: f64) -> i64 {
    x.floor() as i64
}

fn clamped_ceil(x: f64) -> i64 {
    x.ceil() as i64
}

/// m_ε = σ_f·max_{k∈M_ε} p(k). On unbounded supports the declared unimodal
/// shape pins the maximum at the inner edge or the mode, so only finitely
/// many pmf values are read.
pub fn discrete_m_eps(eps: Epsilon, spec: &DiscreteSpec) -> Result<f64, DiscreteError> {
    let geo = tail_geometry(eps, spec);
    Ok(geo.sigma_f * max_pmf_over_m_eps(spec, &geo)?)
}

fn max_pmf_over_m_eps(
    spec: &DiscreteSpec,
    geo: &DiscreteTailGeometry,
) -> Result<f64, DiscreteError> {
    match spec.support {
        Support::Finite { lo, hi } => {
            // Finite support: scan both pieces outright.
            let mut best = 0.0_f64;
            let left_hi = geo.m_eps_lo.min(hi);
            for k in lo..=left_hi {
                best = best.max(spec.pmf(k));
            }
            let right_lo = geo.m_eps_hi.max(lo);
            for k in right_lo..=hi {
                best = best.max(spec.pmf(k));
            }
            Ok(best)
        }
        Support::HalfLine { lo } => {
            let PmfShape::Unimodal { mode } = spec.shape else {
                return Err(DiscreteError::UnboundedWithoutStructure);
            };
            let mut best = 0.0_f64;
            if geo.m_eps_lo >= lo {
                // max over [lo, m_eps_lo]: the point nearest the mode.
                best = best.max(spec.pmf(mode.clamp(lo, geo.m_eps_lo)));
            }
            // max over [max(m_eps_hi, lo), ∞): mode if inside, else the edge.
            let right_lo = geo.m_eps_hi.max(lo);
            best = best.max(spec.pmf(mode.max(right_lo)));
            Ok(best)
        }
    }
}

/// Sharp bound Pr(D_ε) ≤ α·m_ε for D_ε = {k ≤ ⌊x_L⌋−1 or k ≥ ⌈x_R⌉},
/// capped at 1. m_ε = 0 yields a zero bound.
pub fn bound_discrete_theorem(
    eps: Epsilon,
    spec: &DiscreteSpec,
) -> Result<ClampedProb, DiscreteError> {
    let m = discrete_m_eps(eps, spec)?;
    if m == 0.0 {
        return Ok(ClampedProb::new(0.0));
    }
    let alpha = bounds::solve_alpha(eps, m)?;
    Ok(ClampedProb::new(alpha * m))
}

/// Components of the symmetric-set bound α·m_ε + p(⌊x_L⌋).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DiscreteCorollary {
    pub alpha_m: f64,
    pub p_floor_x_l: f64,
    /// α·m_ε + p(⌊x_L⌋), uncapped
    pub raw: f64,
}

impl DiscreteCorollary {
    pub fn reported(&self) -> ClampedProb {
        ClampedProb::new(self.raw)
    }
}

/// Bound for the symmetric tail set {(Y−μ−1/2)² ≥ ε²σ_f²}, which exceeds
/// D_ε by exactly the point ⌊x_L⌋: Pr ≤ α·m_ε + p(⌊x_L⌋).
pub fn bound_discrete_corollary(
    eps: Epsilon,
    spec: &DiscreteSpec,
) -> Result<DiscreteCorollary, DiscreteError> {
    let geo = tail_geometry(eps, spec);
    let m = geo.sigma_f * max_pmf_over_m_eps(spec, &geo)?;
    let alpha_m = if m == 0.0 {
        0.0
    } else {
        bounds::solve_alpha(eps, m)? * m
    };
    let p_floor_x_l = spec.pmf(geo.m_eps_lo);
    Ok(DiscreteCorollary {
        alpha_m,
        p_floor_x_l,
        raw: alpha_m + p_floor_x_l,
    })
}

/// Full discrete report for one (ε, spec) pair, for the CLI.
///
/// `theorem_bound` covers the floor/ceil set D_ε; `corollary_bound` covers
/// the symmetric set, which additionally contains ⌊x_L⌋. The reported value
/// is the capped corollary bound.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DiscreteBoundReport {
    pub epsilon: f64,
    pub sigma_f: f64,
    pub m_eps: f64,
    pub x_l: f64,
    pub x_r: f64,
    pub p_floor_x_l: f64,
    pub theorem_bound: f64,
    pub corollary_bound: f64,
    pub chebyshev: f64,
    pub reported: f64,
    pub clamped: bool,
}

pub fn bound_report_discrete(
    eps: Epsilon,
    spec: &DiscreteSpec,
) -> Result<DiscreteBoundReport, DiscreteError> {
    let geo = tail_geometry(eps, spec);
    let theorem = bound_discrete_theorem(eps, spec)?;
    let cor = bound_discrete_corollary(eps, spec)?;
    Ok(DiscreteBoundReport {
        epsilon: eps.value(),
        sigma_f: geo.sigma_f,
        m_eps: discrete_m_eps(eps, spec)?,
        x_l: geo.x_l,
        x_r: geo.x_r,
        p_floor_x_l: cor.p_floor_x_l,
        theorem_bound: theorem.raw,
        corollary_bound: cor.raw,
        chebyshev: bounds::bound_chebyshev_classical(eps),
        reported: cor.reported().value,
        clamped: cor.reported().clamped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::discrete::{binomial, geometric, poisson};

    fn eps(v: f64) -> Epsilon {
        Epsilon::new(v).unwrap()
    }

    #[test]
    fn embed_variance_formula() {
        let spec = poisson(4.0).unwrap();
        // λ=4: σ_f² = 4 + 1/12 = 49/12
        assert!((embed_variance(&spec) - 49.0 / 12.0).abs() < 1e-15);

        let b = binomial(20, 0.5).unwrap();
        assert!((embed_variance(&b) - (5.0 + 1.0 / 12.0)).abs() < 1e-12);
    }

    #[test]
    fn embedded_uniform_slab_has_twelfth_variance() {
        // A unit mass at 0 embeds to the uniform density on [0,1), whose
        // variance is 1/12. The degenerate pmf (σ²=0) is rejected by the
        // spec invariant, so check the embedding arithmetic directly.
        let f = |x: f64| if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 };
        let m1 = crate::quad::integrate(&|x| x * f(x), 0.0, 1.0, 1e-13).value;
        let m2 = crate::quad::integrate(&|x| x * x * f(x), 0.0, 1.0, 1e-13).value;
        assert!((m1 - 0.5).abs() < 1e-12);
        assert!((m2 - m1 * m1 - 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn geometry_unit_sigma_f() {
        // Declared σ² = 1 − 1/12 makes σ_f exactly 1, so the cut points are
        // exact: x_L = −1.5, x_R = 2.5 at ε=2.
        let table = BTreeMap::from([(-1, 11.0 / 24.0), (0, 1.0 / 12.0), (1, 11.0 / 24.0)]);
        let spec =
            DiscreteSpec::from_table_with_moments("three-point", table, 0.0, 1.0 - 1.0 / 12.0)
                .unwrap();
        let g = tail_geometry(eps(2.0), &spec);
        assert_eq!(g.sigma_f, 1.0);
        assert_eq!(g.x_l, -1.5);
        assert_eq!(g.x_r, 2.5);
        assert_eq!(g.d_eps_lo, -3);
        assert_eq!(g.d_eps_hi, 3);
        assert_eq!(g.m_eps_lo, -2);
        assert_eq!(g.m_eps_hi, 2);
    }

    #[test]
    fn geometry_poisson_reference() {
        // λ=4, ε=1: σ_f = √(49/12), x_L ≈ 2.4793, x_R ≈ 6.5207.
        let spec = poisson(4.0).unwrap();
        let g = tail_geometry(eps(1.0), &spec);
        assert!((g.sigma_f - 2.020_725_942_163_690_2).abs() < 1e-14);
        assert!((g.x_l - 2.479_274_057_836_309_8).abs() < 1e-12);
        assert!((g.x_r - 6.520_725_942_163_690_2).abs() < 1e-12);
        assert_eq!(g.m_eps_lo, 2);
        assert_eq!(g.d_eps_hi, 7);
        assert_eq!(g.m_eps_hi, 6);
        assert_eq!(g.d_eps_lo, 1);
    }

    #[test]
    fn geometry_exact_integer_right_edge() {
        // Same unit σ_f, mean 2.5, ε=2: x_R = 5 exactly, so ceil and floor
        // agree and the D/M right edges coincide.
        let table = BTreeMap::from([
            (1, 1.0 / 6.0),
            (2, 1.0 / 3.0),
            (3, 1.0 / 3.0),
            (4, 1.0 / 6.0),
        ]);
        let spec =
            DiscreteSpec::from_table_with_moments("four-point", table, 2.5, 1.0 - 1.0 / 12.0)
                .unwrap();
        let g = tail_geometry(eps(2.0), &spec);
        assert_eq!(g.x_r, 5.0);
        assert_eq!(g.d_eps_hi, 5);
        assert_eq!(g.m_eps_hi, 5);
        assert_eq!(g.x_l, 1.0);
        assert_eq!(g.m_eps_lo, 1);
        assert_eq!(g.d_eps_lo, 0);
    }

    #[test]
    fn m_eps_empty_tail_is_zero() {
        // All mass strictly between the M_ε edges → m_ε = 0.
        let table = BTreeMap::from([(-1, 0.3), (0, 0.4), (1, 0.3)]);
        let spec = DiscreteSpec::from_table("tight", table).unwrap();
        // σ² = 0.6, σ_f ≈ 0.826; ε = 3 puts x_L ≈ −1.98, x_R ≈ 2.98:
        // M_ε = {k ≤ −2 or k ≥ 2} misses the support entirely.
        let m = discrete_m_eps(eps(3.0), &spec).unwrap();
        assert_eq!(m, 0.0);
        let b = bound_discrete_theorem(eps(3.0), &spec).unwrap();
        assert_eq!(b.value, 0.0);
    }

    #[test]
    fn m_eps_poisson_inner_edges() {
        // λ=4, ε=1: M_ε = {k≤2} ∪ {k≥6}; the unimodal max is
        // max(p(2), p(6)) = p(2).
        let spec = poisson(4.0).unwrap();
        let m = discrete_m_eps(eps(1.0), &spec).unwrap();
        let p2 = 0.146_525_111_109_873_44;
        let p6 = 0.104_195_634_567_021_11;
        assert!(spec.pmf(2) > spec.pmf(6));
        assert!((spec.pmf(2) - p2).abs() < 1e-15);
        assert!((spec.pmf(6) - p6).abs() < 1e-15);
        let sigma_f = (49.0_f64 / 12.0).sqrt();
        assert!((m - sigma_f * p2).abs() < 1e-14);
    }

    #[test]
    fn m_eps_geometric_monotone() {
        // Monotone nonincreasing pmf: left piece max is p(0) when the left
        // edge reaches the support, right piece max is the inner edge.
        let spec = geometric(0.3).unwrap();
        let g = tail_geometry(eps(1.0), &spec);
        assert!(g.m_eps_lo >= 0);
        let m = discrete_m_eps(eps(1.0), &spec).unwrap();
        assert!((m - g.sigma_f * spec.pmf(0)).abs() < 1e-15);

        // Large ε: the left piece misses the support; max comes from the
        // right inner edge.
        let g4 = tail_geometry(eps(4.0), &spec);
        assert!(g4.m_eps_lo < 0);
        let m4 = discrete_m_eps(eps(4.0), &spec).unwrap();
        assert!((m4 - g4.sigma_f * spec.pmf(g4.m_eps_hi.max(0))).abs() < 1e-15);
    }

    #[test]
    fn m_eps_unimodal_shortcut_matches_full_scan() {
        // The clamp-to-mode shortcut must agree with a brute scan. Use a
        // finite binomial table as the scan and a closure spec with the
        // same pmf as the shortcut.
        let b = binomial(20, 0.35).unwrap();
        let table: BTreeMap<i64, f64> = (0..=20).map(|k| (k, b.pmf(k))).collect();
        let scan = DiscreteSpec::from_table_with_moments(
            "binomial-table",
            table,
            b.mean(),
            b.variance(),
        )
        .unwrap();
        for &e in &[0.4, 0.9, 1.3, 2.0, 3.1] {
            let lhs = discrete_m_eps(eps(e), &b).unwrap();
            let rhs = discrete_m_eps(eps(e), &scan).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-15 * lhs.max(1.0),
                "eps={e}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn corollary_reduces_to_theorem_without_floor_mass() {
        // Support misses ⌊x_L⌋ → the additive term vanishes.
        let table = BTreeMap::from([(0, 0.5), (1, 0.5)]);
        let spec = DiscreteSpec::from_table("coin", table).unwrap();
        let e = eps(2.0);
        let g = tail_geometry(e, &spec);
        assert!(!spec.support().contains(g.m_eps_lo));
        let t = bound_discrete_theorem(e, &spec).unwrap();
        let c = bound_discrete_corollary(e, &spec).unwrap();
        assert_eq!(c.p_floor_x_l, 0.0);
        assert_eq!(c.raw, t.raw);
    }

    #[test]
    fn poisson_theorem_dominates_exact_tail() {
        let spec = poisson(4.0).unwrap();
        let e = eps(2.0);
        let g = tail_geometry(e, &spec);
        let exact =
            crate::oracles::discrete::exact_tail_edges(&spec, g.d_eps_lo, g.d_eps_hi).unwrap();
        let b = bound_discrete_theorem(e, &spec).unwrap();
        assert!(exact <= b.value + 1e-12, "exact {exact} > bound {}", b.value);
    }

    #[test]
    fn bound_within_classical_chebyshev_for_peaked_pmf() {
        // Mass concentrated near the mean: α·m_ε is far below 1/ε² on the
        // embedded variable.
        let table = BTreeMap::from([(-1, 0.05), (0, 0.9), (1, 0.05)]);
        let spec = DiscreteSpec::from_table("peaked", table).unwrap();
        let e = eps(3.0);
        let b = bound_discrete_theorem(e, &spec).unwrap();
        assert!(b.value <= bounds::bound_chebyshev_classical(e));
    }

    #[test]
    fn rejects_unnormalized_table() {
        let table = BTreeMap::from([(0, 0.5), (1, 0.4)]);
        assert!(matches!(
            DiscreteSpec::from_table("bad", table),
            Err(DiscreteError::MassNotNormalized { .. })
        ));
    }

    #[test]
    fn rejects_negative_pmf() {
        let table = BTreeMap::from([(0, 1.2), (1, -0.2)]);
        assert!(matches!(
            DiscreteSpec::from_table("neg", table),
            Err(DiscreteError::InvalidPmfValue { k: 1, .. })
        ));
    }

    #[test]
    fn rejects_moment_mismatch() {
        let table = BTreeMap::from([(0, 0.5), (2, 0.5)]);
        assert!(matches!(
            DiscreteSpec::from_table_with_moments("off", table, 1.5, 1.0),
            Err(DiscreteError::MomentMismatch { what: "mean", .. })
        ));
    }

    #[test]
    fn rejects_unbounded_support_without_structure() {
        let err = DiscreteSpec::from_closure(
            "bare",
            Arc::new(|_| 0.0),
            Support::HalfLine { lo: 0 },
            1.0,
            1.0,
            PmfShape::Unimodal { mode: 0 },
            None,
        );
        assert!(matches!(err, Err(DiscreteError::UnboundedWithoutStructure)));
    }
}
