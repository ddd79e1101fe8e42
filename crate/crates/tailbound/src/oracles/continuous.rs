//! One-dimensional continuous oracles: normal, Laplace, uniform,
//! exponential. All are unimodal with finite mean and variance, so the
//! density supremum on the tail set {|x−μ| ≥ εσ} sits on the boundary (or
//! at the support edge), and the tail probability has a closed form.

use super::{Capabilities, OracleError};
use crate::bounds::{Epsilon, MomentSpec1D};
use crate::special::normal_upper_tail;
use std::f64::consts::{PI, SQRT_2};

/// A one-dimensional analytic distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Oracle1D {
    Normal { mean: f64, std_dev: f64 },
    Laplace { mean: f64, scale: f64 },
    Uniform { lo: f64, hi: f64 },
    Exponential { rate: f64 },
}

impl Oracle1D {
    pub fn normal(mean: f64, std_dev: f64) -> Result<Self, OracleError> {
        require_positive("std_dev", std_dev)?;
        require_finite("mean", mean)?;
        Ok(Oracle1D::Normal { mean, std_dev })
    }

    pub fn standard_normal() -> Self {
        Oracle1D::Normal {
            mean: 0.0,
            std_dev: 1.0,
        }
    }

    pub fn laplace(mean: f64, scale: f64) -> Result<Self, OracleError> {
        require_positive("scale", scale)?;
        require_finite("mean", mean)?;
        Ok(Oracle1D::Laplace { mean, scale })
    }

    pub fn uniform(lo: f64, hi: f64) -> Result<Self, OracleError> {
        require_finite("lo", lo)?;
        require_finite("hi", hi)?;
        if !(hi > lo) {
            return Err(OracleError::InvalidParameter {
                name: "hi",
                value: hi,
            });
        }
        Ok(Oracle1D::Uniform { lo, hi })
    }

    /// Uniform on [−√3, √3]: mean 0, variance 1.
    pub fn unit_uniform() -> Self {
        let r = 3.0_f64.sqrt();
        Oracle1D::Uniform { lo: -r, hi: r }
    }

    pub fn exponential(rate: f64) -> Result<Self, OracleError> {
        require_positive("rate", rate)?;
        Ok(Oracle1D::Exponential { rate })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Oracle1D::Normal { .. } => "normal",
            Oracle1D::Laplace { .. } => "laplace",
            Oracle1D::Uniform { .. } => "uniform",
            Oracle1D::Exponential { .. } => "exponential",
        }
    }

    pub fn capabilities(&self) -> Capabilities {
        Capabilities {
            exact_tail: true,
            exact_sup: true,
            exact_entropy: true,
            sampleable: true,
        }
    }

    pub fn mean(&self) -> f64 {
        match *self {
            Oracle1D::Normal { mean, .. } | Oracle1D::Laplace { mean, .. } => mean,
            Oracle1D::Uniform { lo, hi } => 0.5 * (lo + hi),
            Oracle1D::Exponential { rate } => 1.0 / rate,
        }
    }

    pub fn variance(&self) -> f64 {
        match *self {
            Oracle1D::Normal { std_dev, .. } => std_dev * std_dev,
            Oracle1D::Laplace { scale, .. } => 2.0 * scale * scale,
            Oracle1D::Uniform { lo, hi } => (hi - lo) * (hi - lo) / 12.0,
            Oracle1D::Exponential { rate } => 1.0 / (rate * rate),
        }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match *self {
            Oracle1D::Normal { mean, std_dev } => {
                let z = (x - mean) / std_dev;
                (-0.5 * z * z).exp() / (std_dev * (2.0 * PI).sqrt())
            }
            Oracle1D::Laplace { mean, scale } => {
                (-(x - mean).abs() / scale).exp() / (2.0 * scale)
            }
            Oracle1D::Uniform { lo, hi } => {
                if x >= lo && x <= hi {
                    1.0 / (hi - lo)
                } else {
                    0.0
                }
            }
            Oracle1D::Exponential { rate } => {
                if x >= 0.0 {
                    rate * (-rate * x).exp()
                } else {
                    0.0
                }
            }
        }
    }

    /// Exact Pr((X−μ)²/σ² ≥ ε²) for ε ≥ 0.
    ///
    /// normal:       2(1−Φ(ε))
    /// Laplace:      exp(−ε√2)             (σ = b√2)
    /// uniform:      max(0, 1−ε/√3)
    /// exponential:  [1−e^{−(1−ε)}] + e^{−(1+ε)} for ε<1, else e^{−(1+ε)}
    ///               (the left piece leaves the support at ε = 1)
    pub fn exact_tail(&self, eps: f64) -> f64 {
        debug_assert!(eps >= 0.0);
        match *self {
            Oracle1D::Normal { .. } => 2.0 * normal_upper_tail(eps),
            Oracle1D::Laplace { .. } => (-eps * SQRT_2).exp(),
            Oracle1D::Uniform { .. } => (1.0 - eps / 3.0_f64.sqrt()).max(0.0),
            Oracle1D::Exponential { .. } => {
                if eps < 1.0 {
                    (1.0 - (-(1.0 - eps)).exp()) + (-(1.0 + eps)).exp()
                } else {
                    (-(1.0 + eps)).exp()
                }
            }
        }
    }

    /// Essential supremum of the density on {|x−μ| ≥ εσ} for ε ≥ 0; zero
    /// once the tail set misses the support.
    pub fn sup_on_tail(&self, eps: f64) -> f64 {
        debug_assert!(eps >= 0.0);
        match *self {
            Oracle1D::Normal { mean, std_dev } => self.pdf(mean + eps * std_dev),
            Oracle1D::Laplace { mean, .. } => self.pdf(mean + eps * self.std_dev()),
            Oracle1D::Uniform { lo, hi } => {
                if eps < 3.0_f64.sqrt() {
                    1.0 / (hi - lo)
                } else {
                    0.0
                }
            }
            Oracle1D::Exponential { rate } => {
                // Decreasing density: for ε<1 the left tail piece reaches
                // the origin where f = rate; afterwards only the right
                // piece [(1+ε)/rate, ∞) remains.
                if eps < 1.0 {
                    rate
                } else {
                    rate * (-(1.0 + eps)).exp()
                }
            }
        }
    }

    /// σ·‖f‖∞ on the tail set; dimensionless and scale-free.
    pub fn m_eps(&self, eps: f64) -> f64 {
        self.std_dev() * self.sup_on_tail(eps)
    }

    /// The moment data handed to the bound formulas.
    pub fn moment_spec(&self, eps: Epsilon) -> MomentSpec1D {
        MomentSpec1D::new(self.mean(), self.variance(), self.sup_on_tail(eps.value()))
            .expect("oracle moments are always valid")
    }

    /// Closed-form differential entropy in nats.
    pub fn entropy_exact(&self) -> f64 {
        match *self {
            Oracle1D::Normal { std_dev, .. } => 0.5 * (2.0 * PI * std_dev * std_dev).ln() + 0.5,
            Oracle1D::Laplace { scale, .. } => 1.0 + (2.0 * scale).ln(),
            Oracle1D::Uniform { lo, hi } => (hi - lo).ln(),
            Oracle1D::Exponential { rate } => 1.0 - rate.ln(),
        }
    }

    /// Global density supremum ‖f‖∞ over the whole line.
    pub fn sup_global(&self) -> f64 {
        match *self {
            Oracle1D::Normal { std_dev, .. } => 1.0 / (std_dev * (2.0 * PI).sqrt()),
            Oracle1D::Laplace { scale, .. } => 1.0 / (2.0 * scale),
            Oracle1D::Uniform { lo, hi } => 1.0 / (hi - lo),
            Oracle1D::Exponential { rate } => rate,
        }
    }

    /// Window holding all but a negligible share (≪ 1e-12) of the mass.
    pub fn integration_window(&self) -> (f64, f64) {
        match *self {
            Oracle1D::Normal { mean, std_dev } => (mean - 9.0 * std_dev, mean + 9.0 * std_dev),
            Oracle1D::Laplace { mean, scale } => (mean - 42.0 * scale, mean + 42.0 * scale),
            Oracle1D::Uniform { lo, hi } => (lo, hi),
            Oracle1D::Exponential { rate } => (0.0, 42.0 / rate),
        }
    }

    /// Points where the density is not smooth, for quadrature splitting.
    pub fn kinks(&self) -> Vec<f64> {
        match *self {
            Oracle1D::Normal { .. } => vec![],
            Oracle1D::Laplace { mean, .. } => vec![mean],
            Oracle1D::Uniform { lo, hi } => vec![lo, hi],
            Oracle1D::Exponential { .. } => vec![0.0],
        }
    }

    /// One draw via inversion (Box–Muller for the normal). Consumes a fixed
    /// number of generator words per call, so streams are reproducible.
    pub fn sample<R: rand_chacha::rand_core::RngCore>(&self, rng: &mut R) -> f64 {
        match *self {
            Oracle1D::Normal { mean, std_dev } => {
                let u1 = unit_open(rng);
                let u2 = unit_open(rng);
                mean + std_dev * (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
            }
            Oracle1D::Laplace { mean, scale } => {
                let u = unit_open(rng) - 0.5;
                mean - scale * u.signum() * (1.0 - 2.0 * u.abs()).ln()
            }
            Oracle1D::Uniform { lo, hi } => lo + (hi - lo) * unit_open(rng),
            Oracle1D::Exponential { rate } => -unit_open(rng).ln() / rate,
        }
    }
}

/// Uniform draw strictly inside (0, 1): 53 random bits centered half a step
/// off the endpoints, so logs of u and 1−2|u−1/2| stay finite.
fn unit_open<R: rand_chacha::rand_core::RngCore>(rng: &mut R) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

fn require_positive(name: &'static str, value: f64) -> Result<(), OracleError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(OracleError::InvalidParameter { name, value })
    }
}

fn require_finite(name: &'static str, value: f64) -> Result<(), OracleError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(OracleError::InvalidParameter { name, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_tail_reference() {
        let n = Oracle1D::standard_normal();
        assert!((n.exact_tail(2.0) - 0.045_500_263_896_358_414).abs() < 1e-16);
        assert_eq!(n.exact_tail(0.0), 1.0);
    }

    #[test]
    fn normal_sup_is_boundary_density() {
        let n = Oracle1D::standard_normal();
        assert!((n.sup_on_tail(2.0) - 0.053_990_966_513_188_05).abs() < 1e-16);
    }

    #[test]
    fn uniform_tail_and_sup() {
        let u = Oracle1D::unit_uniform();
        assert_eq!(u.exact_tail(2.0), 0.0);
        assert_eq!(u.sup_on_tail(2.0), 0.0);
        assert!((u.sup_on_tail(1.0) - 0.288_675_134_594_812_88).abs() < 1e-15);
        assert!((u.exact_tail(1.0) - (1.0 - 1.0 / 3.0_f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn laplace_tail_reference() {
        let l = Oracle1D::laplace(0.0, 1.0 / SQRT_2).unwrap();
        assert!((l.variance() - 1.0).abs() < 1e-15);
        assert!((l.exact_tail(1.0) - 0.243_116_734_434_214_21).abs() < 1e-15);
    }

    #[test]
    fn exponential_tail_is_scale_free_and_asymmetric() {
        for &rate in &[0.5, 1.0, 3.0] {
            let x = Oracle1D::exponential(rate).unwrap();
            assert!((x.exact_tail(0.5) - 0.616_599_500_435_796_4).abs() < 1e-15);
            assert!((x.exact_tail(2.0) - (-3.0_f64).exp()).abs() < 1e-16);
            // σ·sup: below ε=1 the origin dominates, m_ε = 1.
            assert!((x.m_eps(0.5) - 1.0).abs() < 1e-15);
            assert!((x.m_eps(2.0) - (-3.0_f64).exp()).abs() < 1e-16);
        }
    }

    #[test]
    fn entropies_match_closed_forms() {
        assert!(
            (Oracle1D::standard_normal().entropy_exact() - 1.418_938_533_204_672_7).abs() < 1e-15
        );
        assert_eq!(Oracle1D::uniform(0.0, 1.0).unwrap().entropy_exact(), 0.0);
        let l = Oracle1D::laplace(0.0, 2.0).unwrap();
        assert!((l.entropy_exact() - (1.0 + 4.0_f64.ln())).abs() < 1e-15);
        let e = Oracle1D::exponential(2.0).unwrap();
        assert!((e.entropy_exact() - (1.0 - 2.0_f64.ln())).abs() < 1e-15);
    }

    #[test]
    fn tails_are_monotone_in_eps() {
        for oracle in [
            Oracle1D::standard_normal(),
            Oracle1D::laplace(0.0, 1.0).unwrap(),
            Oracle1D::unit_uniform(),
            Oracle1D::exponential(1.5).unwrap(),
        ] {
            let mut prev = oracle.exact_tail(0.0);
            assert!(prev <= 1.0 && prev >= 0.0);
            let mut e = 0.1;
            while e <= 5.0 {
                let t = oracle.exact_tail(e);
                assert!(t <= prev + 1e-15, "{} not monotone at eps={}", oracle.name(), e);
                assert!((0.0..=1.0).contains(&t));
                prev = t;
                e += 0.1;
            }
        }
    }

    #[test]
    fn sup_is_monotone_in_eps_for_unimodal() {
        for oracle in [
            Oracle1D::standard_normal(),
            Oracle1D::laplace(0.5, 2.0).unwrap(),
            Oracle1D::unit_uniform(),
            Oracle1D::exponential(1.0).unwrap(),
        ] {
            let mut prev = oracle.sup_on_tail(0.0);
            let mut e = 0.1;
            while e <= 5.0 {
                let s = oracle.sup_on_tail(e);
                assert!(s <= prev + 1e-15);
                prev = s;
                e += 0.1;
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(Oracle1D::normal(0.0, 0.0).is_err());
        assert!(Oracle1D::normal(f64::NAN, 1.0).is_err());
        assert!(Oracle1D::laplace(0.0, -1.0).is_err());
        assert!(Oracle1D::uniform(1.0, 1.0).is_err());
        assert!(Oracle1D::exponential(0.0).is_err());
    }

    #[test]
    fn pdf_mass_sanity() {
        // Quick quadrature sanity on each pdf.
        for oracle in [
            Oracle1D::normal(1.0, 2.0).unwrap(),
            Oracle1D::laplace(-0.5, 0.8).unwrap(),
            Oracle1D::uniform(-2.0, 5.0).unwrap(),
            Oracle1D::exponential(2.0).unwrap(),
        ] {
            let (a, b) = oracle.integration_window();
            let mass =
                crate::quad::integrate_with_kinks(&|x| oracle.pdf(x), a, b, &oracle.kinks(), 1e-12)
                    .value;
            assert!((mass - 1.0).abs() < 1e-9, "{} mass {mass}", oracle.name());
        }
    }
}
