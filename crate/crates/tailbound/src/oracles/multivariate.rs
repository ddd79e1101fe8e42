//! Multivariate oracles. The Gaussian quadratic form (X−μ)ᵀΣ⁻¹(X−μ) follows
//! the chi-squared law with n degrees of freedom whatever Σ is, so the tail
//! and the on-ellipsoid density supremum are both closed-form. The product
//! uniform exists for the entropy checks.

use super::{Capabilities, OracleError};
use crate::bounds::{Epsilon, MomentSpecMulti};
use crate::special::chi_squared_tail;
use std::f64::consts::PI;

/// n-dimensional normal with covariance described by its determinant and
/// trace (all the bounds and checks need).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiNormal {
    dim: usize,
    cov_det: f64,
    cov_trace: f64,
}

impl MultiNormal {
    /// Standard normal on ℝⁿ (Σ = I).
    pub fn standard(dim: usize) -> Result<Self, OracleError> {
        if dim < 1 {
            return Err(OracleError::InvalidParameter {
                name: "dim",
                value: dim as f64,
            });
        }
        Ok(MultiNormal {
            dim,
            cov_det: 1.0,
            cov_trace: dim as f64,
        })
    }

    /// Diagonal covariance.
    pub fn diagonal(variances: &[f64]) -> Result<Self, OracleError> {
        if variances.is_empty() {
            return Err(OracleError::InvalidParameter {
                name: "dim",
                value: 0.0,
            });
        }
        let mut det = 1.0;
        let mut trace = 0.0;
        for &v in variances {
            if !(v > 0.0 && v.is_finite()) {
                return Err(OracleError::InvalidParameter {
                    name: "variance",
                    value: v,
                });
            }
            det *= v;
            trace += v;
        }
        Ok(MultiNormal {
            dim: variances.len(),
            cov_det: det,
            cov_trace: trace,
        })
    }

    /// Bivariate with correlation: Σ = [[v1, ρ√(v1v2)], [ρ√(v1v2), v2]].
    pub fn correlated2(v1: f64, v2: f64, rho: f64) -> Result<Self, OracleError> {
        for (name, v) in [("v1", v1), ("v2", v2)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(OracleError::InvalidParameter { name, value: v });
            }
        }
        if !(rho > -1.0 && rho < 1.0) {
            return Err(OracleError::InvalidParameter {
                name: "rho",
                value: rho,
            });
        }
        Ok(MultiNormal {
            dim: 2,
            cov_det: v1 * v2 * (1.0 - rho * rho),
            cov_trace: v1 + v2,
        })
    }

    pub fn name(&self) -> &'static str {
        "multinormal"
    }

    pub fn capabilities(&self) -> Capabilities {
        Capabilities {
            exact_tail: true,
            exact_sup: true,
            exact_entropy: true,
            sampleable: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cov_det(&self) -> f64 {
        self.cov_det
    }

    pub fn cov_trace(&self) -> f64 {
        self.cov_trace
    }

    /// Exact Pr((X−μ)ᵀΣ⁻¹(X−μ) ≥ ε²) = 1 − F_{χ²_n}(ε²), for ε ≥ 0.
    /// For n = 2 this is exactly exp(−ε²/2).
    pub fn exact_tail(&self, eps: f64) -> f64 {
        debug_assert!(eps >= 0.0);
        chi_squared_tail(self.dim as u32, eps * eps)
    }

    /// Density supremum on the ellipsoid exterior: the density is a
    /// decreasing function of the quadratic form q, so the supremum sits on
    /// the boundary q = ε²: (2π)^{−n/2}·(det Σ)^{−1/2}·exp(−ε²/2).
    pub fn sup_on_tail(&self, eps: f64) -> f64 {
        debug_assert!(eps >= 0.0);
        let n = self.dim as f64;
        (2.0 * PI).powf(-n / 2.0) * self.cov_det.powf(-0.5) * (-eps * eps / 2.0).exp()
    }

    /// m_ε = (det Σ)^{1/2}·‖f‖∞ = (2π)^{−n/2}·exp(−ε²/2); Σ cancels.
    pub fn m_eps(&self, eps: f64) -> f64 {
        let n = self.dim as f64;
        (2.0 * PI).powf(-n / 2.0) * (-eps * eps / 2.0).exp()
    }

    pub fn moment_spec(&self, eps: Epsilon) -> MomentSpecMulti {
        MomentSpecMulti::new(self.dim, self.cov_det, self.sup_on_tail(eps.value()))
            .expect("oracle moments are always valid")
    }

    /// h = ½·ln((2πe)^n·det Σ).
    pub fn entropy_exact(&self) -> f64 {
        let n = self.dim as f64;
        0.5 * (n * (2.0 * PI * std::f64::consts::E).ln() + self.cov_det.ln())
    }
}

/// Product of two independent uniforms, for the multivariate entropy
/// checks. Entropy decomposes as the sum of the marginal entropies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivariateUniform {
    pub width_x: f64,
    pub width_y: f64,
}

impl BivariateUniform {
    pub fn new(width_x: f64, width_y: f64) -> Result<Self, OracleError> {
        for (name, w) in [("width_x", width_x), ("width_y", width_y)] {
            if !(w > 0.0 && w.is_finite()) {
                return Err(OracleError::InvalidParameter { name, value: w });
            }
        }
        Ok(BivariateUniform { width_x, width_y })
    }

    pub fn cov_det(&self) -> f64 {
        (self.width_x * self.width_x / 12.0) * (self.width_y * self.width_y / 12.0)
    }

    pub fn cov_trace(&self) -> f64 {
        self.width_x * self.width_x / 12.0 + self.width_y * self.width_y / 12.0
    }

    pub fn entropy_exact(&self) -> f64 {
        (self.width_x * self.width_y).ln()
    }
}
