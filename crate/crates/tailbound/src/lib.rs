//! Tail probability bounds that sharpen the classical moment inequalities
//! when the supremum of the density on the tail set is known, together with
//! the machinery to check them: analytic distribution oracles, quadrature
//! entropy estimates, Monte Carlo tail estimates, and a sweep engine that
//! emits comparison tables as CSV or JSON.
//!
//! Layout:
//!
//! - [`bounds`] — the bound formulas themselves, pure functions of
//!   (ε, moments, supremum).
//! - [`discrete`] — integer-valued variants via the piecewise-constant
//!   embedding f(x) = p(⌊x⌋).
//! - [`oracles`] — distributions with exact tails, suprema, entropies,
//!   and samplers; the ground truth the bounds are validated against.
//! - [`quad`] — step-halving Simpson quadrature with kink splitting.
//! - [`report`] — ε-grid sweeps serialized as CSV/JSON.
//! - [`verify`] — the runnable self-check suite behind `tailbound verify`.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod discrete;
pub mod oracles;
pub mod quad;
pub mod report;
pub mod special;
pub mod verify;

pub use bounds::{BoundError, BoundReport, ClampedProb, Epsilon, MomentSpec1D, MomentSpecMulti};
