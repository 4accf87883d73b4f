use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, Result};

/// Scalar function of a point and a time.
pub type SpaceTimeFn = Arc<dyn Fn(&[f64], f64) -> f64 + Send + Sync>;
/// Scalar function of a point.
pub type SpaceFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Continuous problem `u_t = ν·Δu + f` on an axis-aligned box with Dirichlet
/// data on its boundary.
#[derive(Clone)]
pub struct ProblemSpec {
    pub nu: f64,
    /// Lower corner of the domain, one entry per dimension.
    pub origin: Vec<f64>,
    /// Side lengths, one entry per dimension.
    pub extent: Vec<f64>,
    pub horizon: f64,
    pub source: SpaceTimeFn,
    /// Dirichlet data, evaluated only at boundary points.
    pub boundary: SpaceTimeFn,
    pub initial: SpaceFn,
    pub exact: Option<SpaceTimeFn>,
}

impl ProblemSpec {
    pub fn new(
        nu: f64,
        origin: Vec<f64>,
        extent: Vec<f64>,
        horizon: f64,
        source: SpaceTimeFn,
        boundary: SpaceTimeFn,
        initial: SpaceFn,
    ) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(invalid("nu", format!("must be positive, got {nu}")));
        }
        if origin.is_empty() || origin.len() > 2 || origin.len() != extent.len() {
            return Err(invalid("extent", "expected one or two dimensions"));
        }
        if extent.iter().any(|&l| !(l > 0.0 && l.is_finite())) {
            return Err(invalid("extent", "side lengths must be positive"));
        }
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(invalid("horizon", format!("must be positive, got {horizon}")));
        }
        Ok(Self {
            nu,
            origin,
            extent,
            horizon,
            source,
            boundary,
            initial,
            exact: None,
        })
    }

    pub fn with_exact(mut self, exact: SpaceTimeFn) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    /// Left boundary value `ψ1(t)` of a 1D problem.
    pub fn psi_left(&self, t: f64) -> f64 {
        (self.boundary)(&[self.origin[0]], t)
    }

    /// Right boundary value `ψ2(t)` of a 1D problem.
    pub fn psi_right(&self, t: f64) -> f64 {
        (self.boundary)(&[self.origin[0] + self.extent[0]], t)
    }
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("nu", &self.nu)
            .field("origin", &self.origin)
            .field("extent", &self.extent)
            .field("horizon", &self.horizon)
            .field("exact", &self.exact.is_some())
            .finish_non_exhaustive()
    }
}
