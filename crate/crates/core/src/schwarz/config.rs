use crate::error::{invalid, Result};
use crate::steppers::Scheme;

/// Relative-update denominators below this switch to absolute updates.
pub const DENOMINATOR_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopMode {
    /// Stop once every interface group passes the relative update test.
    Tolerance,
    /// Run exactly this many iterations.
    FixedIterations(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub scheme: Scheme,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub mode: StopMode,
    pub seed: u64,
    pub window_steps: Option<usize>,
}

impl SolverConfig {
    pub fn new(scheme: Scheme) -> Self {
        Self {
            scheme,
            tolerance: scheme.default_tolerance(),
            max_iterations: 10_000,
            mode: StopMode::Tolerance,
            seed: 0,
            window_steps: None,
        }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn with_max_iterations(mut self, k: usize) -> Self {
        self.max_iterations = k;
        self
    }

    pub fn fixed(mut self, k: usize) -> Self {
        self.mode = StopMode::FixedIterations(k);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_windows(mut self, steps: usize) -> Self {
        self.window_steps = Some(steps);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(invalid("tol", format!("must be positive, got {}", self.tolerance)));
        }
        if self.max_iterations == 0 {
            return Err(invalid("max-iters", "must be at least 1"));
        }
        if self.mode == StopMode::FixedIterations(0) {
            return Err(invalid("fixed-iters", "must be at least 1"));
        }
        if self.window_steps == Some(0) {
            return Err(invalid("window-steps", "must be at least 1"));
        }
        Ok(())
    }

    pub(crate) fn budget(&self) -> usize {
        match self.mode {
            StopMode::Tolerance => self.max_iterations,
            StopMode::FixedIterations(k) => k,
        }
    }
}

/// Per-iteration record of a Schwarz solve.
///
/// Interfaces are the stopping groups of all subdomains in layout order.
/// `errors[0]` belongs to the initial guess; `updates[k]` and `errors[k + 1]`
/// to iteration `k + 1`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IterationLog {
    pub updates: Vec<Vec<f64>>,
    pub errors: Vec<Vec<f64>>,
    pub converged: bool,
    pub iterations: usize,
}

impl IterationLog {
    /// Largest interface update per iteration.
    pub fn max_updates(&self) -> Vec<f64> {
        self.updates.iter().map(|u| max_of(u)).collect()
    }

    /// Largest interface error per logged iterate, starting with the guess.
    pub fn max_errors(&self) -> Vec<f64> {
        self.errors.iter().map(|e| max_of(e)).collect()
    }

    /// Errors divided by the error of the first logged iterate.
    pub fn normalized_errors(&self) -> Vec<f64> {
        let e = self.max_errors();
        match e.first() {
            Some(&e0) if e0 > 0.0 => e.iter().map(|x| x / e0).collect(),
            _ => e,
        }
    }
}

fn max_of(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, &x| m.max(x))
}
