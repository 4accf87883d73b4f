//! Schwarz drivers: iteration inside each time step (Method 1) and
//! waveform relaxation over whole time windows (Method 2).
//!
//! Exchange is Jacobi-type: every subdomain reads the previous iterate of its
//! neighbours, so the order in which subdomains are stepped does not matter.

mod config;
mod drivers;
mod rates;
mod traces;

pub use config::{IterationLog, SolverConfig, StopMode, DENOMINATOR_FLOOR};
pub use drivers::{
    initial_traces, method1_advance, method1_solve, method2_solve, StepOutcome, WaveformOutcome,
};
pub use rates::{superlinear_bound, theoretical_rate};
pub use traces::{random_trace_guess, random_traces, TraceSet};
