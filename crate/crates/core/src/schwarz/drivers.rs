use ndarray::Array2;

use super::config::{IterationLog, SolverConfig, StopMode, DENOMINATOR_FLOOR};
use super::traces::TraceSet;
use crate::error::{invalid, Result};
use crate::steppers::{Scheme, Subdomains, Trajectory};

// Flattened (subdomain, group) numbering of interfaces.
struct Groups {
    of_slot: Vec<Vec<usize>>,
    total: usize,
}

impl Groups {
    fn new(sys: &Subdomains) -> Self {
        let mut of_slot = Vec::with_capacity(sys.len());
        let mut total = 0;
        for l in &sys.locals {
            of_slot.push(l.slots().iter().map(|r| total + r.group).collect());
            total += l.bounds().groups();
        }
        Self {
            of_slot,
            total,
        }
    }

    // Accumulates max |a − b| (or max |a| when `b` is None) per group.
    fn fold(&self, acc: &mut [f64], a: &[Vec<f64>], b: Option<&[Vec<f64>]>) {
        for (s, slots) in a.iter().enumerate() {
            for (k, &v) in slots.iter().enumerate() {
                let d = match b {
                    Some(b) => (v - b[s][k]).abs(),
                    None => v.abs(),
                };
                let g = self.of_slot[s][k];
                acc[g] = acc[g].max(d);
            }
        }
    }

    fn passes(&self, updates: &[f64], denominators: &[f64], tol: f64) -> bool {
        updates.iter().zip(denominators).all(|(&u, &d)| {
            if d < DENOMINATOR_FLOOR {
                u < tol
            } else {
                u / d < tol
            }
        })
    }
}

/// Result of one Method 1 time step.
#[derive(Debug, Clone)]
pub struct StepOutcome {
    /// Subdomain states at `t_{m+1}` as sine coefficients.
    pub coeffs: Vec<Array2<f64>>,
    /// Interface values read from those states.
    pub traces: Vec<Vec<f64>>,
    pub log: IterationLog,
}

/// Schwarz iteration inside the step `t_m → t_{m+1}`.
///
/// Without an explicit guess the iteration starts from the traces at `t_m`
/// (ETD1) or from the ETD1-type predictor `e^{dtA}u + dt·φ1(dtA)F(t_m)` (ETD2).
/// `reference` enables error logging against known interface values.
pub fn method1_advance(
    sys: &Subdomains,
    config: &SolverConfig,
    coeffs: &[Array2<f64>],
    m: usize,
    guess: Option<&[Vec<f64>]>,
    reference: Option<&[Vec<f64>]>,
) -> Result<StepOutcome> {
    config.validate()?;
    if m >= sys.time.steps {
        return Err(invalid("m", format!("step {m} is past the last level")));
    }
    let scheme = config.scheme;
    let groups = Groups::new(sys);
    let now = sys.traces(coeffs);
    let f_now = sys.forcings(m, &now)?;
    let mut v = match guess {
        Some(g) => g.to_vec(),
        None => match scheme {
            Scheme::Etd1 => now,
            Scheme::Etd2 => {
                let pred: Vec<_> = sys
                    .locals
                    .iter()
                    .zip(coeffs)
                    .zip(&f_now)
                    .map(|((l, c), f)| l.workspace().predictor(c, f))
                    .collect();
                sys.traces(&pred)
            }
        },
    };
    let mut denominators = vec![0.0; groups.total];
    groups.fold(&mut denominators, &v, None);
    let mut log = IterationLog::default();
    let log_error = |log: &mut IterationLog, v: &[Vec<f64>]| {
        if let Some(r) = reference {
            let mut e = vec![0.0; groups.total];
            groups.fold(&mut e, v, Some(r));
            log.errors.push(e);
        }
    };
    log_error(&mut log, &v);
    let mut states = coeffs.to_vec();
    for _ in 0..config.budget() {
        let next = sys.step_all(scheme, coeffs, m, &f_now, &v)?;
        let w = sys.traces(&next);
        let mut upd = vec![0.0; groups.total];
        groups.fold(&mut upd, &w, Some(&v));
        log.iterations += 1;
        log.converged = groups.passes(&upd, &denominators, config.tolerance);
        log.updates.push(upd);
        log_error(&mut log, &w);
        v = w;
        states = next;
        if config.mode == StopMode::Tolerance && log.converged {
            break;
        }
    }
    Ok(StepOutcome {
        coeffs: states,
        traces: v,
        log,
    })
}

/// Method 1 over the whole time grid.
///
/// `guess`, when given, supplies the starting traces for every step: its level
/// `m + 1` seeds the step `t_m → t_{m+1}`.
pub fn method1_solve(
    sys: &Subdomains,
    config: &SolverConfig,
    guess: Option<&TraceSet>,
) -> Result<(Trajectory, Vec<IterationLog>)> {
    let mut coeffs = sys.initial_coeffs();
    let mut levels = vec![sys.assemble(&coeffs)];
    let mut pieces = vec![sys.physical(&coeffs)];
    let mut logs = Vec::with_capacity(sys.time.steps);
    for m in 0..sys.time.steps {
        let g = guess.map(|g| g.level(m + 1));
        let out = method1_advance(sys, config, &coeffs, m, g, None)?;
        coeffs = out.coeffs;
        levels.push(sys.assemble(&coeffs));
        pieces.push(sys.physical(&coeffs));
        logs.push(out.log);
    }
    Ok((
        Trajectory {
            time: sys.time,
            levels,
            pieces,
            offsets: sys.offsets(),
        },
        logs,
    ))
}

/// Output of waveform relaxation.
#[derive(Debug, Clone)]
pub struct WaveformOutcome {
    pub trajectory: Trajectory,
    /// Interface values at every level from the final iterate.
    pub traces: TraceSet,
    /// One log per time window.
    pub logs: Vec<IterationLog>,
}

/// Global-in-time Schwarz waveform relaxation.
///
/// Each iteration marches every subdomain across the whole window with the
/// neighbour traces of the previous iterate, then exchanges the new traces at
/// every level. The window's first level is pinned to the state it starts
/// from, so level 0 always carries the initial condition. Errors are logged
/// when `reference` is given; they are max-in-time per interface.
pub fn method2_solve(
    sys: &Subdomains,
    config: &SolverConfig,
    guess: &TraceSet,
    reference: Option<&TraceSet>,
) -> Result<WaveformOutcome> {
    config.validate()?;
    let steps = sys.time.steps;
    if guess.len() != steps + 1 || guess.counts() != sys.slot_counts() {
        return Err(invalid(
            "guess",
            format!("need {} levels with {:?} slots", steps + 1, sys.slot_counts()),
        ));
    }
    let scheme = config.scheme;
    let groups = Groups::new(sys);
    let width = config.window_steps.unwrap_or(steps).min(steps);

    let initial: Vec<Array2<f64>> = sys.locals.iter().map(|l| l.initial_state().clone()).collect();
    let mut start = sys.initial_coeffs();
    let mut all_traces = guess.clone();
    all_traces.levels[0] = initial_traces(sys, &initial);
    let mut levels = vec![sys.assemble(&start)];
    let mut pieces = vec![sys.physical(&start)];
    let mut logs = Vec::new();

    let mut a = 0;
    while a < steps {
        let b = (a + width).min(steps);
        let pinned = all_traces.levels[a].clone();
        let mut g: Vec<Vec<Vec<f64>>> = guess.levels[a + 1..=b].to_vec();
        let mut denominators = vec![0.0; groups.total];
        for lvl in &g {
            groups.fold(&mut denominators, lvl, None);
        }
        let mut log = IterationLog::default();
        let log_error = |log: &mut IterationLog, g: &[Vec<Vec<f64>>]| {
            if let Some(r) = reference {
                let mut e = vec![0.0; groups.total];
                for (k, lvl) in g.iter().enumerate() {
                    groups.fold(&mut e, lvl, Some(r.level(a + 1 + k)));
                }
                log.errors.push(e);
            }
        };
        log_error(&mut log, &g);
        let mut window_states: Vec<Vec<Array2<f64>>> = Vec::new();
        for _ in 0..config.budget() {
            window_states = march(sys, scheme, &start, a, &pinned, &g)?;
            let new: Vec<Vec<Vec<f64>>> = window_states.iter().map(|c| sys.traces(c)).collect();
            let mut upd = vec![0.0; groups.total];
            for (n, o) in new.iter().zip(&g) {
                groups.fold(&mut upd, n, Some(o));
            }
            log.iterations += 1;
            log.converged = groups.passes(&upd, &denominators, config.tolerance);
            log.updates.push(upd);
            log_error(&mut log, &new);
            g = new;
            if config.mode == StopMode::Tolerance && log.converged {
                break;
            }
        }
        for (k, c) in window_states.iter().enumerate() {
            levels.push(sys.assemble(c));
            pieces.push(sys.physical(c));
            all_traces.levels[a + 1 + k] = g[k].clone();
        }
        start = window_states.pop().unwrap_or(start);
        logs.push(log);
        a = b;
    }
    Ok(WaveformOutcome {
        trajectory: Trajectory {
            time: sys.time,
            levels,
            pieces,
            offsets: sys.offsets(),
        },
        traces: all_traces,
        logs,
    })
}

// Marches all subdomains from level `a` through the window with fixed traces.
fn march(
    sys: &Subdomains,
    scheme: Scheme,
    start: &[Array2<f64>],
    a: usize,
    pinned: &[Vec<f64>],
    g: &[Vec<Vec<f64>>],
) -> Result<Vec<Vec<Array2<f64>>>> {
    let mut out: Vec<Vec<Array2<f64>>> = vec![Vec::with_capacity(sys.len()); g.len()];
    for (s, l) in sys.locals.iter().enumerate() {
        let mut c = start[s].clone();
        let mut f_now = l.forcing(a, &pinned[s])?;
        for (k, lvl) in g.iter().enumerate() {
            let f_next = l.forcing(a + k + 1, &lvl[s])?;
            c = l.step(scheme, &c, &f_now, &f_next);
            out[k].push(c.clone());
            f_now = f_next;
        }
    }
    Ok(out)
}

/// Interface values read directly from physical subdomain states.
pub fn initial_traces(sys: &Subdomains, states: &[Array2<f64>]) -> Vec<Vec<f64>> {
    sys.locals
        .iter()
        .map(|l| l.slots().iter().map(|r| states[r.owner][r.owner_local]).collect())
        .collect()
}
