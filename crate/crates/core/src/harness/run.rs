use ndarray::Array2;

use super::config::{ExperimentConfig, Solver, Split};
use super::problems::builtin_problem;
use crate::analysis::{per_iteration_rate, subdomain_norms};
use crate::error::Result;
use crate::geometry::{
    decompose_1d, decompose_2d, make_grid_1d, Layout, Mesh, OverlapConvention, ProblemSpec,
};
use crate::schwarz::{
    method1_advance, method1_solve, method2_solve, random_trace_guess, IterationLog, SolverConfig,
    TraceSet,
};
use crate::steppers::{solve_monodomain, Scheme, Subdomains, TimeGrid, Trajectory};

/// Default budget of a Method 1 rate study (first time level only).
pub const METHOD1_RATE_BUDGET: usize = 20;
/// Default budget of a Method 2 rate study.
pub const METHOD2_RATE_BUDGET: usize = 60;

/// One point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub id: String,
    pub problem: String,
    pub solver: Solver,
    pub scheme: Scheme,
    pub n: usize,
    pub ny: Option<usize>,
    pub dt: f64,
    pub horizon: f64,
    pub split: Split,
    pub overlap_cells: usize,
    pub convention: OverlapConvention,
    pub tol: Option<f64>,
    pub max_iters: usize,
    pub fixed_iters: Option<usize>,
    pub seed: u64,
    pub seeds: usize,
    pub window_steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub run_id: String,
    pub iteration: usize,
    pub time_level: usize,
    pub interface: usize,
    pub raw_update: Option<f64>,
    pub normalized_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub run_id: String,
    pub delta_cells: usize,
    pub dt: f64,
    pub horizon: f64,
    pub split: Split,
    pub scheme: Scheme,
    pub solver: Solver,
    pub contraction: Option<f64>,
    pub linf_error: Option<f64>,
    pub observed_order: Option<f64>,
    pub iters_used: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub summary: RunSummary,
    pub decay: Vec<DecayRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub runs: Vec<RunResult>,
}

/// Expands a configuration into its sweep points, in output order.
pub fn sweep(cfg: &ExperimentConfig) -> Vec<RunSpec> {
    let mut out = Vec::new();
    for &scheme in &cfg.schemes {
        for &horizon in &cfg.horizons {
            for &split in &cfg.subdomains {
                for &overlap_cells in &cfg.overlap_cells {
                    for &dt in &cfg.dts {
                        out.push(RunSpec {
                            id: format!("run{:03}", out.len()),
                            problem: cfg.problem.clone(),
                            solver: cfg.solver,
                            scheme,
                            n: cfg.n,
                            ny: cfg.ny,
                            dt,
                            horizon,
                            split,
                            overlap_cells,
                            convention: cfg.overlap_convention,
                            tol: cfg.tol,
                            max_iters: cfg.max_iters,
                            fixed_iters: cfg.fixed_iters,
                            seed: cfg.seed,
                            seeds: cfg.seeds,
                            window_steps: cfg.window_steps,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Runs every sweep point and fills in observed orders between successive
/// halvings of `dt` that share all other parameters.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let specs = sweep(cfg);
    let mut runs = Vec::with_capacity(specs.len());
    for spec in &specs {
        runs.push(run_single(spec)?);
    }
    for i in 1..runs.len() {
        let (a, b) = (&specs[i - 1], &specs[i]);
        let same = a.scheme == b.scheme
            && a.horizon == b.horizon
            && a.split == b.split
            && a.overlap_cells == b.overlap_cells;
        if !same || ((a.dt / b.dt) - 2.0).abs() > 1e-9 {
            continue;
        }
        if let (Some(e0), Some(e1)) = (runs[i - 1].summary.linf_error, runs[i].summary.linf_error) {
            if e0 > 0.0 && e1 > 0.0 {
                runs[i].summary.observed_order = Some((e0 / e1).log2());
            }
        }
    }
    Ok(ExperimentReport { runs })
}

/// Builds the problem, mesh, layout and time grid of a sweep point.
pub fn setup(spec: &RunSpec) -> Result<(ProblemSpec, Subdomains)> {
    let mut problem = builtin_problem(&spec.problem)?;
    problem.horizon = spec.horizon;
    let time = TimeGrid::from_dt(spec.horizon, spec.dt)?;
    let (mesh, layout) = if problem.dim() == 1 {
        let grid = make_grid_1d(problem.extent[0], spec.n)?.with_origin(problem.origin[0]);
        let layout = match spec.solver {
            Solver::Mono => Layout::single(1, [spec.n, 1]),
            _ => decompose_1d(&grid, spec.split.px, spec.overlap_cells)?.layout,
        };
        (Mesh::from_grid(&grid), layout)
    } else {
        let shape = [spec.n, spec.ny.unwrap_or(spec.n)];
        let layout = match spec.solver {
            Solver::Mono => Layout::single(2, shape),
            _ => {
                decompose_2d(
                    shape[0],
                    shape[1],
                    spec.split.px,
                    spec.split.py,
                    spec.overlap_cells,
                    spec.convention,
                )?
                .layout
            }
        };
        (Mesh::new(&problem, shape)?, layout)
    };
    let sys = Subdomains::new(&problem, mesh, layout, time)?;
    Ok((problem, sys))
}

/// Exact solution sampled on the mesh at every time level.
pub fn exact_levels(problem: &ProblemSpec, sys: &Subdomains) -> Option<Vec<Array2<f64>>> {
    let exact = problem.exact.as_ref()?;
    let mesh = &sys.mesh;
    Some(
        (0..=sys.time.steps)
            .map(|m| {
                let t = sys.time.time(m);
                Array2::from_shape_fn((mesh.shape[0], mesh.shape[1]), |(i, j)| {
                    mesh.eval(exact.as_ref(), [i + 1, j + 1], t)
                })
            })
            .collect(),
    )
}

/// Error of a trajectory over every subdomain's own nodes: relative
/// space-time max in 1D, max at `t = T` in 2D.
pub fn trajectory_error(problem: &ProblemSpec, sys: &Subdomains, tr: &Trajectory) -> Result<Option<f64>> {
    let Some(exact) = exact_levels(problem, sys) else {
        return Ok(None);
    };
    let report = subdomain_norms(&tr.pieces, &tr.offsets, &exact)?;
    Ok(Some(if problem.dim() == 1 {
        report.relative()
    } else {
        report.final_error()
    }))
}

pub fn run_single(spec: &RunSpec) -> Result<RunResult> {
    let (problem, sys) = setup(spec)?;
    let tol = spec.tol.unwrap_or(spec.scheme.default_tolerance());
    let mut config = SolverConfig::new(spec.scheme)
        .with_tolerance(tol)
        .with_max_iterations(spec.max_iters)
        .with_seed(spec.seed);
    config.window_steps = spec.window_steps;
    let rate_study = spec.problem == "error_equation" && spec.solver != Solver::Mono;
    if let Some(k) = spec.fixed_iters {
        config = config.fixed(k);
    } else if rate_study {
        config = config.fixed(match spec.solver {
            Solver::Method1 => METHOD1_RATE_BUDGET,
            _ => METHOD2_RATE_BUDGET,
        });
    }
    let mut summary = RunSummary {
        run_id: spec.id.clone(),
        delta_cells: spec.overlap_cells,
        dt: spec.dt,
        horizon: spec.horizon,
        split: spec.split,
        scheme: spec.scheme,
        solver: spec.solver,
        contraction: None,
        linf_error: None,
        observed_order: None,
        iters_used: 0,
    };
    let mut decay = Vec::new();
    let levels = sys.time.steps + 1;
    let counts = sys.slot_counts();
    match (spec.solver, rate_study) {
        (Solver::Mono, _) => {
            let tr = solve_monodomain(&problem, sys.mesh, sys.time, spec.scheme)?;
            summary.linf_error = trajectory_error(&problem, &sys, &tr)?;
        }
        (Solver::Method1, true) => {
            let zero = TraceSet::zeros(1, &counts);
            let mut rates = Vec::new();
            for k in 0..spec.seeds {
                let guess = random_trace_guess(&sys.layout, 1, spec.seed + k as u64);
                let out = method1_advance(
                    &sys,
                    &config,
                    &sys.initial_coeffs(),
                    0,
                    Some(guess.level(0)),
                    Some(zero.level(0)),
                )?;
                if k == 0 {
                    summary.iters_used = out.log.iterations;
                }
                rates.push(per_iteration_rate(&out.log.max_errors())?);
                push_rows(&mut decay, &format!("{}/s{k}", spec.id), 0, &out.log);
            }
            summary.contraction = Some(mean(&rates));
        }
        (Solver::Method2, true) => {
            let zero = TraceSet::zeros(levels, &counts);
            let mut rates = Vec::new();
            for k in 0..spec.seeds {
                let guess = random_trace_guess(&sys.layout, levels, spec.seed + k as u64);
                let out = method2_solve(&sys, &config, &guess, Some(&zero))?;
                if k == 0 {
                    summary.iters_used = out.logs.iter().map(|l| l.iterations).sum();
                    summary.linf_error = trajectory_error(&problem, &sys, &out.trajectory)?;
                }
                rates.push(per_iteration_rate(&out.logs[0].max_errors())?);
                let id = format!("{}/s{k}", spec.id);
                let mut start = 0;
                for log in &out.logs {
                    push_rows(&mut decay, &id, start, log);
                    start += spec.window_steps.unwrap_or(sys.time.steps);
                }
            }
            summary.contraction = Some(mean(&rates));
        }
        (Solver::Method1, false) => {
            let (tr, logs) = method1_solve(&sys, &config, None)?;
            summary.iters_used = logs.iter().map(|l| l.iterations).sum();
            summary.linf_error = trajectory_error(&problem, &sys, &tr)?;
            for (m, log) in logs.iter().enumerate() {
                push_rows(&mut decay, &spec.id, m, log);
            }
        }
        (Solver::Method2, false) => {
            let guess = random_trace_guess(&sys.layout, levels, spec.seed);
            let out = method2_solve(&sys, &config, &guess, None)?;
            summary.iters_used = out.logs.iter().map(|l| l.iterations).sum();
            summary.linf_error = trajectory_error(&problem, &sys, &out.trajectory)?;
            let mut start = 0;
            for log in &out.logs {
                push_rows(&mut decay, &spec.id, start, log);
                start += spec.window_steps.unwrap_or(sys.time.steps);
            }
        }
    }
    Ok(RunResult { summary, decay })
}

fn push_rows(rows: &mut Vec<DecayRow>, run_id: &str, time_level: usize, log: &IterationLog) {
    let first = log.errors.first();
    let normalized = |k: usize, i: usize| -> Option<f64> {
        let e0 = first?.get(i).copied()?;
        let e = log.errors.get(k)?.get(i).copied()?;
        Some(if e0 > 0.0 { e / e0 } else { e })
    };
    if let Some(e0) = first {
        for i in 0..e0.len() {
            rows.push(DecayRow {
                run_id: run_id.to_string(),
                iteration: 0,
                time_level,
                interface: i,
                raw_update: None,
                normalized_error: normalized(0, i),
            });
        }
    }
    for (k, upd) in log.updates.iter().enumerate() {
        for (i, &u) in upd.iter().enumerate() {
            rows.push(DecayRow {
                run_id: run_id.to_string(),
                iteration: k + 1,
                time_level,
                interface: i,
                raw_update: Some(u),
                normalized_error: normalized(k + 1, i),
            });
        }
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}
