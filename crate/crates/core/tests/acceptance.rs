//! Acceptance criteria, one printed line each.
//!
//! Criteria 5 and 6 are expected to fail: 5 on one reference order that its
//! own reference errors contradict, 6 on its absolute error targets. The test
//! fails if any other criterion fails or if a known red starts passing.

use std::sync::Arc;
use std::time::{Duration, Instant};

use ndarray::Array2;
use schwarz_etd::analysis::{observed_order, subdomain_norms};
use schwarz_etd::geometry::{decompose_1d, decompose_2d, make_grid_1d, Layout, Mesh, OverlapConvention, ProblemSpec};
use schwarz_etd::harness::{builtin_problem, exact_levels, run_experiment, run_single, ExperimentConfig, RunSpec, Solver};
use schwarz_etd::matfunc::{build_laplacian_1d, expm_dense, DirichletLaplacian1D};
use schwarz_etd::schwarz::{
    method1_advance, method1_solve, method2_solve, random_trace_guess, theoretical_rate, SolverConfig, TraceSet,
};
use schwarz_etd::steppers::{coupled_step_direct, etd2_step, solve_monodomain, Scheme, StepWorkspace, Subdomains, TimeGrid};

const KNOWN_RED: &[u32] = &[5, 6];

const C2_TOL: f64 = 0.04;
const C3_TOL: f64 = 0.05;
const TABLE_REL_TOL: f64 = 0.02;
const ORDER_TOL: f64 = 0.05;
const C6_MONO_REL: f64 = 0.01;
const C6_MULTI_REL: f64 = 0.02;
const C6_UNCONVERGED_MIN: f64 = 0.1;
const C7_SLACK: f64 = 1e-10;
const C8_DIRECT_TOL: f64 = 1e-12;
const C8_METHODS_TOL: f64 = 1e-10;
const C8_ORACLE_TOL: f64 = 1e-10;
const C9_FIXED_POINT_TOL: f64 = 1e-12;
const C9_ORDER_TOL: f64 = 0.1;
const C10_TARGET: f64 = 1e-6;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within_rel(value: f64, target: f64, tol: f64) -> bool {
    (value - target).abs() <= tol * target.abs()
}

fn max_diff(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    a.iter().zip(b.iter()).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn cfg(args: &[&str]) -> ExperimentConfig {
    ExperimentConfig::from_args(std::iter::once("acceptance").chain(args.iter().copied())).unwrap()
}

fn error_equation_spec(solver: Solver, scheme: Scheme, cells: usize) -> RunSpec {
    RunSpec {
        id: format!("{solver}-{scheme}-{cells}"),
        problem: "error_equation".into(),
        solver,
        scheme,
        n: 255,
        ny: None,
        dt: 0.01,
        horizon: 1.0,
        split: "2".parse().unwrap(),
        overlap_cells: cells,
        convention: OverlapConvention::Full,
        tol: None,
        max_iters: 10_000,
        fixed_iters: None,
        seed: 0,
        seeds: 5,
        window_steps: None,
    }
}

fn criterion_1() -> Outcome {
    let grid = make_grid_1d(2.0, 255).unwrap();
    let expected = [0.97, 0.94, 0.88, 0.78];
    let pairs: Vec<_> = [1, 2, 4, 8]
        .iter()
        .map(|&c| decompose_1d(&grid, 2, c).unwrap().interfaces[0])
        .collect();
    let start = Instant::now();
    let rates: Vec<f64> = pairs.iter().map(|p| theoretical_rate(p.alpha, p.beta).unwrap()).collect();
    let elapsed = start.elapsed();
    let ok = rates
        .iter()
        .zip(expected)
        .all(|(r, e)| format!("{r:.2}") == format!("{e:.2}"));
    check(
        ok && elapsed < Duration::from_millis(1),
        format!("κ = {:.4?} vs {expected:?} (2 d.p.), {elapsed:?} < 1 ms", rates),
    )
}

fn simulated_rates(solver: Solver, expected: [[f64; 4]; 2], tol: f64, budget: Duration) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (scheme, want) in [Scheme::Etd1, Scheme::Etd2].into_iter().zip(expected) {
        let rates: Vec<f64> = [1, 2, 4, 8]
            .iter()
            .map(|&c| run_single(&error_equation_spec(solver, scheme, c)).unwrap().summary.contraction.unwrap())
            .collect();
        ok &= rates.iter().zip(want).all(|(r, w)| (r - w).abs() <= tol);
        parts.push(format!("{scheme} {:.3?} vs {want:?}", rates));
    }
    let elapsed = start.elapsed();
    check(ok && elapsed < budget, format!("{} (±{tol}), {elapsed:.2?} < {budget:?}", parts.join("; ")))
}

fn criterion_2() -> Outcome {
    simulated_rates(
        Solver::Method2,
        [[0.97, 0.96, 0.92, 0.80], [0.98, 0.96, 0.92, 0.76]],
        C2_TOL,
        Duration::from_secs(30),
    )
}

fn criterion_3() -> Outcome {
    simulated_rates(
        Solver::Method1,
        [[0.91, 0.83, 0.66, 0.38], [0.84, 0.69, 0.47, 0.20]],
        C3_TOL,
        Duration::from_secs(10),
    )
}

// Rows δ = h..16h, columns Δt = 1/40..1/320; orders are the bracketed values.
const TABLE2: [[f64; 4]; 5] = [
    [3.83e-1, 2.46e-1, 1.60e-1, 1.04e-1],
    [3.73e-1, 2.36e-1, 1.51e-1, 9.62e-2],
    [3.53e-1, 2.18e-1, 1.34e-1, 8.18e-2],
    [3.17e-1, 1.87e-1, 1.08e-1, 6.05e-2],
    [2.61e-1, 1.43e-1, 7.62e-2, 3.93e-2],
];
const TABLE2_ORDERS: [[f64; 3]; 5] = [
    [0.64, 0.62, 0.61],
    [0.66, 0.65, 0.65],
    [0.70, 0.70, 0.71],
    [0.77, 0.79, 0.84],
    [0.86, 0.91, 0.96],
];
const TABLE3: [[f64; 4]; 5] = [
    [1.81e-2, 6.40e-3, 2.22e-3, 7.58e-4],
    [1.74e-2, 6.03e-3, 2.03e-3, 6.67e-4],
    [1.62e-2, 5.37e-3, 1.71e-3, 5.21e-4],
    [1.41e-2, 4.34e-3, 1.26e-3, 3.44e-4],
    [1.11e-2, 3.11e-3, 8.20e-4, 2.14e-4],
];
const TABLE3_ORDERS: [[f64; 3]; 5] = [
    [1.50, 1.53, 1.55],
    [1.53, 1.57, 1.61],
    [1.59, 1.65, 1.72],
    [1.70, 1.79, 1.97],
    [1.84, 1.92, 1.94],
];
const GLOBAL_ETD2: [f64; 4] = [5.17e-3, 1.28e-3, 3.21e-4, 8.46e-5];

fn table(recipe: &str, errors: &[[f64; 4]; 5], orders: &[[f64; 3]; 5]) -> (bool, Vec<String>) {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/recipes/").to_string() + recipe;
    let report = run_experiment(&cfg(&["--config", &path])).unwrap();
    let mut ok = true;
    let mut misses = Vec::new();
    for (row, (want_e, want_p)) in errors.iter().zip(orders).enumerate() {
        for col in 0..4 {
            let s = &report.runs[4 * row + col].summary;
            let e = s.linf_error.unwrap();
            if !within_rel(e, want_e[col], TABLE_REL_TOL) {
                ok = false;
                misses.push(format!("δ={}h dt={} error {e:.4e} vs {:.2e}", s.delta_cells, s.dt, want_e[col]));
            }
            if col > 0 {
                let p = s.observed_order.unwrap();
                if (p - want_p[col - 1]).abs() > ORDER_TOL {
                    ok = false;
                    misses.push(format!("δ={}h dt={} order {p:.3} vs {:.2}", s.delta_cells, s.dt, want_p[col - 1]));
                }
            }
        }
    }
    (ok, misses)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let (ok, misses) = table("table2.conf", &TABLE2, &TABLE2_ORDERS);
    let elapsed = start.elapsed();
    let detail = if misses.is_empty() { "all 20 errors within 2%, 15 orders within ±0.05".into() } else { misses.join("; ") };
    check(ok && elapsed < Duration::from_secs(60), format!("{detail}, {elapsed:.2?} < 60s"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (mut ok, mut misses) = table("table3.conf", &TABLE3, &TABLE3_ORDERS);
    let global = run_experiment(&cfg(&[
        "--problem", "analytic_1d", "--solver", "mono", "--scheme", "etd2", "--dt", "0.025,0.0125,0.00625,0.003125",
    ]))
    .unwrap();
    for (r, want) in global.runs.iter().zip(GLOBAL_ETD2) {
        let e = r.summary.linf_error.unwrap();
        if !within_rel(e, want, TABLE_REL_TOL) {
            ok = false;
            misses.push(format!("global dt={} error {e:.4e} vs {want:.2e}", r.summary.dt));
        }
    }
    let elapsed = start.elapsed();
    let detail = if misses.is_empty() {
        "all 20 localized and 4 global errors within 2%, 15 orders within ±0.05".into()
    } else {
        misses.join("; ")
    };
    check(ok && elapsed < Duration::from_secs(60), format!("{detail}, {elapsed:.2?} < 60s"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let target = 2.7910e-3;
    let problem = builtin_problem("analytic_2d").unwrap();
    let n = 127;
    let mesh = Mesh::new(&problem, [n, n]).unwrap();
    let time = TimeGrid::new(problem.horizon, 128).unwrap();
    let mono = solve_monodomain(&problem, mesh, time, Scheme::Etd2).unwrap();
    let sys0 = Subdomains::new(&problem, mesh, Layout::single(2, [n, n]), time).unwrap();
    let exact = exact_levels(&problem, &sys0).unwrap();
    let final_error = |tr: &schwarz_etd::steppers::Trajectory| {
        subdomain_norms(&tr.pieces, &tr.offsets, &exact).unwrap().final_error()
    };
    let mono_err = final_error(&mono);
    let mut ok = within_rel(mono_err, target, C6_MONO_REL);
    let mut parts = vec![format!("mono {mono_err:.4e} vs {target:.4e}")];
    for (p, long) in [(2, 14), (3, 19), (4, 23)] {
        let layout = decompose_2d(n, n, p, p, 9, OverlapConvention::Half).unwrap().layout;
        let sys = Subdomains::new(&problem, mesh, layout, time).unwrap();
        let (m1, _) = method1_solve(&sys, &SolverConfig::new(Scheme::Etd2).fixed(p), None).unwrap();
        let guess = random_trace_guess(&sys.layout, time.steps + 1, 0);
        let short = method2_solve(&sys, &SolverConfig::new(Scheme::Etd2).fixed(p), &guess, None).unwrap();
        let full = method2_solve(&sys, &SolverConfig::new(Scheme::Etd2).fixed(long), &guess, None).unwrap();
        let (e1, e2s, e2l) = (final_error(&m1), final_error(&short.trajectory), final_error(&full.trajectory));
        ok &= within_rel(e1, target, C6_MULTI_REL) && e2s >= C6_UNCONVERGED_MIN && within_rel(e2l, target, C6_MULTI_REL);
        parts.push(format!("{p}x{p}: M1[{p}] {e1:.4e}, M2[{p}] {e2s:.3e}, M2[{long}] {e2l:.4e}"));
    }
    let elapsed = start.elapsed();
    check(ok && elapsed < Duration::from_secs(300), format!("{}, {elapsed:.2?} < 300s", parts.join("; ")))
}

fn criterion_7() -> Outcome {
    let grid = make_grid_1d(2.0, 255).unwrap();
    let problem = builtin_problem("error_equation").unwrap();
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for cells in [1, 2, 4, 8] {
        let d = decompose_1d(&grid, 2, cells).unwrap();
        let kappa = theoretical_rate(d.interfaces[0].alpha, d.interfaces[0].beta).unwrap();
        let time = TimeGrid::from_dt(1.0, 0.01).unwrap();
        let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), d.layout, time).unwrap();
        let counts = sys.slot_counts();
        for scheme in [Scheme::Etd1, Scheme::Etd2] {
            for seed in 0..3 {
                let m1 = {
                    let guess = random_trace_guess(&sys.layout, 1, seed);
                    let zero = TraceSet::zeros(1, &counts);
                    let cfg = SolverConfig::new(scheme).fixed(20);
                    method1_advance(&sys, &cfg, &sys.initial_coeffs(), 0, Some(guess.level(0)), Some(zero.level(0)))
                        .unwrap()
                        .log
                };
                let m2 = {
                    let guess = random_trace_guess(&sys.layout, time.steps + 1, seed);
                    let zero = TraceSet::zeros(time.steps + 1, &counts);
                    let cfg = SolverConfig::new(scheme).fixed(60);
                    method2_solve(&sys, &cfg, &guess, Some(&zero)).unwrap().logs.remove(0)
                };
                for log in [m1, m2] {
                    let e = log.max_errors();
                    for k in 0..=(e.len() - 1) / 2 {
                        let bound = kappa.powi(k as i32) * e[0] + C7_SLACK;
                        worst = worst.max(e[2 * k] / bound);
                        ok &= e[2 * k] <= bound;
                    }
                }
            }
        }
    }
    check(ok, format!("max over runs of e_2k / (κ^k e_0 + 1e-10) = {worst:.4}"))
}

fn criterion_8() -> Outcome {
    let problem = builtin_problem("analytic_1d").unwrap();
    let grid = make_grid_1d(2.0, 255).unwrap().with_origin(-1.0);
    let mut worst_direct: f64 = 0.0;
    let mut worst_methods: f64 = 0.0;
    for scheme in [Scheme::Etd1, Scheme::Etd2] {
        for (p, cells) in [(2, 4), (3, 6)] {
            let layout = decompose_1d(&grid, p, cells).unwrap().layout;
            let time = TimeGrid::from_dt(problem.horizon, 1.0 / 40.0).unwrap();
            let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), layout, time).unwrap();
            let cfg14 = SolverConfig::new(scheme).with_tolerance(1e-14);
            let mut coeffs = sys.initial_coeffs();
            for m in 0..time.steps {
                let direct = coupled_step_direct(&sys, scheme, &coeffs, m).unwrap();
                let iterated = method1_advance(&sys, &cfg14, &coeffs, m, None, None).unwrap();
                let a = sys.assemble(&direct);
                let scale = a.iter().fold(1.0f64, |s, x| s.max(x.abs()));
                worst_direct = worst_direct.max(max_diff(&a, &sys.assemble(&iterated.coeffs)) / scale);
                coeffs = direct;
            }
            let cfg12 = SolverConfig::new(scheme).with_tolerance(1e-12);
            let (m1, _) = method1_solve(&sys, &cfg12, None).unwrap();
            let guess = random_trace_guess(&sys.layout, time.steps + 1, 0);
            let m2 = method2_solve(&sys, &cfg12, &guess, None).unwrap().trajectory;
            let scale = m1.levels.iter().flat_map(|u| u.iter()).fold(1.0f64, |s, x| s.max(x.abs()));
            for (a, b) in m1.levels.iter().zip(&m2.levels) {
                worst_methods = worst_methods.max(max_diff(a, b) / scale);
            }
        }
    }

    // ETD2 step against dense Padé quadrature and a fine RK4 integration.
    let n = 20;
    let dt = 0.02;
    let op = DirichletLaplacian1D::new(n, 1.0, 1.0 / (n + 1) as f64).unwrap();
    let ws = StepWorkspace::new_1d(&op, dt).unwrap();
    let a = op.to_dense();
    let u: Vec<f64> = (0..n).map(|j| (j as f64 * 0.37).sin()).collect();
    let f0: Vec<f64> = (0..n).map(|j| (j as f64 * 0.11).cos()).collect();
    let f1: Vec<f64> = (0..n).map(|j| 2.0 - j as f64 * 0.05).collect();
    let ours = etd2_step(&ws, &u, &f0, &f1).unwrap();
    // exp of the augmented matrix [[dtA, dt·(f1 − f0), dt·f0], [0, 0, 1], [0, 0, 0]] applied to (u, 0, 1).
    let mut big = Array2::<f64>::zeros((n + 2, n + 2));
    for i in 0..n {
        for j in 0..n {
            big[[i, j]] = dt * a[[i, j]];
        }
        big[[i, n]] = dt * (f1[i] - f0[i]);
        big[[i, n + 1]] = dt * f0[i];
    }
    big[[n, n + 1]] = 1.0;
    let e = expm_dense(&big.view()).unwrap();
    let pade: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| e[[i, j]] * u[j]).sum::<f64>() + e[[i, n + 1]])
        .collect();
    let mut y = u.clone();
    let steps = 4096;
    let h = dt / steps as f64;
    let rhs = |t: f64, y: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| (0..n).map(|j| a[[i, j]] * y[j]).sum::<f64>() + f0[i] + (f1[i] - f0[i]) * t / dt)
            .collect()
    };
    let axpy = |y: &[f64], k: &[f64], s: f64| -> Vec<f64> { y.iter().zip(k).map(|(a, b)| a + s * b).collect() };
    for s in 0..steps {
        let t = s as f64 * h;
        let k1 = rhs(t, &y);
        let k2 = rhs(t + h / 2.0, &axpy(&y, &k1, h / 2.0));
        let k3 = rhs(t + h / 2.0, &axpy(&y, &k2, h / 2.0));
        let k4 = rhs(t + h, &axpy(&y, &k3, h));
        for i in 0..n {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    let d = |a: &[f64], b: &[f64]| a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    let (dp, dr) = (d(&ours, &pade), d(&ours, &y));
    let ok = worst_direct <= C8_DIRECT_TOL
        && worst_methods <= C8_METHODS_TOL
        && dp <= C8_ORACLE_TOL
        && dr <= C8_ORACLE_TOL;
    check(
        ok,
        format!(
            "direct vs Method 1 {worst_direct:.2e}, Method 1 vs 2 {worst_methods:.2e}, ETD2 vs Padé {dp:.2e}, vs RK4 {dr:.2e}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut min_entry = f64::INFINITY;
    let mut max_row: f64 = 0.0;
    for n in 2..=64 {
        for dt in [1e-4, 1e-2, 1.0] {
            let a = build_laplacian_1d(n, 1.0, 1.0 / (n + 1) as f64).unwrap().to_dense() * dt;
            let e = expm_dense(&a.view()).unwrap();
            for row in e.rows() {
                min_entry = min_entry.min(row.iter().cloned().fold(f64::INFINITY, f64::min));
                max_row = max_row.max(row.sum());
            }
        }
    }
    let positivity = min_entry >= -1e-14 && max_row <= 1.0 + 1e-13;

    let problem = ProblemSpec::new(
        1.0,
        vec![0.0],
        vec![1.0],
        0.5,
        Arc::new(|_, _| 0.0),
        Arc::new(|x, _| 3.0 - 2.0 * x[0]),
        Arc::new(|x| 3.0 - 2.0 * x[0]),
    )
    .unwrap();
    let grid = make_grid_1d(1.0, 63).unwrap();
    let steady = Array2::from_shape_fn((63, 1), |(i, _)| 3.0 - 2.0 * grid.node(i + 1));
    let time = TimeGrid::new(0.5, 25).unwrap();
    let mut drift: f64 = 0.0;
    for scheme in [Scheme::Etd1, Scheme::Etd2] {
        let layout = decompose_1d(&grid, 3, 3).unwrap().layout;
        let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), layout, time).unwrap();
        let (tr, _) = method1_solve(&sys, &SolverConfig::new(scheme), None).unwrap();
        let mono = solve_monodomain(&problem, Mesh::from_grid(&grid), time, scheme).unwrap();
        for u in tr.levels.iter().chain(&mono.levels) {
            drift = drift.max(max_diff(u, &steady));
        }
    }
    let fixed_point = drift <= C9_FIXED_POINT_TOL;

    let dts = [1.0 / 40.0, 1.0 / 80.0, 1.0 / 160.0, 1.0 / 320.0];
    let mut orders_ok = true;
    let mut shown = Vec::new();
    for (scheme, want) in [(Scheme::Etd1, 1.0), (Scheme::Etd2, 2.0)] {
        let report = run_experiment(&cfg(&[
            "--problem", "analytic_1d", "--solver", "mono", "--scheme", &scheme.to_string(),
            "--dt", "0.025,0.0125,0.00625,0.003125",
        ]))
        .unwrap();
        let errors: Vec<f64> = report.runs.iter().map(|r| r.summary.linf_error.unwrap()).collect();
        let orders = observed_order(&errors, &dts).unwrap();
        orders_ok &= orders.iter().all(|p| (p - want).abs() <= C9_ORDER_TOL);
        shown.push(format!("{scheme} {:.3?}", orders));
    }
    check(
        positivity && fixed_point && orders_ok,
        format!(
            "min entry {min_entry:.1e}, max row sum {max_row:.15}, steady drift {drift:.1e}, orders {}",
            shown.join(", ")
        ),
    )
}

fn criterion_10() -> Outcome {
    let grid = make_grid_1d(2.0, 255).unwrap();
    let problem = builtin_problem("error_equation").unwrap();
    let mut ok = true;
    let mut shown = Vec::new();
    for scheme in [Scheme::Etd1, Scheme::Etd2] {
        let mut counts = Vec::new();
        for horizon in [0.25, 0.5, 1.0, 2.0, 4.0] {
            let layout = decompose_1d(&grid, 2, 8).unwrap().layout;
            let time = TimeGrid::from_dt(horizon, 0.01).unwrap();
            let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), layout, time).unwrap();
            let guess = random_trace_guess(&sys.layout, time.steps + 1, 0);
            let zero = TraceSet::zeros(time.steps + 1, &sys.slot_counts());
            let cfg = SolverConfig::new(scheme).fixed(200);
            let log = method2_solve(&sys, &cfg, &guess, Some(&zero)).unwrap().logs.remove(0);
            let hit = log.normalized_errors().iter().position(|&e| e <= C10_TARGET);
            counts.push(hit.unwrap_or(usize::MAX));
        }
        ok &= counts.iter().all(|&c| c != usize::MAX) && counts.windows(2).all(|w| w[0] <= w[1]);
        shown.push(format!("{scheme} {counts:?}"));
    }
    check(ok, format!("iterations to 1e-6 for T = 0.25..4: {}", shown.join(", ")))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "contraction factor formula", criterion_1),
        (2, "Method 2 simulated rates", criterion_2),
        (3, "Method 1 simulated rates", criterion_3),
        (4, "localized ETD1 errors and orders", criterion_4),
        (5, "localized and global ETD2 errors and orders", criterion_5),
        (6, "2D errors at t = T", criterion_6),
        (7, "iteration error bound", criterion_7),
        (8, "oracle equivalence", criterion_8),
        (9, "structural invariants", criterion_9),
        (10, "superlinear trend in T", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let known = KNOWN_RED.contains(&id);
        let tag = match (out.pass, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
            (true, true) => "PASS (expected to fail)",
        };
        println!("[{tag}] {id:>2} {name}: {} [{:.2?}]", out.detail, start.elapsed());
        if out.pass == known {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
