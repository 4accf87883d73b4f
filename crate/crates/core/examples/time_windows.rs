//! Waveform relaxation on shorter time windows needs fewer iterations per window.

use schwarz_etd::geometry::{decompose_1d, make_grid_1d, Mesh};
use schwarz_etd::harness::{builtin_problem, exact_levels};
use schwarz_etd::schwarz::{method2_solve, random_trace_guess, SolverConfig};
use schwarz_etd::steppers::{Scheme, Subdomains, TimeGrid};
use schwarz_etd::analysis::subdomain_norms;

fn main() -> schwarz_etd::Result<()> {
    let problem = builtin_problem("analytic_1d")?;
    let grid = make_grid_1d(2.0, 511)?.with_origin(-1.0);
    let layout = decompose_1d(&grid, 2, 4)?.layout;
    let time = TimeGrid::from_dt(problem.horizon, 1.0 / 160.0)?;
    let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), layout, time)?;
    let exact = exact_levels(&problem, &sys).expect("analytic problem");
    let guess = random_trace_guess(&sys.layout, time.steps + 1, 0);

    for window in [None, Some(20), Some(10), Some(5)] {
        let mut config = SolverConfig::new(Scheme::Etd2);
        config.window_steps = window;
        let out = method2_solve(&sys, &config, &guess, None)?;
        let iters: Vec<usize> = out.logs.iter().map(|l| l.iterations).collect();
        let err = subdomain_norms(&out.trajectory.pieces, &out.trajectory.offsets, &exact)?.relative();
        let label = window.map_or("whole interval".to_string(), |w| format!("{w} steps"));
        println!("window {label:>14}: iterations {iters:?}, error {err:.4e}");
    }
    Ok(())
}
