//! Schwarz iteration inside every time step (Method 1) on the 1D analytic problem.

use schwarz_etd::analysis::subdomain_norms;
use schwarz_etd::geometry::{decompose_1d, make_grid_1d, Mesh};
use schwarz_etd::harness::builtin_problem;
use schwarz_etd::schwarz::{method1_solve, SolverConfig};
use schwarz_etd::steppers::{Scheme, Subdomains, TimeGrid};

fn main() -> schwarz_etd::Result<()> {
    let problem = builtin_problem("analytic_1d")?;
    let grid = make_grid_1d(2.0, 511)?.with_origin(-1.0);
    let layout = decompose_1d(&grid, 2, 16)?.layout;
    let time = TimeGrid::from_dt(problem.horizon, 1.0 / 80.0)?;
    let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), layout, time)?;
    let exact = problem.exact.clone().expect("analytic problem");
    let reference: Vec<_> = (0..=time.steps)
        .map(|m| {
            ndarray::Array2::from_shape_fn((511, 1), |(i, _)| {
                sys.mesh.eval(exact.as_ref(), [i + 1, 1], time.time(m))
            })
        })
        .collect();

    for scheme in [Scheme::Etd1, Scheme::Etd2] {
        let config = SolverConfig::new(scheme);
        let (tr, logs) = method1_solve(&sys, &config, None)?;
        let err = subdomain_norms(&tr.pieces, &tr.offsets, &reference)?.relative();
        let iters: Vec<usize> = logs.iter().map(|l| l.iterations).collect();
        println!("{scheme} (tol {:e}): relative error {err:.4e}", config.tolerance);
        println!("  iterations per step: {iters:?}");
    }
    Ok(())
}
