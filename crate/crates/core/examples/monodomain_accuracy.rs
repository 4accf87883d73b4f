//! Global ETD1/ETD2 on the 1D analytic problem: errors and observed orders.

use schwarz_etd::analysis::{linf_norms, observed_order};
use schwarz_etd::geometry::{make_grid_1d, Mesh};
use schwarz_etd::harness::builtin_problem;
use schwarz_etd::steppers::{solve_monodomain, Scheme, TimeGrid};

fn main() -> schwarz_etd::Result<()> {
    let problem = builtin_problem("analytic_1d")?;
    let grid = make_grid_1d(2.0, 511)?.with_origin(-1.0);
    let mesh = Mesh::from_grid(&grid);
    let exact = problem.exact.clone().expect("analytic problem");
    let dts = [1.0 / 40.0, 1.0 / 80.0, 1.0 / 160.0, 1.0 / 320.0];

    for scheme in [Scheme::Etd1, Scheme::Etd2] {
        let mut errors = Vec::new();
        for &dt in &dts {
            let time = TimeGrid::from_dt(problem.horizon, dt)?;
            let tr = solve_monodomain(&problem, mesh, time, scheme)?;
            let reference: Vec<_> = (0..=time.steps)
                .map(|m| {
                    ndarray::Array2::from_shape_fn((511, 1), |(i, _)| {
                        mesh.eval(exact.as_ref(), [i + 1, 1], time.time(m))
                    })
                })
                .collect();
            errors.push(linf_norms(&tr.levels, &reference)?.relative());
        }
        let orders = observed_order(&errors, &dts)?;
        println!("{scheme}:");
        for (k, (dt, e)) in dts.iter().zip(&errors).enumerate() {
            let rate = if k == 0 { String::new() } else { format!(" ({:.2})", orders[k - 1]) };
            println!("  dt = 1/{:<4} error {e:.4e}{rate}", (1.0 / dt).round());
        }
    }
    Ok(())
}
