//! Monodomain and subdomain ETD1/ETD2 steps.
//!
//! With `A = S·Λ·S` the sine eigensystem, one step in coefficient space is
//! `ĉ⁺ = e^{dtΛ}ĉ + dt·φ1(dtΛ)F̂` (ETD1) or
//! `ĉ⁺ = e^{dtΛ}ĉ + dt·φ1(dtΛ)F̂_m + dt·φ2(dtΛ)(F̂_{m+1} − F̂_m)` (ETD2).

mod coupled;
mod local;
mod workspace;

pub use coupled::{coupled_step_direct, Subdomains, MAX_CONDITION};
pub use local::{local_etd_step, LocalProblem};
pub use workspace::{etd1_step, etd2_step, Scheme, StepWorkspace, TimeGrid};

use ndarray::Array2;

use crate::error::Result;
use crate::geometry::{Layout, Mesh, ProblemSpec};

/// Physical fields at every time level `t_0..t_M`.
///
/// `levels` holds the global field assembled from subdomain cores;
/// `pieces[m][s]` is subdomain `s`'s own state at level `m`, whose first node
/// sits at zero-based global index `offsets[s]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub time: TimeGrid,
    pub levels: Vec<Array2<f64>>,
    pub pieces: Vec<Vec<Array2<f64>>>,
    pub offsets: Vec<[usize; 2]>,
}

/// Monodomain ETD solve over the whole time grid.
pub fn solve_monodomain(
    problem: &ProblemSpec,
    mesh: Mesh,
    time: TimeGrid,
    scheme: Scheme,
) -> Result<Trajectory> {
    let layout = Layout::single(mesh.dim, mesh.shape);
    let sys = Subdomains::new(problem, mesh, layout, time)?;
    let local = &sys.locals[0];
    let mut c = local.to_coeffs(local.initial_state());
    let mut levels = Vec::with_capacity(time.steps + 1);
    levels.push(local.initial_state().clone());

    let mut f_now = local.forcing(0, &[])?;
    for m in 0..time.steps {
        let f_next = local.forcing(m + 1, &[])?;
        c = local.step(scheme, &c, &f_now, &f_next);
        levels.push(local.to_physical(&c));
        f_now = f_next;
    }
    Ok(Trajectory {
        time,
        pieces: levels.iter().map(|u| vec![u.clone()]).collect(),
        levels,
        offsets: vec![[0, 0]],
    })
}
