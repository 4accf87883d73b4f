use ndarray::{Array1, Array2};

use super::workspace::{Scheme, StepWorkspace, TimeGrid};
use crate::error::{Error, Result};
use crate::geometry::{InterfaceRead, Mesh, ProblemSpec, SubdomainBox};
use crate::matfunc::{DirichletLaplacian1D, DirichletLaplacian2D};

/// One subdomain's ODE system on a fixed time grid.
///
/// States are kept as sine coefficients. The source term plus physical
/// boundary data is transformed once per time level; interface traces are
/// injected on top of it at every evaluation.
#[derive(Debug, Clone)]
pub struct LocalProblem {
    ws: StepWorkspace,
    bx: SubdomainBox,
    slot_weights: Vec<f64>,
    base: Vec<Array2<f64>>,
    initial: Array2<f64>,
}

impl LocalProblem {
    pub fn new(problem: &ProblemSpec, mesh: &Mesh, bx: &SubdomainBox, time: &TimeGrid) -> Result<Self> {
        let [nx, ny] = bx.shape();
        let ws = if mesh.dim == 1 {
            StepWorkspace::new_1d(&DirichletLaplacian1D::new(nx, problem.nu, mesh.h[0])?, time.dt)?
        } else {
            let ax = DirichletLaplacian1D::new(nx, problem.nu, mesh.h[0])?;
            let ay = DirichletLaplacian1D::new(ny, problem.nu, mesh.h[1])?;
            StepWorkspace::new_2d(&DirichletLaplacian2D::new(ax, ay), time.dt)?
        };
        let weight = |node: [usize; 2], target: [usize; 2]| {
            let global_target = [bx.lo[0] + target[0], bx.lo[1] + target[1]];
            let axis = if node[0] != global_target[0] { 0 } else { 1 };
            mesh.weight(problem.nu, axis)
        };
        let slot_weights = bx.reads.iter().map(|r| weight(r.node, r.target)).collect();
        let base = (0..=time.steps)
            .map(|m| {
                let t = time.time(m);
                let mut f = Array2::from_shape_fn((nx, ny), |(i, j)| {
                    mesh.eval(problem.source.as_ref(), [bx.lo[0] + i, bx.lo[1] + j], t)
                });
                for b in &bx.boundary {
                    let g = mesh.eval(problem.boundary.as_ref(), b.node, t);
                    f[b.target] += weight(b.node, b.target) * g;
                }
                ws.transform(&f.view())
            })
            .collect();
        let initial = Array2::from_shape_fn((nx, ny), |(i, j)| {
            let x = mesh.coord([bx.lo[0] + i, bx.lo[1] + j]);
            (problem.initial)(&x[..mesh.dim])
        });
        Ok(Self {
            ws,
            bx: bx.clone(),
            slot_weights,
            base,
            initial,
        })
    }

    pub fn workspace(&self) -> &StepWorkspace {
        &self.ws
    }

    pub fn bounds(&self) -> &SubdomainBox {
        &self.bx
    }

    pub fn slots(&self) -> &[InterfaceRead] {
        &self.bx.reads
    }

    /// Number of time levels the forcing is cached for (`M + 1`).
    pub fn levels(&self) -> usize {
        self.base.len()
    }

    /// Initial state restricted to this subdomain, in physical space.
    pub fn initial_state(&self) -> &Array2<f64> {
        &self.initial
    }

    pub fn to_coeffs(&self, u: &Array2<f64>) -> Array2<f64> {
        self.ws.transform(&u.view())
    }

    pub fn to_physical(&self, c: &Array2<f64>) -> Array2<f64> {
        self.ws.transform(&c.view())
    }

    /// Sine coefficients of the forcing at level `m` with interface values `traces`.
    pub fn forcing(&self, m: usize, traces: &[f64]) -> Result<Array2<f64>> {
        if traces.len() != self.slot_weights.len() {
            return Err(Error::MissingTrace(format!(
                "level {m}: expected {} interface values, got {}",
                self.slot_weights.len(),
                traces.len()
            )));
        }
        let base = self.base.get(m).ok_or_else(|| {
            Error::MissingTrace(format!("level {m} is outside the cached time grid"))
        })?;
        let mut f = base.clone();
        if !traces.is_empty() {
            self.inject(&mut f, traces);
        }
        Ok(f)
    }

    // Adds the sine coefficients of the sparse ring injection to `f`.
    fn inject(&self, f: &mut Array2<f64>, traces: &[f64]) {
        let [nx, ny] = self.ws.shape();
        let mut r = Array2::<f64>::zeros((nx, ny));
        for ((slot, &w), &v) in self.bx.reads.iter().zip(&self.slot_weights).zip(traces) {
            r[slot.target] += w * v;
        }
        let sx = self.ws.basis_x().matrix();
        let mut rows = vec![0, nx - 1];
        rows.dedup();
        for &i in &rows {
            let line = r.row(i);
            if line.iter().all(|&x| x == 0.0) {
                continue;
            }
            let ycoef: Array1<f64> = match self.ws.basis_y() {
                Some(sy) => sy.matrix().dot(&line),
                None => line.to_owned(),
            };
            let xcol = sx.column(i);
            for (a, &xa) in xcol.iter().enumerate() {
                for (b, &yb) in ycoef.iter().enumerate() {
                    f[[a, b]] += xa * yb;
                }
            }
        }
        if let Some(sy) = self.ws.basis_y() {
            let mut cols = vec![0, ny - 1];
            cols.dedup();
            for &j in &cols {
                let mut line = r.column(j).to_owned();
                for &i in &rows {
                    line[i] = 0.0;
                }
                if line.iter().all(|&x| x == 0.0) {
                    continue;
                }
                let xcoef = sx.dot(&line);
                let yrow = sy.matrix().row(j).to_owned();
                for (a, &xa) in xcoef.iter().enumerate() {
                    for (b, &yb) in yrow.iter().enumerate() {
                        f[[a, b]] += xa * yb;
                    }
                }
            }
        }
    }

    /// Physical values at local nodes of the field with coefficients `c`.
    pub fn evaluate(&self, c: &Array2<f64>, nodes: &[[usize; 2]]) -> Vec<f64> {
        let sx = self.ws.basis_x().matrix();
        let Some(sy) = self.ws.basis_y() else {
            let col = c.column(0);
            return nodes.iter().map(|n| sx.row(n[0]).dot(&col)).collect();
        };
        let sy = sy.matrix();
        let [nx, ny] = self.ws.shape();
        let mut row_count = vec![0usize; nx];
        let mut col_count = vec![0usize; ny];
        for n in nodes {
            row_count[n[0]] += 1;
            col_count[n[1]] += 1;
        }
        let mut row_cache: Vec<Option<Array1<f64>>> = vec![None; nx];
        let mut col_cache: Vec<Option<Array1<f64>>> = vec![None; ny];
        nodes
            .iter()
            .map(|&[i, j]| {
                if row_count[i] >= col_count[j] {
                    let r = row_cache[i].get_or_insert_with(|| sx.row(i).dot(c));
                    r.dot(&sy.column(j))
                } else {
                    let q = col_cache[j].get_or_insert_with(|| c.dot(&sy.column(j)));
                    sx.row(i).dot(q)
                }
            })
            .collect()
    }

    /// One step from coefficients `c` at level `m` to `m + 1`.
    pub fn step(&self, scheme: Scheme, c: &Array2<f64>, f_now: &Array2<f64>, f_next: &Array2<f64>) -> Array2<f64> {
        self.ws.advance(scheme, c, f_now, f_next)
    }
}

/// Advances a subdomain state (physical space) from level `m` to `m + 1`
/// given neighbour traces. ETD1 needs `next`; ETD2 needs `now` and `next`.
pub fn local_etd_step(
    local: &LocalProblem,
    scheme: Scheme,
    u: &Array2<f64>,
    m: usize,
    now: Option<&[f64]>,
    next: Option<&[f64]>,
) -> Result<Array2<f64>> {
    let missing = |which: &str| Error::MissingTrace(format!("{which} interface values at level {m}"));
    let next = next.ok_or_else(|| missing("next"))?;
    let f_next = local.forcing(m + 1, next)?;
    let f_now = match scheme {
        Scheme::Etd1 => f_next.clone(),
        Scheme::Etd2 => local.forcing(m, now.ok_or_else(|| missing("current"))?)?,
    };
    if u.dim() != (local.ws.shape()[0], local.ws.shape()[1]) {
        return Err(Error::DimensionMismatch {
            expected: local.ws.len(),
            actual: u.len(),
        });
    }
    let c = local.to_coeffs(u);
    Ok(local.to_physical(&local.step(scheme, &c, &f_now, &f_next)))
}
