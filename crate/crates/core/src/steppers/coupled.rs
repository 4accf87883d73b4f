use nalgebra::DMatrix;
use ndarray::Array2;

use super::local::LocalProblem;
use super::workspace::{Scheme, TimeGrid};
use crate::error::{invalid, Error, Result};
use crate::geometry::{Layout, Mesh, ProblemSpec};

/// Conditioning above which the direct interface solve is refused.
pub const MAX_CONDITION: f64 = 1e12;

/// All subdomain problems of a layout plus the trace exchange pattern.
#[derive(Debug, Clone)]
pub struct Subdomains {
    pub mesh: Mesh,
    pub layout: Layout,
    pub time: TimeGrid,
    pub locals: Vec<LocalProblem>,
    // per owner: local nodes other subdomains read
    exports: Vec<Vec<[usize; 2]>>,
    // per reader slot: (owner, position in the owner's export list)
    sources: Vec<Vec<(usize, usize)>>,
}

impl Subdomains {
    pub fn new(problem: &ProblemSpec, mesh: Mesh, layout: Layout, time: TimeGrid) -> Result<Self> {
        if layout.shape != mesh.shape {
            return Err(invalid("layout", "layout and mesh shapes differ"));
        }
        let locals = layout
            .boxes
            .iter()
            .map(|b| LocalProblem::new(problem, &mesh, b, &time))
            .collect::<Result<Vec<_>>>()?;
        let mut exports: Vec<Vec<[usize; 2]>> = vec![Vec::new(); layout.len()];
        let mut sources = Vec::with_capacity(layout.len());
        for b in &layout.boxes {
            let mut src = Vec::with_capacity(b.reads.len());
            for r in &b.reads {
                let list = &mut exports[r.owner];
                let pos = match list.iter().position(|&n| n == r.owner_local) {
                    Some(p) => p,
                    None => {
                        list.push(r.owner_local);
                        list.len() - 1
                    }
                };
                src.push((r.owner, pos));
            }
            sources.push(src);
        }
        Ok(Self {
            mesh,
            layout,
            time,
            locals,
            exports,
            sources,
        })
    }

    pub fn len(&self) -> usize {
        self.locals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locals.is_empty()
    }

    /// Slot count per subdomain.
    pub fn slot_counts(&self) -> Vec<usize> {
        self.sources.iter().map(Vec::len).collect()
    }

    pub fn initial_coeffs(&self) -> Vec<Array2<f64>> {
        self.locals
            .iter()
            .map(|l| l.to_coeffs(l.initial_state()))
            .collect()
    }

    /// Values every subdomain exports, from coefficient states.
    pub fn exported(&self, coeffs: &[Array2<f64>]) -> Vec<Vec<f64>> {
        self.locals
            .iter()
            .zip(coeffs)
            .zip(&self.exports)
            .map(|((l, c), nodes)| {
                if nodes.is_empty() {
                    Vec::new()
                } else {
                    l.evaluate(c, nodes)
                }
            })
            .collect()
    }

    /// Interface values each subdomain reads, given exported values.
    pub fn gather(&self, exported: &[Vec<f64>]) -> Vec<Vec<f64>> {
        self.sources
            .iter()
            .map(|src| src.iter().map(|&(o, p)| exported[o][p]).collect())
            .collect()
    }

    /// Interface values each subdomain reads from coefficient states.
    pub fn traces(&self, coeffs: &[Array2<f64>]) -> Vec<Vec<f64>> {
        self.gather(&self.exported(coeffs))
    }

    /// Physical subdomain states.
    pub fn physical(&self, coeffs: &[Array2<f64>]) -> Vec<Array2<f64>> {
        self.locals.iter().zip(coeffs).map(|(l, c)| l.to_physical(c)).collect()
    }

    /// Zero-based global index of each subdomain's first node.
    pub fn offsets(&self) -> Vec<[usize; 2]> {
        self.locals
            .iter()
            .map(|l| {
                let lo = l.bounds().lo;
                [lo[0] - 1, lo[1] - 1]
            })
            .collect()
    }

    /// Global physical field assembled from subdomain cores.
    pub fn assemble(&self, coeffs: &[Array2<f64>]) -> Array2<f64> {
        let [nx, ny] = self.layout.shape;
        let mut g = Array2::<f64>::zeros((nx, ny));
        for (l, c) in self.locals.iter().zip(coeffs) {
            let u = l.to_physical(c);
            let b = l.bounds();
            for gx in b.core_lo[0]..=b.core_hi[0] {
                for gy in b.core_lo[1]..=b.core_hi[1] {
                    g[[gx - 1, gy - 1]] = u[b.local([gx, gy])];
                }
            }
        }
        g
    }

    /// Advances every subdomain one step given traces at both levels.
    pub fn step_all(
        &self,
        scheme: Scheme,
        coeffs: &[Array2<f64>],
        m: usize,
        f_now: &[Array2<f64>],
        next: &[Vec<f64>],
    ) -> Result<Vec<Array2<f64>>> {
        self.locals
            .iter()
            .enumerate()
            .map(|(s, l)| {
                let f_next = l.forcing(m + 1, &next[s])?;
                Ok(l.step(scheme, &coeffs[s], &f_now[s], &f_next))
            })
            .collect()
    }

    /// Forcing coefficients at level `m` for every subdomain.
    pub fn forcings(&self, m: usize, traces: &[Vec<f64>]) -> Result<Vec<Array2<f64>>> {
        self.locals
            .iter()
            .zip(traces)
            .map(|(l, t)| l.forcing(m, t))
            .collect()
    }
}

/// Solves one coupled multidomain step exactly.
///
/// The map from injected interface values to the values read back after the
/// step is affine, so it is probed at the origin and at each unit vector and
/// the fixed point is found with one dense solve.
pub fn coupled_step_direct(
    sys: &Subdomains,
    scheme: Scheme,
    coeffs: &[Array2<f64>],
    m: usize,
) -> Result<Vec<Array2<f64>>> {
    if sys.layout.dim != 1 {
        return Err(invalid("layout", "the direct coupled solve supports 1D layouts only"));
    }
    let counts = sys.slot_counts();
    let total: usize = counts.iter().sum();
    let f_now = sys.forcings(m, &sys.traces(coeffs))?;
    let unflatten = |v: &[f64]| -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(counts.len());
        let mut k = 0;
        for &c in &counts {
            out.push(v[k..k + c].to_vec());
            k += c;
        }
        out
    };
    let respond = |v: &[f64]| -> Result<(Vec<Array2<f64>>, Vec<f64>)> {
        let next = sys.step_all(scheme, coeffs, m, &f_now, &unflatten(v))?;
        let w = sys.traces(&next).concat();
        Ok((next, w))
    };
    if total == 0 {
        return Ok(respond(&[])?.0);
    }
    let (_, g) = respond(&vec![0.0; total])?;
    let mut jac = DMatrix::<f64>::zeros(total, total);
    for k in 0..total {
        let mut e = vec![0.0; total];
        e[k] = 1.0;
        let (_, w) = respond(&e)?;
        for r in 0..total {
            jac[(r, k)] = w[r] - g[r];
        }
    }
    let system = DMatrix::<f64>::identity(total, total) - jac;
    let sv = system.clone().singular_values();
    let (smax, smin) = (sv.max(), sv.min());
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if cond.is_nan() || cond > MAX_CONDITION {
        return Err(Error::IllConditioned(cond));
    }
    let rhs = DMatrix::from_column_slice(total, 1, &g);
    let v = system
        .lu()
        .solve(&rhs)
        .ok_or(Error::IllConditioned(f64::INFINITY))?;
    Ok(respond(v.as_slice())?.0)
}
