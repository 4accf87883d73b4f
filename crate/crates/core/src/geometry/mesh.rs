use super::layout::Grid1D;
use super::problem::ProblemSpec;
use crate::error::{invalid, Result};

/// Node coordinates of a uniform interior grid over a problem's domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh {
    pub dim: usize,
    /// Interior node counts; `shape[1] = 1` in 1D.
    pub shape: [usize; 2],
    pub origin: [f64; 2],
    pub h: [f64; 2],
}

impl Mesh {
    pub fn new(problem: &ProblemSpec, shape: [usize; 2]) -> Result<Self> {
        let dim = problem.dim();
        if shape[0] == 0 || shape[1] == 0 || (dim == 1 && shape[1] != 1) {
            return Err(invalid("n", format!("bad grid shape {shape:?} for a {dim}D problem")));
        }
        let mut origin = [0.0; 2];
        let mut h = [1.0; 2];
        for a in 0..dim {
            origin[a] = problem.origin[a];
            h[a] = problem.extent[a] / (shape[a] + 1) as f64;
        }
        Ok(Self {
            dim,
            shape,
            origin,
            h,
        })
    }

    pub fn from_grid(grid: &Grid1D) -> Self {
        Self {
            dim: 1,
            shape: [grid.n, 1],
            origin: [grid.origin, 0.0],
            h: [grid.h, 1.0],
        }
    }

    pub fn coord(&self, node: [usize; 2]) -> [f64; 2] {
        [
            self.origin[0] + node[0] as f64 * self.h[0],
            self.origin[1] + node[1] as f64 * self.h[1],
        ]
    }

    /// Evaluates `f` at a node; only the first `dim` coordinates are passed.
    pub fn eval(&self, f: &(dyn Fn(&[f64], f64) -> f64 + Send + Sync), node: [usize; 2], t: f64) -> f64 {
        let x = self.coord(node);
        f(&x[..self.dim], t)
    }

    /// Injection weight of a Dirichlet neighbour across axis `a`.
    pub fn weight(&self, nu: f64, axis: usize) -> f64 {
        nu / (self.h[axis] * self.h[axis])
    }
}

/// Forcing on the 1D segment `lo..=hi` of `grid`: `f(x_j, t)` plus
/// `(ν/h²)·left` on the first entry and `(ν/h²)·right` on the last.
pub fn assemble_forcing(
    problem: &ProblemSpec,
    grid: &Grid1D,
    lo: usize,
    hi: usize,
    t: f64,
    left: f64,
    right: f64,
) -> Result<Vec<f64>> {
    if lo == 0 || hi < lo || hi > grid.n {
        return Err(invalid("segment", format!("{lo}..={hi} is not inside 1..={}", grid.n)));
    }
    let w = problem.nu / (grid.h * grid.h);
    let mut f: Vec<f64> = (lo..=hi)
        .map(|j| (problem.source)(&[grid.node(j)], t))
        .collect();
    f[0] += w * left;
    let last = f.len() - 1;
    f[last] += w * right;
    Ok(f)
}
