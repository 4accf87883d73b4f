use ndarray::Array2;

use crate::error::{invalid, Result};

/// `(ν/h²)·tridiag(1, −2, 1)` of size `n`: the Dirichlet Laplacian on a
/// uniform grid with `n` interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletLaplacian1D {
    n: usize,
    nu: f64,
    h: f64,
}

impl DirichletLaplacian1D {
    pub fn new(n: usize, nu: f64, h: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n", "at least one interior point is required"));
        }
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(invalid("nu", format!("must be positive, got {nu}")));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(invalid("h", format!("must be positive, got {h}")));
        }
        Ok(Self { n, nu, h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// `ν/h²`, the off-diagonal entry and the boundary injection weight.
    pub fn scale(&self) -> f64 {
        self.nu / (self.h * self.h)
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        crate::error::check_len(self.n, v.len())?;
        let s = self.scale();
        Ok((0..self.n)
            .map(|j| {
                let left = if j > 0 { v[j - 1] } else { 0.0 };
                let right = if j + 1 < self.n { v[j + 1] } else { 0.0 };
                s * (left - 2.0 * v[j] + right)
            })
            .collect())
    }

    pub fn to_dense(&self) -> Array2<f64> {
        let s = self.scale();
        Array2::from_shape_fn((self.n, self.n), |(i, j)| match i.abs_diff(j) {
            0 => -2.0 * s,
            1 => s,
            _ => 0.0,
        })
    }
}

/// Kronecker sum `Ax ⊕ Ay` acting on fields stored row-major as `nx × ny`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletLaplacian2D {
    pub ax: DirichletLaplacian1D,
    pub ay: DirichletLaplacian1D,
}

impl DirichletLaplacian2D {
    pub fn new(ax: DirichletLaplacian1D, ay: DirichletLaplacian1D) -> Self {
        Self { ax, ay }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.ax.n(), self.ay.n())
    }

    pub fn to_dense(&self) -> Array2<f64> {
        let (nx, ny) = self.shape();
        let dx = self.ax.to_dense();
        let dy = self.ay.to_dense();
        let n = nx * ny;
        Array2::from_shape_fn((n, n), |(p, q)| {
            let (i, j) = (p / ny, p % ny);
            let (k, l) = (q / ny, q % ny);
            let mut v = 0.0;
            if j == l {
                v += dx[[i, k]];
            }
            if i == k {
                v += dy[[j, l]];
            }
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_unit() {
        let a = DirichletLaplacian1D::new(2, 1.0, 1.0).unwrap().to_dense();
        assert_eq!(a, ndarray::array![[-2.0, 1.0], [1.0, -2.0]]);
    }

    #[test]
    fn one_by_one() {
        let a = DirichletLaplacian1D::new(1, 1.0, 1.0).unwrap().to_dense();
        assert_eq!(a, ndarray::array![[-2.0]]);
    }

    #[test]
    fn scaled_entries() {
        let a = DirichletLaplacian1D::new(5, 2.0, 0.5).unwrap().to_dense();
        for i in 0..5 {
            assert_eq!(a[[i, i]], -16.0);
            if i + 1 < 5 {
                assert_eq!(a[[i, i + 1]], 8.0);
                assert_eq!(a[[i + 1, i]], 8.0);
            }
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(DirichletLaplacian1D::new(0, 1.0, 1.0).is_err());
        assert!(DirichletLaplacian1D::new(3, 0.0, 1.0).is_err());
        assert!(DirichletLaplacian1D::new(3, 1.0, -1.0).is_err());
    }

    #[test]
    fn apply_matches_dense() {
        let op = DirichletLaplacian1D::new(7, 1.3, 0.2).unwrap();
        let v: Vec<f64> = (0..7).map(|i| (i as f64).sin()).collect();
        let dense = op.to_dense().dot(&ndarray::ArrayView1::from(&v[..]));
        for (a, b) in op.apply(&v).unwrap().iter().zip(dense.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
