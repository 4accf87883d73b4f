use std::f64::consts::PI;
use std::sync::Arc;

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};

use super::laplacian::{DirichletLaplacian1D, DirichletLaplacian2D};
use super::phi::PhiOrder;
use crate::error::{check_len, Error, Result};

/// Orthonormal discrete sine basis of size `n`,
/// `S[j][k] = √(2/(n+1))·sin((j+1)(k+1)π/(n+1))`.
///
/// The matrix is symmetric and orthogonal, so the forward and inverse
/// transforms are the same product.
#[derive(Debug, Clone)]
pub struct SineBasis {
    matrix: Arc<Array2<f64>>,
}

impl SineBasis {
    pub fn new(n: usize) -> Self {
        let norm = (2.0 / (n + 1) as f64).sqrt();
        let step = PI / (n + 1) as f64;
        let matrix = Array2::from_shape_fn((n, n), |(j, k)| {
            // reduce (j+1)(k+1) mod 2(n+1) to keep the sine argument small
            let m = ((j + 1) * (k + 1)) % (2 * (n + 1));
            norm * (step * m as f64).sin()
        });
        Self {
            matrix: Arc::new(matrix),
        }
    }

    pub fn len(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn matrix(&self) -> ArrayView2<'_, f64> {
        self.matrix.view()
    }

    pub fn transform(&self, v: &[f64]) -> Vec<f64> {
        self.matrix.dot(&ArrayView1::from(v)).to_vec()
    }

    /// Physical value at node `j` of the field with sine coefficients `c`.
    pub fn evaluate(&self, c: &[f64], j: usize) -> f64 {
        self.matrix.row(j).dot(&ArrayView1::from(c))
    }

    /// Column `k` of the basis, i.e. the coefficients of the unit vector `e_k`.
    pub fn column(&self, k: usize) -> Array1<f64> {
        self.matrix.column(k).to_owned()
    }
}

/// Exact eigen-decomposition `A = S·diag(λ)·S` of a 1D Dirichlet Laplacian.
#[derive(Debug, Clone)]
pub struct SpectralFactorization1D {
    eigenvalues: Vec<f64>,
    basis: SineBasis,
}

/// Eigenvalues of `op`, `λ_j = −(4ν/h²)·sin²(jπ/(2(n+1)))`, ordered by `j`.
pub fn spectral_factorization(op: &DirichletLaplacian1D) -> SpectralFactorization1D {
    let n = op.n();
    let scale = 4.0 * op.scale();
    let eigenvalues = (1..=n)
        .map(|j| {
            let s = (j as f64 * PI / (2.0 * (n + 1) as f64)).sin();
            -scale * s * s
        })
        .collect();
    SpectralFactorization1D {
        eigenvalues,
        basis: SineBasis::new(n),
    }
}

impl SpectralFactorization1D {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn basis(&self) -> &SineBasis {
        &self.basis
    }

    /// Multipliers `φ_k(dt·λ_j)`.
    pub fn phi_diagonal(&self, order: PhiOrder, dt: f64) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .map(|&l| order.eval(dt * l))
            .collect()
    }
}

/// `φ_k(dt·A)·v` through the sine eigenbasis.
///
/// `dt·φ1(dt·A) = A⁻¹(e^{dt·A} − I)` and `dt²·φ2(dt·A) = A⁻²(e^{dt·A} − I − dt·A)`,
/// so no inverse of `A` is ever formed.
pub fn apply_phi(fact: &SpectralFactorization1D, k: usize, dt: f64, v: &[f64]) -> Result<Vec<f64>> {
    let order = PhiOrder::try_from(k)?;
    check_dt(dt)?;
    check_len(fact.len(), v.len())?;
    let mut c = fact.basis.transform(v);
    for (ci, &l) in c.iter_mut().zip(&fact.eigenvalues) {
        *ci *= order.eval(dt * l);
    }
    Ok(fact.basis.transform(&c))
}

/// Tensor sine factorization of a Kronecker-sum Laplacian.
#[derive(Debug, Clone)]
pub struct SpectralFactorization2D {
    pub x: SpectralFactorization1D,
    pub y: SpectralFactorization1D,
}

impl SpectralFactorization2D {
    pub fn new(op: &DirichletLaplacian2D) -> Self {
        Self {
            x: spectral_factorization(&op.ax),
            y: spectral_factorization(&op.ay),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.x.len(), self.y.len())
    }

    /// `Sx·V·Sy`, the forward (and inverse) 2D transform.
    pub fn transform(&self, v: &ArrayView2<'_, f64>) -> Array2<f64> {
        self.x.basis.matrix().dot(v).dot(&self.y.basis.matrix())
    }

    /// `φ_k(dt(λ_i + μ_j))` on the tensor grid of eigenvalue pairs.
    pub fn phi_grid(&self, order: PhiOrder, dt: f64) -> Array2<f64> {
        let (nx, ny) = self.shape();
        Array2::from_shape_fn((nx, ny), |(i, j)| {
            order.eval(dt * (self.x.eigenvalues[i] + self.y.eigenvalues[j]))
        })
    }
}

/// `φ_k(dt·(Ax ⊕ Ay))` applied to an `nx × ny` field.
///
/// φ of a Kronecker sum does not factor into φ of its terms, so the function
/// is evaluated on the pairwise eigenvalue sums in the tensor sine basis.
pub fn apply_phi_2d(
    op: &DirichletLaplacian2D,
    k: usize,
    dt: f64,
    v: &ArrayView2<'_, f64>,
) -> Result<Array2<f64>> {
    let order = PhiOrder::try_from(k)?;
    check_dt(dt)?;
    let (nx, ny) = op.shape();
    check_len(nx, v.nrows())?;
    check_len(ny, v.ncols())?;
    let fact = SpectralFactorization2D::new(op);
    let mut c = fact.transform(v);
    c *= &fact.phi_grid(order, dt);
    Ok(fact.transform(&c.view()))
}

fn check_dt(dt: f64) -> Result<()> {
    if dt >= 0.0 && dt.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "dt",
            reason: format!("must be a non-negative finite step, got {dt}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(n: usize) -> DirichletLaplacian1D {
        DirichletLaplacian1D::new(n, 1.0, 1.0).unwrap()
    }

    #[test]
    fn eigenvalues_small_cases() {
        assert!((spectral_factorization(&op(1)).eigenvalues()[0] + 2.0).abs() < 1e-15);
        let two = spectral_factorization(&op(2));
        assert!((two.eigenvalues()[0] + 1.0).abs() < 1e-14);
        assert!((two.eigenvalues()[1] + 3.0).abs() < 1e-14);
        let three = spectral_factorization(&op(3));
        let s = 2f64.sqrt();
        for (got, want) in three.eigenvalues().iter().zip([-2.0 + s, -2.0, -2.0 - s]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn basis_is_involution() {
        let b = SineBasis::new(17);
        let v: Vec<f64> = (0..17).map(|i| (i as f64 * 0.7).cos()).collect();
        let back = b.transform(&b.transform(&v));
        for (a, b) in v.iter().zip(&back) {
            assert!((a - b).abs() < 1e-12 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn reconstruction_matches_dense() {
        let a = DirichletLaplacian1D::new(9, 0.7, 0.1).unwrap();
        let f = spectral_factorization(&a);
        let s = f.basis().matrix().to_owned();
        let lam = Array2::from_diag(&Array1::from(f.eigenvalues().to_vec()));
        let rec = s.dot(&lam).dot(&s);
        let dense = a.to_dense();
        let norm = dense.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (x, y) in rec.iter().zip(dense.iter()) {
            assert!((x - y).abs() < 1e-10 * norm);
        }
    }

    #[test]
    fn zero_time_is_identity() {
        let f = spectral_factorization(&op(6));
        let v = vec![1.0, -2.0, 0.5, 3.0, 0.0, 1.5];
        let out = apply_phi(&f, 0, 0.0, &v).unwrap();
        for (a, b) in v.iter().zip(&out) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn eigenvector_scaling() {
        let f = spectral_factorization(&op(8));
        let j = 3;
        let v = f.basis().column(j).to_vec();
        let dt = 0.37;
        let out = apply_phi(&f, 0, dt, &v).unwrap();
        let factor = (dt * f.eigenvalues()[j]).exp();
        for (a, b) in v.iter().zip(&out) {
            assert!((a * factor - b).abs() < 1e-14);
        }
    }

    #[test]
    fn dimension_mismatch() {
        let f = spectral_factorization(&op(4));
        assert!(apply_phi(&f, 1, 0.1, &[1.0; 3]).is_err());
        assert!(apply_phi(&f, 5, 0.1, &[1.0; 4]).is_err());
    }

    #[test]
    fn tensor_eigenvector_scaling() {
        let ax = DirichletLaplacian1D::new(5, 1.0, 0.2).unwrap();
        let ay = DirichletLaplacian1D::new(4, 1.0, 0.25).unwrap();
        let op2 = DirichletLaplacian2D::new(ax, ay);
        let fact = SpectralFactorization2D::new(&op2);
        let (i, j) = (2, 1);
        let p = fact.x.basis().column(i);
        let q = fact.y.basis().column(j);
        let v = Array2::from_shape_fn((5, 4), |(a, b)| p[a] * q[b]);
        let dt = 0.01;
        let out = apply_phi_2d(&op2, 0, dt, &v.view()).unwrap();
        let factor = (dt * (fact.x.eigenvalues()[i] + fact.y.eigenvalues()[j])).exp();
        for (a, b) in v.iter().zip(out.iter()) {
            assert!((a * factor - b).abs() < 1e-14);
        }
        let same = apply_phi_2d(&op2, 0, 0.0, &v.view()).unwrap();
        for (a, b) in v.iter().zip(same.iter()) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
