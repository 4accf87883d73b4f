//! Dirichlet Laplacians, their exact sine eigensystems, and the φ-function
//! kernels `e^{dt·A}`, `dt·φ1(dt·A)`, `dt²·φ2(dt·A)` used by every ETD formula.

mod dense;
mod laplacian;
mod phi;
mod spectral;

pub use dense::{expm_dense, one_norm, solve};
pub use laplacian::{DirichletLaplacian1D, DirichletLaplacian2D};
pub use phi::{phi, PhiOrder, TAYLOR_SWITCH};
pub use spectral::{
    apply_phi, apply_phi_2d, spectral_factorization, SineBasis, SpectralFactorization1D,
    SpectralFactorization2D,
};

/// Convenience constructor mirroring [`DirichletLaplacian1D::new`].
pub fn build_laplacian_1d(n: usize, nu: f64, h: f64) -> crate::Result<DirichletLaplacian1D> {
    DirichletLaplacian1D::new(n, nu, h)
}
