//! φ-functions as scalars and as matrix functions of the 1D Laplacian.

use ndarray::Array1;
use schwarz_etd::matfunc::{apply_phi, build_laplacian_1d, expm_dense, phi, spectral_factorization};

fn main() -> schwarz_etd::Result<()> {
    for z in [-50.0, -1.0, -1e-3, 0.0, 1e-3, 1.0] {
        println!(
            "z = {z:>8}: φ0 = {:.12e}  φ1 = {:.12e}  φ2 = {:.12e}",
            phi(0, z)?,
            phi(1, z)?,
            phi(2, z)?
        );
    }

    // e^{dtA}v through the sine basis against dense Padé on the same matrix.
    let (n, dt) = (32, 0.05);
    let op = build_laplacian_1d(n, 1.0, 1.0 / (n + 1) as f64)?;
    let fact = spectral_factorization(&op);
    let v: Vec<f64> = (0..n).map(|j| ((j * 7 % 11) as f64 - 5.0) / 5.0).collect();
    let spectral = apply_phi(&fact, 0, dt, &v)?;
    let e = expm_dense(&(op.to_dense() * dt).view())?;
    let dense = e.dot(&Array1::from(v));
    let diff = spectral
        .iter()
        .zip(dense.iter())
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    println!("max |spectral − Padé| for e^(dtA)v: {diff:.3e}");
    Ok(())
}
