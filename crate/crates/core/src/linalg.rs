//! Internal dense-linear-algebra helpers shared across modules.
//!
//! Everything here is backed by nalgebra; eigenvalues are always sorted
//! ascending so results are deterministic.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Hermitian part (f + f*)/2.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).map(|z| z * 0.5)
}

/// Eigendecomposition of a (numerically) Hermitian matrix.
///
/// The input is symmetrized first, so tiny non-Hermitian rounding noise is
/// harmless. Returns eigenvalues ascending and the matching unitary of
/// column eigenvectors.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let h = hermitian_part(m);
    let eig = h.symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Smallest eigenvalue of the Hermitian part.
pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    let (values, _) = hermitian_eigen(m);
    values[0]
}

/// Largest singular value, computed as sqrt(λ_max(f* f)).
pub fn spectral_norm(m: &CMatrix) -> f64 {
    let gram = m.adjoint() * m;
    let (values, _) = hermitian_eigen(&gram);
    values.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Smallest singular value, computed as sqrt(λ_min(f* f)).
pub fn min_singular_value(m: &CMatrix) -> f64 {
    let gram = m.adjoint() * m;
    let (values, _) = hermitian_eigen(&gram);
    values.first().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Apply a scalar function to a Hermitian matrix through its spectrum:
/// V f(Λ) V*.
pub fn hermitian_function(m: &CMatrix, f: impl Fn(f64) -> Complex64) -> CMatrix {
    let (values, vectors) = hermitian_eigen(m);
    let diag = CMatrix::from_diagonal(&CVector::from_iterator(
        values.len(),
        values.iter().map(|&x| f(x)),
    ));
    &vectors * diag * vectors.adjoint()
}

/// ‖f − f*‖ in the spectral norm.
pub fn hermiticity_residual(m: &CMatrix) -> f64 {
    spectral_norm(&(m - m.adjoint()))
}

/// Trace.
pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pauli_x() -> CMatrix {
        CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])
    }

    #[test]
    fn eigen_reconstructs_hermitian_input() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[c(2., 0.), c(0., 1.), c(0., -1.), c(3., 0.)],
        );
        let (values, vectors) = hermitian_eigen(&m);
        assert!(values[0] <= values[1]);
        let diag = CMatrix::from_diagonal(&CVector::from_iterator(
            2,
            values.iter().map(|&x| c(x, 0.)),
        ));
        let rec = &vectors * diag * vectors.adjoint();
        assert!(spectral_norm(&(rec - m)) < 1e-12);
        // eigenvalues of [[2, i], [-i, 3]] are (5 ± √5)/2
        assert_abs_diff_eq!(values[0], (5.0 - 5.0f64.sqrt()) / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(values[1], (5.0 + 5.0f64.sqrt()) / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn spectral_norm_of_pauli_is_one() {
        assert_abs_diff_eq!(spectral_norm(&pauli_x()), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn hermitian_function_exponentiates() {
        // exp(iθ σ1) = cos θ + i sin θ σ1
        let theta = 0.7;
        let u = hermitian_function(&pauli_x(), |x| (Complex64::i() * theta * x).exp());
        let expected = CMatrix::from_row_slice(
            2,
            2,
            &[
                c(theta.cos(), 0.),
                c(0., theta.sin()),
                c(0., theta.sin()),
                c(theta.cos(), 0.),
            ],
        );
        assert!(spectral_norm(&(u - expected)) < 1e-12);
    }
}
