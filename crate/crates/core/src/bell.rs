//! CHSH correlation functional, Tsirelson and classical bounds, and the
//! maximally violating spin-pair construction.

use num_complex::Complex64;
use serde::Serialize;

use crate::context::AlgebraContext;
use crate::ensemble::Ensemble;
use crate::error::{Error, Result};
use crate::linalg::CVector;
use crate::quantity::Quantity;

pub const TSIRELSON_BOUND: f64 = 2.0 * std::f64::consts::SQRT_2;
pub const CLASSICAL_BOUND: f64 = 2.0;
const BOUND_TOL: f64 = 1e-9;
const APPLICABILITY_TOL: f64 = 1e-10;

/// Result of evaluating the CHSH combination
/// γ = |⟨f1f2⟩ + ⟨f3f2⟩ + ⟨f3f4⟩ − ⟨f1f4⟩| in a given ensemble.
///
/// The correlators are the real parts of ⟨f_jf_k⟩; `imag_residual` records
/// the largest imaginary part encountered. For commuting pairs the products
/// are Hermitian and the residual is at rounding level, and γ recomputes
/// exactly from the four stored reals. Since |Re z| ≤ |z|, both bounds
/// remain valid for the real-part γ even when the pairs fail to commute.
#[derive(Debug, Clone, Serialize)]
pub struct ChshReport {
    /// ⟨f1f2⟩, ⟨f3f2⟩, ⟨f3f4⟩, ⟨f1f4⟩ (real parts).
    pub correlators: [f64; 4],
    /// Largest |Im ⟨f_jf_k⟩| over the four pairs.
    pub imag_residual: f64,
    /// Single expectations ⟨f1⟩..⟨f4⟩ (real parts).
    pub singles: [f64; 4],
    pub gamma: f64,
    /// γ ≤ 2√2 + 1e-9.
    pub tsirelson_ok: bool,
    /// All odd-difference pairs commute and are uncorrelated (each within
    /// 1e-10), so the classical bound is in force.
    pub classical_bound_applicable: bool,
    /// γ ≤ 2 + 1e-9, evaluated regardless of applicability.
    pub classical_ok: bool,
}

/// Evaluate the CHSH functional for Hermitian quantities with f_k² ≤ 1.
pub fn chsh(ensemble: &Ensemble, quadruple: &[Quantity; 4]) -> Result<ChshReport> {
    let one = Quantity::identity(*quadruple[0].ctx());
    for (k, f) in quadruple.iter().enumerate() {
        ensemble.ctx().require_compatible(f.ctx())?;
        f.require_hermitian()?;
        if !one.sub(&f.power(2))?.is_positive() {
            return Err(Error::PreconditionFailed {
                detail: format!("f{}² ≤ 1 fails (spectral norm {})", k + 1, f.spectral_norm()),
            });
        }
    }
    let [f1, f2, f3, f4] = quadruple;

    let pairs = [(f1, f2), (f3, f2), (f3, f4), (f1, f4)];
    let mut correlators = [0.0; 4];
    let mut imag_residual: f64 = 0.0;
    for (slot, (a, b)) in pairs.iter().enumerate() {
        let val = ensemble.expectation(&a.mul(b)?)?;
        correlators[slot] = val.re;
        imag_residual = imag_residual.max(val.im.abs());
    }
    let mut singles = [0.0; 4];
    for (slot, f) in quadruple.iter().enumerate() {
        singles[slot] = ensemble.expectation(f)?.re;
    }

    let gamma = (correlators[0] + correlators[1] + correlators[2] - correlators[3]).abs();

    // classical bound applies when all odd-difference pairs commute and are
    // uncorrelated: (1,2), (2,3), (3,4), (1,4)
    let odd_pairs = [(f1, f2), (f2, f3), (f3, f4), (f1, f4)];
    let mut applicable = true;
    for (a, b) in odd_pairs {
        if a.commutator(b)?.spectral_norm() > APPLICABILITY_TOL
            || ensemble.covariance(a, b)?.abs() > APPLICABILITY_TOL
        {
            applicable = false;
            break;
        }
    }

    Ok(ChshReport {
        correlators,
        imag_residual,
        singles,
        gamma,
        tsirelson_ok: gamma <= TSIRELSON_BOUND + BOUND_TOL,
        classical_bound_applicable: applicable,
        classical_ok: gamma <= CLASSICAL_BOUND + BOUND_TOL,
    })
}

/// The explicit entangled construction on C⁴: four monomial ±1 matrices and
/// the pure ensemble that saturates the Tsirelson bound.
///
/// Under row-major flattening of C²⊗C² the quadruple factorizes as
/// f1 = σ1⊗1, f2 = 1⊗σ1, f3 = σ3⊗1, f4 = 1⊗σ3; this identity is asserted
/// at construction.
pub fn build_spinpair() -> ([Quantity; 4], Ensemble) {
    // f1: swaps (x1,x3) and (x2,x4); f2: swaps (x1,x2) and (x3,x4)
    let f1 = Quantity::matrix_re(
        4,
        &[
            0.0, 0.0, 1.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0,
        ],
    )
    .expect("static entries");
    let f2 = Quantity::matrix_re(
        4,
        &[
            0.0, 1.0, 0.0, 0.0, //
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, 0.0,
        ],
    )
    .expect("static entries");
    let f3 = Quantity::matrix_re(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, -1.0, 0.0, //
            0.0, 0.0, 0.0, -1.0,
        ],
    )
    .expect("static entries");
    let f4 = Quantity::matrix_re(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, -1.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 0.0, 0.0, -1.0,
        ],
    )
    .expect("static entries");

    let one2 = Quantity::identity(AlgebraContext::matrix(2));
    let s1 = Quantity::pauli_x();
    let s3 = Quantity::pauli_z();
    debug_assert!(f1.distance(&s1.kron(&one2).unwrap()) < 1e-15);
    debug_assert!(f2.distance(&one2.kron(&s1).unwrap()) < 1e-15);
    debug_assert!(f3.distance(&s3.kron(&one2).unwrap()) < 1e-15);
    debug_assert!(f4.distance(&one2.kron(&s3).unwrap()) < 1e-15);

    // ψ = (α1, α2, −α2, α1) with α_{1,2} = sqrt((2 ± √2)/8): the unit
    // eigenvector of f1f2 + f3f2 + f3f4 − f1f4 with eigenvalue 2√2, which
    // yields ⟨f1f2⟩ = ⟨f3f2⟩ = ⟨f3f4⟩ = −⟨f1f4⟩ = √2/2
    let alpha1 = ((2.0 + std::f64::consts::SQRT_2) / 8.0).sqrt();
    let alpha2 = ((2.0 - std::f64::consts::SQRT_2) / 8.0).sqrt();
    let psi = CVector::from_column_slice(&[
        Complex64::new(alpha1, 0.0),
        Complex64::new(alpha2, 0.0),
        Complex64::new(-alpha2, 0.0),
        Complex64::new(alpha1, 0.0),
    ]);
    let ensemble = Ensemble::pure(psi).expect("unit vector");

    ([f1, f2, f3, f4], ensemble)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn spinpair_saturates_tsirelson() {
        let (quadruple, ensemble) = build_spinpair();
        let report = chsh(&ensemble, &quadruple).unwrap();
        assert_abs_diff_eq!(report.gamma, TSIRELSON_BOUND, epsilon = 1e-10);
        assert!(report.tsirelson_ok);
        assert!(!report.classical_ok);
        let half_rt2 = std::f64::consts::SQRT_2 / 2.0;
        for (slot, sign) in [(0, 1.0), (1, 1.0), (2, 1.0), (3, -1.0)] {
            assert_abs_diff_eq!(report.correlators[slot], sign * half_rt2, epsilon = 1e-10);
        }
        for s in report.singles {
            assert_abs_diff_eq!(s, 0.0, epsilon = 1e-12);
        }
        assert!(report.imag_residual <= 1e-10);
    }

    #[test]
    fn spinpair_pairs_commute_but_correlate() {
        let (q, ensemble) = build_spinpair();
        let odd = [(0usize, 1usize), (1, 2), (2, 3), (0, 3)];
        for (j, k) in odd {
            assert!(q[j].commutator(&q[k]).unwrap().spectral_norm() < 1e-14);
            // singles vanish, so cov = ⟨f_jf_k⟩ = ±√2/2
            assert_abs_diff_eq!(
                ensemble.covariance(&q[j], &q[k]).unwrap().abs(),
                std::f64::consts::SQRT_2 / 2.0,
                epsilon = 1e-12
            );
        }
        for f in &q {
            assert!(f.power(2).distance(&Quantity::identity(*f.ctx())) < 1e-14);
        }
        // report flags the correlation: classical bound not applicable
        let report = chsh(&ensemble, &q).unwrap();
        assert!(!report.classical_bound_applicable);
    }

    #[test]
    fn product_state_stays_classical() {
        let one2 = Quantity::identity(AlgebraContext::matrix(2));
        let quadruple = [
            Quantity::pauli_x().kron(&one2).unwrap(),
            one2.kron(&Quantity::pauli_x()).unwrap(),
            Quantity::pauli_z().kron(&one2).unwrap(),
            one2.kron(&Quantity::pauli_z()).unwrap(),
        ];
        let ensemble = Ensemble::pure_basis(4, 0).unwrap();
        let report = chsh(&ensemble, &quadruple).unwrap();
        assert_eq!(report.correlators.map(|x| (x * 1e12).round() / 1e12), [0.0, 0.0, 1.0, 0.0]);
        assert_abs_diff_eq!(report.gamma, 1.0, epsilon = 1e-12);
        assert!(report.classical_bound_applicable);
        assert!(report.classical_ok);
    }

    #[test]
    fn all_unity_hits_the_classical_boundary() {
        let ctx = AlgebraContext::matrix(2);
        let one = Quantity::identity(ctx);
        let quadruple = [one.clone(), one.clone(), one.clone(), one];
        let ensemble = Ensemble::pure_basis(2, 0).unwrap();
        let report = chsh(&ensemble, &quadruple).unwrap();
        assert_abs_diff_eq!(report.gamma, 2.0, epsilon = 1e-14);
        assert!(report.classical_bound_applicable);
        assert!(report.classical_ok);
    }

    #[test]
    fn oversized_quantities_rejected() {
        let ctx = AlgebraContext::matrix(2);
        let big = Quantity::pauli_x().scale_re(1.5);
        let quadruple = [
            big,
            Quantity::identity(ctx),
            Quantity::identity(ctx),
            Quantity::identity(ctx),
        ];
        let ensemble = Ensemble::pure_basis(2, 0).unwrap();
        assert!(matches!(
            chsh(&ensemble, &quadruple),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn gamma_recomputes_from_stored_correlators() {
        let (q, e) = build_spinpair();
        let r = chsh(&e, &q).unwrap();
        let recomputed =
            (r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3]).abs();
        assert_abs_diff_eq!(r.gamma, recomputed, epsilon = 1e-12);
    }
}
