//! Cauchy–Schwarz and uncertainty-relation checks, complementarity
//! certification by grid search plus coordinate descent, and the truncated
//! ladder construction for the canonical pair (q, p).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::context::{AlgebraContext, AlgebraKind};
use crate::ensemble::Ensemble;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::quantity::Quantity;

const INEQ_TOL: f64 = 1e-10;

/// Outcome of an inequality check: both sides and the verdict at the stated
/// tolerance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// σ(f)²σ(g)² ≥ |cov(f,g)|² + |½⟨f*g − g*f⟩|².
pub fn check_uncertainty_relation(
    ensemble: &Ensemble,
    f: &Quantity,
    g: &Quantity,
) -> Result<InequalityCheck> {
    let sf = ensemble.uncertainty(f)?;
    let sg = ensemble.uncertainty(g)?;
    let cov = ensemble.covariance(f, g)?;
    let asym = ensemble
        .expectation(&f.adjoint().mul(g)?.sub(&g.adjoint().mul(f)?)?)?
        .scale(0.5);
    let lhs = sf * sf * sg * sg;
    let rhs = cov * cov + asym.norm_sqr();
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    Ok(InequalityCheck {
        lhs,
        rhs,
        holds: lhs >= rhs - INEQ_TOL * scale,
    })
}

/// |⟨f*g⟩|² ≤ ⟨f*f⟩⟨g*g⟩.
pub fn check_cauchy_schwarz(
    ensemble: &Ensemble,
    f: &Quantity,
    g: &Quantity,
) -> Result<InequalityCheck> {
    let fg = ensemble.expectation(&f.adjoint().mul(g)?)?;
    let ff = ensemble.expectation(&f.adjoint().mul(f)?)?.re;
    let gg = ensemble.expectation(&g.adjoint().mul(g)?)?.re;
    let lhs = fg.norm_sqr();
    let rhs = ff * gg;
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    Ok(InequalityCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + INEQ_TOL * scale,
    })
}

/// Certificate for the complementarity bound
/// (f − x)² + (g − y)² ≥ γ² over the searched box.
///
/// `gamma` is the square root of the smallest probed value of
/// m(x, y) = λ_min((f−x)² + (g−y)²). The search is a heuristic for the
/// global minimum, but m is continuous and coercive, so a box larger than
/// ‖f‖ + ‖g‖ contains the minimizer.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplementarityCertificate {
    pub gamma: f64,
    pub argmin_x: f64,
    pub argmin_y: f64,
    pub grid_range: f64,
    pub grid_steps: usize,
    pub refined: bool,
}

fn min_eig_shifted(f: &Quantity, g: &Quantity, x: f64, y: f64) -> f64 {
    let fx = f.sub(&Quantity::scalar(*f.ctx(), Complex64::new(x, 0.0))).expect("same ctx");
    let gy = g.sub(&Quantity::scalar(*g.ctx(), Complex64::new(y, 0.0))).expect("same ctx");
    fx.power(2).add(&gy.power(2)).expect("same ctx").min_eigenvalue()
}

/// Search for the infimum of m(x, y) = λ_min((f−x)² + (g−y)²) over
/// [−range, range]²: coarse grid, then coordinate descent with step halving
/// down to 1e-8, then a parabolic polish per axis.
///
/// In the diagonal algebra the infimum is exactly zero (witnessed by
/// x = f(ω), y = g(ω)), and that value is returned without searching.
pub fn certify_complementarity(
    f: &Quantity,
    g: &Quantity,
    range: f64,
    coarse_steps: usize,
) -> Result<ComplementarityCertificate> {
    f.ctx().require_compatible(g.ctx())?;
    f.require_hermitian()?;
    g.require_hermitian()?;
    if !(range.is_finite() && range > 0.0) || coarse_steps < 2 {
        return Err(Error::invalid(
            "complementarity search needs a positive range and at least 2 steps",
        ));
    }

    if f.kind() == AlgebraKind::Diagonal {
        // classical realization: every point state gives an exact zero
        let x = f.as_diagonal().expect("diagonal kind")[0].re;
        let y = g.as_diagonal().expect("diagonal kind")[0].re;
        return Ok(ComplementarityCertificate {
            gamma: 0.0,
            argmin_x: x,
            argmin_y: y,
            grid_range: range,
            grid_steps: coarse_steps,
            refined: false,
        });
    }

    let grid = |k: usize| -range + 2.0 * range * (k as f64) / ((coarse_steps - 1) as f64);
    let mut best = (f64::INFINITY, 0.0f64, 0.0f64);
    for i in 0..coarse_steps {
        for j in 0..coarse_steps {
            let (x, y) = (grid(i), grid(j));
            let m = min_eig_shifted(f, g, x, y);
            // strict improvement keeps the lexicographically first argmin
            if m < best.0 - 1e-15 {
                best = (m, x, y);
            }
        }
    }

    let (mut m_best, mut x, mut y) = best;
    let mut step = 2.0 * range / ((coarse_steps - 1) as f64);
    while step > 1e-8 {
        let mut moved = false;
        for (dx, dy) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let (cx, cy) = (x + dx, y + dy);
            let m = min_eig_shifted(f, g, cx, cy);
            if m < m_best - 1e-15 {
                m_best = m;
                x = cx;
                y = cy;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }

    // parabolic polish along each axis nails locally quadratic minima
    for _ in 0..2 {
        let h = 1e-4 * range.max(1.0);
        let (mx_minus, mx_plus) = (
            min_eig_shifted(f, g, x - h, y),
            min_eig_shifted(f, g, x + h, y),
        );
        let denom = mx_minus - 2.0 * m_best + mx_plus;
        if denom > 1e-14 {
            let cx = x + 0.5 * h * (mx_minus - mx_plus) / denom;
            let m = min_eig_shifted(f, g, cx, y);
            if m < m_best {
                m_best = m;
                x = cx;
            }
        }
        let (my_minus, my_plus) = (
            min_eig_shifted(f, g, x, y - h),
            min_eig_shifted(f, g, x, y + h),
        );
        let denom = my_minus - 2.0 * m_best + my_plus;
        if denom > 1e-14 {
            let cy = y + 0.5 * h * (my_minus - my_plus) / denom;
            let m = min_eig_shifted(f, g, x, cy);
            if m < m_best {
                m_best = m;
                y = cy;
            }
        }
    }

    Ok(ComplementarityCertificate {
        gamma: m_best.max(0.0).sqrt(),
        argmin_x: x,
        argmin_y: y,
        grid_range: range,
        grid_steps: coarse_steps,
        refined: true,
    })
}

/// Default search box per the coercivity argument: 2(‖f‖ + ‖g‖) + 1 with a
/// 61-point coarse grid.
pub fn certify_complementarity_default(
    f: &Quantity,
    g: &Quantity,
) -> Result<ComplementarityCertificate> {
    let range = 2.0 * (f.spectral_norm() + g.spectral_norm()) + 1.0;
    certify_complementarity(f, g, range, 61)
}

/// Truncated n-level ladder realization of the canonical pair:
/// q = sqrt(ħ/2)(a + a†), p = i·sqrt(ħ/2)(a† − a).
///
/// The commutation relation holds with an exactly characterized corner
/// defect: [q, p] = iħ(1 − n·P_last), where P_last projects on the top
/// basis state.
pub fn truncated_oscillator(n: usize, hbar: f64) -> Result<(Quantity, Quantity)> {
    if n < 2 {
        return Err(Error::invalid("truncated oscillator needs dimension >= 2"));
    }
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::invalid("hbar must be positive"));
    }
    let mut lower = CMatrix::zeros(n, n);
    for k in 1..n {
        lower[(k - 1, k)] = Complex64::new((k as f64).sqrt(), 0.0);
    }
    let raise = lower.adjoint();
    let ctx = AlgebraContext::matrix(n);
    let scale = (hbar / 2.0).sqrt();
    let q = Quantity::from_matrix(ctx, (&lower + &raise).map(|z| z * scale))?;
    let p = Quantity::from_matrix(
        ctx,
        (&raise - &lower).map(|z| z * Complex64::new(0.0, scale)),
    )?;
    Ok((q, p))
}

/// The exact truncation defect: [q, p] − iħ·(1 − n·P_last).
pub fn oscillator_commutator_defect(q: &Quantity, p: &Quantity, hbar: f64) -> Result<f64> {
    let n = q.dim();
    let comm = q.commutator(p)?;
    let mut expected = CMatrix::identity(n, n);
    expected[(n - 1, n - 1)] = Complex64::new(1.0 - n as f64, 0.0);
    let expected = Quantity::from_matrix(
        *q.ctx(),
        expected.map(|z| z * Complex64::new(0.0, hbar)),
    )?;
    Ok(comm.distance(&expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::Ensemble;
    use crate::random::{random_density_matrix, random_hermitian, rng_from_seed};
    use approx::assert_abs_diff_eq;

    #[test]
    fn uncertainty_relation_self_pair_is_tight() {
        let e = Ensemble::pure_basis(2, 0).unwrap();
        let f = Quantity::pauli_x();
        let check = check_uncertainty_relation(&e, &f, &f).unwrap();
        assert!(check.holds);
        assert_abs_diff_eq!(check.lhs, check.rhs, epsilon = 1e-12);
        let sigma = e.uncertainty(&f).unwrap();
        assert_abs_diff_eq!(check.rhs, sigma.powi(4), epsilon = 1e-12);
    }

    #[test]
    fn uncertainty_relation_on_random_inputs() {
        let mut rng = rng_from_seed(11);
        let ctx = AlgebraContext::matrix(4);
        for _ in 0..50 {
            let e = Ensemble::density(random_density_matrix(4, &mut rng)).unwrap();
            let f = random_hermitian(ctx, &mut rng);
            let g = random_hermitian(ctx, &mut rng);
            assert!(check_uncertainty_relation(&e, &f, &g).unwrap().holds);
        }
    }

    #[test]
    fn commuting_diagonal_pair_reduces_to_covariance_bound() {
        let e = Ensemble::weighted(&[0.2, 0.3, 0.5]).unwrap();
        let f = Quantity::diagonal_re(&[1.0, -2.0, 0.5]).unwrap();
        let g = Quantity::diagonal_re(&[0.0, 1.0, 4.0]).unwrap();
        let check = check_uncertainty_relation(&e, &f, &g).unwrap();
        assert!(check.holds);
        // commutator term vanishes, rhs is exactly cov²
        let cov = e.covariance(&f, &g).unwrap();
        assert_abs_diff_eq!(check.rhs, cov * cov, epsilon = 1e-12);
        assert!(cov.abs() <= e.uncertainty(&f).unwrap() * e.uncertainty(&g).unwrap() + 1e-12);
    }

    #[test]
    fn cauchy_schwarz_equality_for_equal_arguments() {
        let e = Ensemble::pure_basis(3, 1).unwrap();
        let f = Quantity::matrix_re(3, &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]).unwrap();
        let check = check_cauchy_schwarz(&e, &f, &f).unwrap();
        assert!(check.holds);
        assert_abs_diff_eq!(check.lhs, check.rhs, epsilon = 1e-12);
    }

    #[test]
    fn cauchy_schwarz_on_a_thousand_random_triples() {
        let mut rng = rng_from_seed(17);
        let ctx = AlgebraContext::matrix(4);
        for _ in 0..1000 {
            let e = Ensemble::density(random_density_matrix(4, &mut rng)).unwrap();
            let f = crate::random::random_quantity(ctx, &mut rng);
            let g = crate::random::random_quantity(ctx, &mut rng);
            assert!(check_cauchy_schwarz(&e, &f, &g).unwrap().holds);
        }
    }

    #[test]
    fn cauchy_schwarz_with_unity_bounds_first_moment() {
        let e = Ensemble::gibbs(&Quantity::pauli_x(), 0.7).unwrap();
        let f = Quantity::pauli_z();
        let one = Quantity::identity(*f.ctx());
        let check = check_cauchy_schwarz(&e, &f, &one).unwrap();
        assert!(check.holds);
        let expect = e.expectation(&f).unwrap();
        let second = e.expectation(&f.power(2)).unwrap().re;
        assert!(expect.norm_sqr() <= second + 1e-12);
    }

    #[test]
    fn pauli_pair_is_complementary_with_gamma_one() {
        let cert =
            certify_complementarity(&Quantity::pauli_x(), &Quantity::pauli_z(), 3.0, 61).unwrap();
        assert_abs_diff_eq!(cert.gamma, 1.0, epsilon = 1e-6);
        // minimum is attained on the unit circle s1² + s3² = 1
        assert_abs_diff_eq!(
            cert.argmin_x.powi(2) + cert.argmin_y.powi(2),
            1.0,
            epsilon = 1e-4
        );
    }

    #[test]
    fn diagonal_pairs_are_never_complementary() {
        let f = Quantity::diagonal_re(&[1.0, -3.0, 0.2]).unwrap();
        let g = Quantity::diagonal_re(&[2.0, 0.0, -1.0]).unwrap();
        let cert = certify_complementarity(&f, &g, 5.0, 21).unwrap();
        assert_eq!(cert.gamma, 0.0);
    }

    #[test]
    fn commuting_matrices_get_zero_gamma() {
        // common eigenbasis: both diagonal in the standard basis
        let f = Quantity::matrix_re(4, &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, -0.5, 0.0, 0.0, //
            0.0, 0.0, 2.0, 0.0, //
            0.0, 0.0, 0.0, 0.3,
        ])
        .unwrap();
        let g = Quantity::matrix_re(4, &[
            0.7, 0.0, 0.0, 0.0, //
            0.0, 1.5, 0.0, 0.0, //
            0.0, 0.0, -1.0, 0.0, //
            0.0, 0.0, 0.0, 0.1,
        ])
        .unwrap();
        let cert = certify_complementarity_default(&f, &g).unwrap();
        assert!(cert.gamma <= 1e-8, "gamma = {}", cert.gamma);
    }

    #[test]
    fn range_extension_does_not_raise_gamma() {
        let f = Quantity::pauli_x();
        let g = Quantity::pauli_z();
        let small = certify_complementarity(&f, &g, 3.0, 61).unwrap();
        let large = certify_complementarity(&f, &g, 6.0, 121).unwrap();
        assert!(large.gamma <= small.gamma + 1e-9);
    }

    #[test]
    fn non_hermitian_inputs_rejected() {
        let f = Quantity::matrix(2, &[
            Complex64::ZERO,
            Complex64::ONE,
            Complex64::ZERO,
            Complex64::ZERO,
        ])
        .unwrap();
        assert!(certify_complementarity(&f, &Quantity::pauli_z(), 2.0, 11).is_err());
    }

    #[test]
    fn oscillator_commutator_corner_defect_is_exact() {
        for (n, hbar) in [(2usize, 1.0), (5, 1.0), (8, 0.5)] {
            let (q, p) = truncated_oscillator(n, hbar).unwrap();
            assert!(oscillator_commutator_defect(&q, &p, hbar).unwrap() < 1e-13);
            // upper-left entry of [q,p] is iħ
            let comm = q.commutator(&p).unwrap();
            assert_abs_diff_eq!(comm.entry(0, 0).im, hbar, epsilon = 1e-13);
            assert_abs_diff_eq!(comm.entry(0, 0).re, 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn ground_state_saturates_heisenberg() {
        let hbar = 1.0;
        let (q, p) = truncated_oscillator(8, hbar).unwrap();
        let e = Ensemble::pure_basis(8, 0).unwrap();
        let sq = e.uncertainty(&q).unwrap();
        let sp = e.uncertainty(&p).unwrap();
        assert_abs_diff_eq!(sq * sp, hbar / 2.0, epsilon = 1e-10);
        let check = check_uncertainty_relation(&e, &q, &p).unwrap();
        assert!(check.holds);
        // commutator term is (ħ/2)²
        assert_abs_diff_eq!(check.rhs, (hbar / 2.0).powi(2), epsilon = 1e-12);
    }

    #[test]
    fn scaled_uncertainty_inequality_on_low_states() {
        let hbar = 1.0;
        let (q, p) = truncated_oscillator(12, hbar).unwrap();
        for level in 0..3 {
            let e = Ensemble::pure_basis(12, level).unwrap();
            let sq = e.uncertainty(&q).unwrap();
            let sp = e.uncertainty(&p).unwrap();
            for dp in [0.5, 1.0, 2.0] {
                for dq in [0.5, 1.0, 2.0] {
                    let lhs = (sp / dp).powi(2) + (sq / dq).powi(2);
                    assert!(lhs >= hbar / (dp * dq) - 1e-8);
                }
            }
        }
    }
}
