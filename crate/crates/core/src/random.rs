//! Seeded random generators for quantities, densities and unitaries.
//!
//! Used by the axiom checker and by the verification suites; all sampling is
//! deterministic given the RNG state.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::linalg::{CMatrix, CVector};
use crate::quantity::Quantity;

pub type SeededRng = ChaCha8Rng;

pub use rand::Rng as RandomSource;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Uniformly random quantity with entries in the complex unit square.
pub fn random_quantity(ctx: AlgebraContext, rng: &mut impl Rng) -> Quantity {
    match ctx.kind {
        AlgebraKind::Diagonal => {
            let v = CVector::from_iterator(ctx.dim, (0..ctx.dim).map(|_| random_complex(rng)));
            Quantity::from_diagonal(ctx, v).expect("finite entries")
        }
        AlgebraKind::Matrix => {
            let m = CMatrix::from_iterator(
                ctx.dim,
                ctx.dim,
                (0..ctx.dim * ctx.dim).map(|_| random_complex(rng)),
            );
            Quantity::from_matrix(ctx, m).expect("finite entries")
        }
    }
}

/// Random Hermitian quantity, (f + f*)/2 of a random quantity.
pub fn random_hermitian(ctx: AlgebraContext, rng: &mut impl Rng) -> Quantity {
    random_quantity(ctx, rng).re_part()
}

/// Random positive quantity f*f.
pub fn random_psd(ctx: AlgebraContext, rng: &mut impl Rng) -> Quantity {
    let f = random_quantity(ctx, rng);
    f.adjoint().mul(&f).expect("same context")
}

/// Random density matrix: Hermitian, positive semidefinite, unit trace.
pub fn random_density_matrix(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let a = CMatrix::from_iterator(dim, dim, (0..dim * dim).map(|_| random_complex(rng)));
    let g = &a * a.adjoint();
    let tr: Complex64 = g.diagonal().iter().sum();
    g.map(|z| z / tr.re)
}

/// Random unit vector in C^n.
pub fn random_unit_vector(dim: usize, rng: &mut impl Rng) -> CVector {
    loop {
        let v = DVector::from_iterator(dim, (0..dim).map(|_| random_complex(rng)));
        let norm = v.norm();
        if norm > 1e-3 {
            return v.map(|z| z / norm);
        }
    }
}

/// Random unitary exp(iH) for a random Hermitian H.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> Quantity {
    let ctx = AlgebraContext::matrix(dim);
    let h = random_hermitian(ctx, rng);
    let m = crate::linalg::hermitian_function(h.as_matrix().expect("matrix kind"), |x| {
        (Complex64::i() * x).exp()
    });
    Quantity::from_matrix(ctx, m).expect("finite entries")
}

/// Random effect: a Hermitian quantity with spectrum rescaled into [0, 1].
pub fn random_effect(ctx: AlgebraContext, rng: &mut impl Rng) -> Quantity {
    let h = random_hermitian(ctx, rng);
    let lo = h.min_eigenvalue();
    let hi = h.max_eigenvalue();
    let span = (hi - lo).max(1e-12);
    // (h - lo)/span has spectrum in [0, 1]
    h.sub(&Quantity::scalar(ctx, Complex64::new(lo, 0.0)))
        .expect("same context")
        .scale_re(1.0 / span)
}

/// Random Hermitian quantity rescaled so that f² ≤ 1.
pub fn random_contraction(ctx: AlgebraContext, rng: &mut impl Rng) -> Quantity {
    let h = random_hermitian(ctx, rng);
    let norm = h.spectral_norm();
    if norm <= 1.0 {
        h
    } else {
        h.scale_re(1.0 / norm)
    }
}
