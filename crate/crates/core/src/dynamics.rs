//! One-parameter automorphism groups: Hamiltonian conjugation in the
//! Heisenberg picture, Schrödinger-picture state evolution, differential
//! equation consistency checks and the fixed scattering automorphism.

use num_complex::Complex64;
use serde::Serialize;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::ensemble::{Ensemble, EnsembleForm};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::quantity::{Quantity, QuantityData};
use crate::states::{Valuation, ValuationKind};

const UNITARITY_TOL: f64 = 1e-10;

/// A one-parameter family S_t of *-algebra automorphisms.
#[derive(Debug, Clone)]
pub enum AutomorphismFamily {
    /// S_t(f) = e^{itH/ħ} f e^{−itH/ħ} for a Hermitian Hamiltonian.
    HamiltonianConjugation { hamiltonian: Quantity, hbar: f64 },
    /// The single scattering automorphism S(f) = sfs*, exposed at t = 1
    /// (t = 0 is the identity).
    FixedScattering { s: Quantity },
}

impl AutomorphismFamily {
    pub fn hamiltonian(hamiltonian: Quantity, hbar: f64) -> Result<Self> {
        hamiltonian.require_hermitian()?;
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::invalid("hbar must be positive"));
        }
        Ok(AutomorphismFamily::HamiltonianConjugation { hamiltonian, hbar })
    }

    pub fn scattering(s: Quantity) -> Result<Self> {
        require_unitary(&s)?;
        Ok(AutomorphismFamily::FixedScattering { s })
    }

    pub fn ctx(&self) -> &AlgebraContext {
        match self {
            AutomorphismFamily::HamiltonianConjugation { hamiltonian, .. } => hamiltonian.ctx(),
            AutomorphismFamily::FixedScattering { s } => s.ctx(),
        }
    }

    /// The unitary implementing S_t.
    fn propagator(&self, t: f64) -> Result<Propagator> {
        match self {
            AutomorphismFamily::HamiltonianConjugation { hamiltonian, hbar } => {
                match hamiltonian.data() {
                    QuantityData::Matrix(h) => {
                        let u = linalg::hermitian_function(h, |x| {
                            (Complex64::i() * t * x / hbar).exp()
                        });
                        Ok(Propagator::Unitary(u))
                    }
                    // conjugation is trivial in a commutative algebra
                    QuantityData::Diagonal(_) => Ok(Propagator::Identity),
                }
            }
            AutomorphismFamily::FixedScattering { s } => {
                if t == 0.0 {
                    Ok(Propagator::Identity)
                } else if t == 1.0 {
                    Ok(Propagator::Unitary(
                        s.as_matrix()
                            .ok_or_else(|| {
                                Error::invalid("scattering requires a matrix-kind unitary")
                            })?
                            .clone(),
                    ))
                } else {
                    Err(Error::invalid(format!(
                        "the scattering family exposes only t ∈ {{0, 1}}, got t = {t}"
                    )))
                }
            }
        }
    }
}

enum Propagator {
    Identity,
    Unitary(CMatrix),
}

fn require_unitary(s: &Quantity) -> Result<()> {
    let one = Quantity::identity(*s.ctx());
    let left = s.adjoint().mul(s)?.distance(&one);
    let right = s.mul(&s.adjoint())?.distance(&one);
    let residual = left.max(right);
    if residual > UNITARITY_TOL {
        return Err(Error::NotUnitary {
            residual,
            tolerance: UNITARITY_TOL,
        });
    }
    Ok(())
}

/// The Heisenberg quantity f(t) = S_t(f).
pub fn evolve_quantity(family: &AutomorphismFamily, f: &Quantity, t: f64) -> Result<Quantity> {
    family.ctx().require_compatible(f.ctx())?;
    match family.propagator(t)? {
        Propagator::Identity => Ok(f.clone()),
        Propagator::Unitary(u) => {
            let m = f.as_matrix().expect("matrix kind enforced by context");
            Quantity::from_matrix(*f.ctx(), &u * m * u.adjoint())
        }
    }
}

/// The Schrödinger state v_t = v ∘ S_t, realized by transporting the state
/// data with the adjoint propagator.
///
/// Classical point states are rejected: their flow needs the Poisson
/// structure, which this module does not model.
pub fn evolve_state(family: &AutomorphismFamily, v: &Valuation, t: f64) -> Result<Valuation> {
    family.ctx().require_compatible(v.ctx())?;
    match v.kind() {
        ValuationKind::ClassicalPoint { .. } => Err(Error::PreconditionFailed {
            detail: "classical point states carry no Hamiltonian flow here; \
                     Poisson dynamics is out of scope"
                .into(),
        }),
        ValuationKind::Copenhagen { psi } => match family.propagator(t)? {
            Propagator::Identity => Ok(v.clone()),
            Propagator::Unitary(u) => Valuation::copenhagen(u.adjoint() * psi),
        },
        ValuationKind::EnsembleState { ensemble } => {
            Ok(Valuation::ensemble_state(evolve_ensemble(family, ensemble, t)?))
        }
    }
}

/// The ensemble at time t: ψ ← U*ψ, ρ ← U*ρU, S ← U*SU.
pub fn evolve_ensemble(
    family: &AutomorphismFamily,
    ensemble: &Ensemble,
    t: f64,
) -> Result<Ensemble> {
    family.ctx().require_compatible(ensemble.ctx())?;
    let u = match family.propagator(t)? {
        Propagator::Identity => return Ok(ensemble.clone()),
        Propagator::Unitary(u) => u,
    };
    match ensemble.form() {
        EnsembleForm::Weighted { .. } => Ok(ensemble.clone()),
        EnsembleForm::PureVector { psi } => Ensemble::pure(u.adjoint() * psi),
        EnsembleForm::Density { rho } => Ensemble::density(u.adjoint() * rho * &u),
        EnsembleForm::Gibbs { entropy, kbar, .. } => {
            let moved = Quantity::from_matrix(*ensemble.ctx(), u.adjoint() * entropy * &u)?;
            Ensemble::gibbs(&moved, *kbar)
        }
    }
}

/// Central-difference residual of the Heisenberg equation
/// iħ df(t)/dt = [f(t), H]; O(dt²) for smooth inputs.
pub fn check_heisenberg_equation(
    family: &AutomorphismFamily,
    f: &Quantity,
    t: f64,
    dt: f64,
) -> Result<f64> {
    let (hamiltonian, hbar) = match family {
        AutomorphismFamily::HamiltonianConjugation { hamiltonian, hbar } => (hamiltonian, *hbar),
        AutomorphismFamily::FixedScattering { .. } => {
            return Err(Error::invalid(
                "differential checks need a Hamiltonian family",
            ))
        }
    };
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::invalid("dt must be positive"));
    }
    let plus = evolve_quantity(family, f, t + dt)?;
    let minus = evolve_quantity(family, f, t - dt)?;
    let derivative = plus.sub(&minus)?.scale_re(1.0 / (2.0 * dt));
    let ft = evolve_quantity(family, f, t)?;
    // [f(t), H]/(iħ) = −(i/ħ)[f(t), H]
    let rhs = ft
        .commutator(hamiltonian)?
        .scale(Complex64::new(0.0, -1.0 / hbar));
    Ok(derivative.distance(&rhs))
}

/// Central-difference residual of the von Neumann equation
/// iħ dρ(t)/dt = [H, ρ(t)]; the commutator order is reversed relative to
/// the Heisenberg equation.
pub fn check_von_neumann(
    family: &AutomorphismFamily,
    rho: &Ensemble,
    t: f64,
    dt: f64,
) -> Result<f64> {
    let (hamiltonian, hbar) = match family {
        AutomorphismFamily::HamiltonianConjugation { hamiltonian, hbar } => (hamiltonian, *hbar),
        AutomorphismFamily::FixedScattering { .. } => {
            return Err(Error::invalid(
                "differential checks need a Hamiltonian family",
            ))
        }
    };
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::invalid("dt must be positive"));
    }
    let density_at = |time: f64| -> Result<Quantity> {
        let evolved = evolve_ensemble(family, rho, time)?;
        let m = evolved.as_density_matrix().ok_or(Error::FormMismatch {
            detail: "von Neumann check needs a matrix-kind ensemble".into(),
        })?;
        Quantity::from_matrix(*rho.ctx(), m)
    };
    let plus = density_at(t + dt)?;
    let minus = density_at(t - dt)?;
    let derivative = plus.sub(&minus)?.scale_re(1.0 / (2.0 * dt));
    let rhs = hamiltonian
        .commutator(&density_at(t)?)?
        .scale(Complex64::new(0.0, -1.0 / hbar));
    Ok(derivative.distance(&rhs))
}

/// The scattering automorphism S(f) = sfs* for a unitary s.
pub fn scattering_map(s: &Quantity, f: &Quantity) -> Result<Quantity> {
    require_unitary(s)?;
    s.mul(f)?.mul(&s.adjoint())
}

/// Residual block for the automorphism laws (A1)–(A3) on seeded random
/// inputs, plus the Heisenberg/Schrödinger duality (e.SH).
#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismResiduals {
    pub scalar: f64,
    pub adjoint: f64,
    pub additive: f64,
    pub multiplicative: f64,
    pub identity_at_zero: f64,
    pub group_law: f64,
    pub duality: f64,
    pub samples: usize,
    pub seed: u64,
    pub pass: bool,
}

pub fn automorphism_residuals(
    family: &AutomorphismFamily,
    samples: usize,
    seed: u64,
) -> Result<AutomorphismResiduals> {
    if samples == 0 {
        return Err(Error::invalid("samples must be at least 1"));
    }
    let ctx = *family.ctx();
    let mut rng = crate::random::rng_from_seed(seed);
    let mut residuals = AutomorphismResiduals {
        scalar: 0.0,
        adjoint: 0.0,
        additive: 0.0,
        multiplicative: 0.0,
        identity_at_zero: 0.0,
        group_law: 0.0,
        duality: 0.0,
        samples,
        seed,
        pass: false,
    };
    let times: &[f64] = match family {
        AutomorphismFamily::HamiltonianConjugation { .. } => &[0.3, -0.3, 1.7, -1.7],
        AutomorphismFamily::FixedScattering { .. } => &[1.0],
    };
    for k in 0..samples {
        let f = crate::random::random_quantity(ctx, &mut rng);
        let g = crate::random::random_quantity(ctx, &mut rng);
        let alpha = Complex64::new(
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
        );
        let t = times[k % times.len()];
        let scale = f.spectral_norm().max(g.spectral_norm()).max(1.0);

        let ft = evolve_quantity(family, &f, t)?;
        let gt = evolve_quantity(family, &g, t)?;
        residuals.scalar = residuals.scalar.max(
            evolve_quantity(family, &Quantity::scalar(ctx, alpha), t)?
                .distance(&Quantity::scalar(ctx, alpha)),
        );
        residuals.adjoint = residuals
            .adjoint
            .max(evolve_quantity(family, &f.adjoint(), t)?.distance(&ft.adjoint()) / scale);
        residuals.additive = residuals.additive.max(
            evolve_quantity(family, &f.add(&g)?, t)?.distance(&ft.add(&gt)?) / scale,
        );
        residuals.multiplicative = residuals.multiplicative.max(
            evolve_quantity(family, &f.mul(&g)?, t)?.distance(&ft.mul(&gt)?) / scale.powi(2),
        );
        residuals.identity_at_zero = residuals
            .identity_at_zero
            .max(evolve_quantity(family, &f, 0.0)?.distance(&f) / scale);
        if let AutomorphismFamily::HamiltonianConjugation { .. } = family {
            let s = times[(k + 1) % times.len()];
            let composed = evolve_quantity(family, &evolve_quantity(family, &f, t)?, s)?;
            residuals.group_law = residuals
                .group_law
                .max(evolve_quantity(family, &f, s + t)?.distance(&composed) / scale);

            // duality on a pure state when the context is matrix-kind
            if ctx.kind == AlgebraKind::Matrix {
                let psi = crate::random::random_unit_vector(ctx.dim, &mut rng);
                let v = Valuation::ensemble_state(Ensemble::pure(psi)?);
                let vt = evolve_state(family, &v, t)?;
                let lhs = vt.value(&f)?.as_complex().expect("ensemble state");
                let rhs = v.value(&ft)?.as_complex().expect("ensemble state");
                residuals.duality = residuals.duality.max((lhs - rhs).norm() / scale);
            }
        }
    }
    residuals.pass = [
        residuals.scalar,
        residuals.adjoint,
        residuals.additive,
        residuals.multiplicative,
        residuals.identity_at_zero,
        residuals.group_law,
        residuals.duality,
    ]
    .iter()
    .all(|&r| r <= 1e-10);
    Ok(residuals)
}
