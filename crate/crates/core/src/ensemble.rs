//! Expectation functionals over an algebra context, covariance and
//! uncertainty calculus, and exact tensor-power ensembles for the weak law
//! of large numbers.

use num_complex::Complex64;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::quantity::{Quantity, QuantityData};

/// Largest dimension allowed after tensoring.
pub const MAX_TENSOR_DIM: usize = 4096;

/// Radicands below this are treated as a broken ensemble rather than noise.
const SIGMA_CLAMP: f64 = 1e-12;

/// Residual bound accepted by the repairing constructors.
const CONSTRUCTION_TOL: f64 = 1e-6;

/// The concrete expectation functionals.
#[derive(Debug, Clone, PartialEq)]
pub enum EnsembleForm {
    /// Finite probability theory on the diagonal algebra: ⟨f⟩ = Σ p_k f_k.
    Weighted { weights: Vec<f64> },
    /// Pure ensemble ⟨f⟩ = ψ*fψ for a unit vector ψ.
    PureVector { psi: CVector },
    /// Density ensemble ⟨f⟩ = tr(ρf).
    Density { rho: CMatrix },
    /// Equilibrium ensemble ⟨f⟩ = tr(e^{−S/k̄} f); the entropy is shifted on
    /// construction so that tr e^{−S/k̄} = 1, and the exponential is cached.
    Gibbs {
        entropy: CMatrix,
        kbar: f64,
        density: CMatrix,
    },
}

impl EnsembleForm {
    pub fn name(&self) -> &'static str {
        match self {
            EnsembleForm::Weighted { .. } => "weighted",
            EnsembleForm::PureVector { .. } => "pure",
            EnsembleForm::Density { .. } => "density",
            EnsembleForm::Gibbs { .. } => "gibbs",
        }
    }
}

/// An expectation functional ⟨·⟩ over a fixed algebra context.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    ctx: AlgebraContext,
    form: EnsembleForm,
}

/// Residuals measured before the repairing density constructor normalized
/// its input.
#[derive(Debug, Clone, Copy)]
pub struct DensityResiduals {
    pub hermiticity: f64,
    pub trace_deviation: f64,
    pub min_eigenvalue: f64,
}

impl Ensemble {
    // ---- constructors -----------------------------------------------------

    /// Weighted ensemble on the diagonal algebra. Nonnegative weights are
    /// normalized to sum 1.
    pub fn weighted(weights: &[f64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("weight vector must be nonempty"));
        }
        let mut w: Vec<f64> = Vec::with_capacity(weights.len());
        for (k, &p) in weights.iter().enumerate() {
            if !p.is_finite() || p < -SIGMA_CLAMP {
                return Err(Error::invalid(format!(
                    "weight {k} is {p}, weights must be nonnegative"
                )));
            }
            w.push(p.max(0.0));
        }
        let total: f64 = w.iter().sum();
        if total <= 0.0 {
            return Err(Error::invalid("weights must not all vanish"));
        }
        for p in &mut w {
            *p /= total;
        }
        Ok(Ensemble {
            ctx: AlgebraContext::diagonal(w.len()),
            form: EnsembleForm::Weighted { weights: w },
        })
    }

    /// Pure ensemble from a nonzero vector; the vector is normalized.
    pub fn pure(psi: CVector) -> Result<Self> {
        let norm = psi.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::invalid("pure ensemble vector must be nonzero and finite"));
        }
        let unit = psi.map(|z| z / norm);
        Ok(Ensemble {
            ctx: AlgebraContext::matrix(unit.len()),
            form: EnsembleForm::PureVector { psi: unit },
        })
    }

    /// Pure ensemble concentrated on the basis vector e_k.
    pub fn pure_basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::invalid(format!("basis index {k} out of range for dim {dim}")));
        }
        let mut psi = CVector::zeros(dim);
        psi[k] = Complex64::ONE;
        Ensemble::pure(psi)
    }

    /// Density ensemble. The matrix is re-symmetrized and trace-normalized;
    /// inputs whose residuals exceed 1e-6 are rejected rather than repaired.
    pub fn density(rho: CMatrix) -> Result<Self> {
        let (ensemble, _residuals) = Ensemble::density_with_residuals(rho)?;
        Ok(ensemble)
    }

    pub fn density_with_residuals(rho: CMatrix) -> Result<(Self, DensityResiduals)> {
        if rho.nrows() != rho.ncols() || rho.nrows() == 0 {
            return Err(Error::invalid("density matrix must be square and nonempty"));
        }
        let scale = linalg::spectral_norm(&rho).max(1.0);
        let hermiticity = linalg::hermiticity_residual(&rho);
        let tr = linalg::trace(&rho);
        let trace_deviation = (tr - Complex64::ONE).norm();
        let sym = linalg::hermitian_part(&rho);
        if hermiticity > CONSTRUCTION_TOL * scale {
            return Err(Error::BrokenEnsemble {
                detail: format!("density hermiticity residual {hermiticity:.3e} exceeds 1e-6"),
            });
        }
        if tr.re <= 0.0 || trace_deviation > CONSTRUCTION_TOL * tr.norm().max(1.0) {
            return Err(Error::BrokenEnsemble {
                detail: format!("density trace {tr} too far from 1"),
            });
        }
        let normalized = sym.map(|z| z / tr.re);
        let min_eigenvalue = linalg::min_eigenvalue(&normalized);
        if min_eigenvalue < -CONSTRUCTION_TOL {
            return Err(Error::BrokenEnsemble {
                detail: format!(
                    "density minimum eigenvalue {min_eigenvalue:.3e} below -1e-6"
                ),
            });
        }
        let residuals = DensityResiduals {
            hermiticity,
            trace_deviation,
            min_eigenvalue,
        };
        Ok((
            Ensemble {
                ctx: AlgebraContext::matrix(normalized.nrows()),
                form: EnsembleForm::Density { rho: normalized },
            },
            residuals,
        ))
    }

    /// Equilibrium ensemble for an entropy quantity S and Boltzmann constant
    /// k̄ > 0. S is shifted by k̄·log tr e^{−S/k̄} so the trace condition holds
    /// exactly after construction.
    pub fn gibbs(entropy: &Quantity, kbar: f64) -> Result<Self> {
        entropy.ctx().require_kind(AlgebraKind::Matrix, "Gibbs ensemble")?;
        entropy.require_hermitian()?;
        if !(kbar.is_finite() && kbar > 0.0) {
            return Err(Error::invalid("kbar must be positive"));
        }
        let s = entropy.as_matrix().expect("matrix kind").clone();
        let unnormalized = linalg::hermitian_function(&s, |x| Complex64::new((-x / kbar).exp(), 0.0));
        let z = linalg::trace(&unnormalized).re;
        if !(z.is_finite() && z > 0.0) {
            return Err(Error::BrokenEnsemble {
                detail: format!("partition function {z} is not positive and finite"),
            });
        }
        let shift = kbar * z.ln();
        let shifted = &s + CMatrix::identity(s.nrows(), s.ncols()).map(|x| x * shift);
        let density = unnormalized.map(|x| x / z);
        let check = linalg::trace(&density).re;
        if (check - 1.0).abs() > 1e-10 {
            return Err(Error::BrokenEnsemble {
                detail: format!("normalized Gibbs trace {check} misses 1 beyond 1e-10"),
            });
        }
        Ok(Ensemble {
            ctx: AlgebraContext::matrix(s.nrows()),
            form: EnsembleForm::Gibbs {
                entropy: shifted,
                kbar,
                density,
            },
        })
    }

    // ---- accessors ----------------------------------------------------------

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn form(&self) -> &EnsembleForm {
        &self.form
    }

    /// The density-matrix representation, for matrix-kind ensembles.
    pub fn as_density_matrix(&self) -> Option<CMatrix> {
        match &self.form {
            EnsembleForm::Weighted { .. } => None,
            EnsembleForm::PureVector { psi } => Some(psi * psi.adjoint()),
            EnsembleForm::Density { rho } => Some(rho.clone()),
            EnsembleForm::Gibbs { density, .. } => Some(density.clone()),
        }
    }

    // ---- the expectation functional ------------------------------------------

    /// ⟨f⟩.
    pub fn expectation(&self, f: &Quantity) -> Result<Complex64> {
        self.ctx.require_compatible(f.ctx())?;
        match (&self.form, f.data()) {
            (EnsembleForm::Weighted { weights }, QuantityData::Diagonal(v)) => Ok(weights
                .iter()
                .zip(v.iter())
                .map(|(&p, &fk)| p * fk)
                .sum()),
            (EnsembleForm::PureVector { psi }, QuantityData::Matrix(m)) => {
                Ok((psi.adjoint() * m * psi)[(0, 0)])
            }
            (EnsembleForm::Density { rho }, QuantityData::Matrix(m)) => {
                Ok(linalg::trace(&(rho * m)))
            }
            (EnsembleForm::Gibbs { density, .. }, QuantityData::Matrix(m)) => {
                Ok(linalg::trace(&(density * m)))
            }
            _ => Err(Error::FormMismatch {
                detail: format!(
                    "{} ensemble cannot take expectations of {} quantities",
                    self.form.name(),
                    f.ctx()
                ),
            }),
        }
    }

    /// cov(f, g) = Re⟨(f − ⟨f⟩)*(g − ⟨g⟩)⟩.
    pub fn covariance(&self, f: &Quantity, g: &Quantity) -> Result<f64> {
        let fbar = self.expectation(f)?;
        let gbar = self.expectation(g)?;
        let df = f.sub(&Quantity::scalar(*f.ctx(), fbar))?;
        let dg = g.sub(&Quantity::scalar(*g.ctx(), gbar))?;
        Ok(self.expectation(&df.adjoint().mul(&dg)?)?.re)
    }

    /// σ(f) = sqrt(cov(f, f)). Radicands in [−1e-12, 0) are clamped to 0;
    /// anything lower reports a broken ensemble.
    pub fn uncertainty(&self, f: &Quantity) -> Result<f64> {
        let c = self.covariance(f, f)?;
        if c < -SIGMA_CLAMP {
            return Err(Error::BrokenEnsemble {
                detail: format!("negative variance {c:.3e} for uncertainty"),
            });
        }
        Ok(c.max(0.0).sqrt())
    }

    /// f vanishes in the ensemble when ⟨f*f⟩ = 0 (within scale tolerance).
    pub fn is_vanishing(&self, f: &Quantity) -> Result<bool> {
        let ff = f.adjoint().mul(f)?;
        let val = self.expectation(&ff)?;
        let scale = f.spectral_norm().powi(2).max(1.0);
        Ok(val.norm() <= 1e-12 * scale)
    }

    // ---- tensor products -------------------------------------------------------

    /// The product ensemble of two independent ensembles; kinds must agree.
    pub fn tensor(&self, other: &Ensemble) -> Result<Ensemble> {
        match (&self.form, &other.form) {
            (EnsembleForm::Weighted { weights: a }, EnsembleForm::Weighted { weights: b }) => {
                let mut w = Vec::with_capacity(a.len() * b.len());
                for &pa in a {
                    for &pb in b {
                        w.push(pa * pb);
                    }
                }
                Ensemble::weighted(&w)
            }
            (EnsembleForm::PureVector { psi: a }, EnsembleForm::PureVector { psi: b }) => {
                Ensemble::pure(a.kronecker(b))
            }
            _ => {
                let a = self.as_density_matrix().ok_or(Error::FormMismatch {
                    detail: "cannot tensor weighted with matrix-kind ensembles".into(),
                })?;
                let b = other.as_density_matrix().ok_or(Error::FormMismatch {
                    detail: "cannot tensor matrix-kind with weighted ensembles".into(),
                })?;
                Ensemble::density(a.kronecker(&b))
            }
        }
    }

    /// The N-fold tensor power E^{⊗N}.
    pub fn tensor_power(&self, copies: usize) -> Result<Ensemble> {
        if copies == 0 {
            return Err(Error::invalid("tensor power needs at least one copy"));
        }
        let final_dim = self.ctx.dim.checked_pow(copies as u32);
        if final_dim.is_none_or(|d| d > MAX_TENSOR_DIM) {
            return Err(Error::DimensionOverflow {
                requested: final_dim.unwrap_or(usize::MAX),
                limit: MAX_TENSOR_DIM,
            });
        }
        let mut acc = self.clone();
        for _ in 1..copies {
            acc = acc.tensor(self)?;
        }
        Ok(acc)
    }
}

/// Embed f into slot `slot` of an N-fold tensor product:
/// 1 ⊗ … ⊗ f ⊗ … ⊗ 1.
pub fn slot_quantity(f: &Quantity, copies: usize, slot: usize) -> Result<Quantity> {
    if slot >= copies {
        return Err(Error::invalid(format!(
            "slot {slot} out of range for {copies} copies"
        )));
    }
    let final_dim = f.dim().checked_pow(copies as u32);
    if final_dim.is_none_or(|d| d > MAX_TENSOR_DIM) {
        return Err(Error::DimensionOverflow {
            requested: final_dim.unwrap_or(usize::MAX),
            limit: MAX_TENSOR_DIM,
        });
    }
    let one = Quantity::identity(*f.ctx());
    let mut acc: Option<Quantity> = None;
    for l in 0..copies {
        let factor = if l == slot { f } else { &one };
        acc = Some(match acc {
            None => factor.clone(),
            Some(a) => a.kron(factor)?,
        });
    }
    Ok(acc.expect("copies >= 1"))
}

/// Mean value f̄ = (1/N) Σ_l f_l over exact slot copies of a Hermitian f, in
/// the N-fold tensor ensemble: returns (⟨f̄⟩, σ(f̄)).
///
/// Slot quantities are independent by construction, so ⟨f̄⟩ = ⟨f⟩ and
/// σ(f̄) = σ(f)/√N hold to numerical precision.
pub fn tensor_power_mean(
    ensemble: &Ensemble,
    f: &Quantity,
    copies: usize,
) -> Result<(f64, f64)> {
    ensemble
        .ctx()
        .require_kind(AlgebraKind::Matrix, "tensor power mean")?;
    ensemble.ctx().require_compatible(f.ctx())?;
    f.require_hermitian()?;
    if copies == 0 || copies > 6 {
        return Err(Error::invalid(format!(
            "copies must lie in 1..=6, got {copies}"
        )));
    }
    let big = ensemble.tensor_power(copies)?;
    let mut mean = Quantity::zero(*slot_quantity(f, copies, 0)?.ctx());
    for l in 0..copies {
        mean = mean.add(&slot_quantity(f, copies, l)?)?;
    }
    mean = mean.scale_re(1.0 / copies as f64);
    let expect = big.expectation(&mean)?;
    let sigma = big.uncertainty(&mean)?;
    Ok((expect.re, sigma))
}
