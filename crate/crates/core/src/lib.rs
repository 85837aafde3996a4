//! Finite-dimensional Q-algebra toolkit.
//!
//! Quantities live in one of two concrete realizations — the commutative
//! diagonal algebra C^n or the full matrix algebra C^{n×n} — and everything
//! else is built on top of them: expectation functionals (ensembles) with
//! covariance and uncertainty, complementarity certification, CHSH
//! correlation bounds, effect/event logic, partial valuations (states) with
//! sharpness analysis, and one-parameter automorphism dynamics in both the
//! Heisenberg and the Schrödinger picture.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is thread-safe by construction.

pub mod axioms;
pub mod bell;
pub mod context;
pub mod dynamics;
pub mod effects;
pub mod ensemble;
pub mod error;
pub mod json;
pub mod linalg;
pub mod quantity;
pub mod random;
pub mod states;
pub mod uncertainty;

pub use axioms::{check_ensemble_axioms, check_qalgebra_axioms, AxiomCheck, AxiomReport, AXIOM_TOL};
pub use bell::{build_spinpair, chsh, ChshReport, CLASSICAL_BOUND, TSIRELSON_BOUND};
pub use context::{AlgebraContext, AlgebraKind, DEFAULT_TOL};
pub use dynamics::{
    automorphism_residuals, check_heisenberg_equation, check_von_neumann, evolve_ensemble,
    evolve_quantity, evolve_state, scattering_map, AutomorphismFamily, AutomorphismResiduals,
};
pub use effects::{
    and_or, check_alternative, is_independent, probability, relative_frequency, Alternative,
    AlternativeReport, Effect, Event,
};
pub use ensemble::{slot_quantity, tensor_power_mean, Ensemble, EnsembleForm, MAX_TENSOR_DIM};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector};
pub use quantity::{Quantity, QuantityData};
pub use states::{
    approx_product_rule, check_sharpness, mermin_peres_nogo, sharp_bell, spectrum_membership,
    ApproxProductCheck, NogoReport, SharpBellReport, SharpnessReport, SharpnessWitness,
    SpectrumReport, Valuation, ValuationKind, Value,
};
pub use uncertainty::{
    certify_complementarity, certify_complementarity_default, check_cauchy_schwarz,
    check_uncertainty_relation, truncated_oscillator, ComplementarityCertificate,
    InequalityCheck,
};

/// Crate-wide complex scalar type.
pub type Complex = num_complex::Complex64;
