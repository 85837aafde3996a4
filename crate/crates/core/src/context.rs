use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for Hermiticity and positivity tests.
pub const DEFAULT_TOL: f64 = 1e-10;

/// The two concrete algebra realizations.
///
/// `Diagonal` is the commutative algebra of complex n-vectors under pointwise
/// operations (classical elementary events); `Matrix` is the full algebra of
/// complex n×n matrices under the Loewner order (n-level quantum systems).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Diagonal,
    Matrix,
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraKind::Diagonal => write!(f, "diagonal"),
            AlgebraKind::Matrix => write!(f, "matrix"),
        }
    }
}

/// Which realization a quantity lives in, plus the numeric tolerances that
/// define order, norm and positivity at finite precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgebraContext {
    pub kind: AlgebraKind,
    pub dim: usize,
    /// Relative tolerance for Hermiticity tests (`‖f − f*‖ ≤ tol_herm·max(1,‖f‖)`).
    pub tol_herm: f64,
    /// Relative eigenvalue tolerance for positivity tests.
    pub tol_psd: f64,
}

impl AlgebraContext {
    pub fn new(kind: AlgebraKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("algebra dimension must be at least 1"));
        }
        Ok(AlgebraContext {
            kind,
            dim,
            tol_herm: DEFAULT_TOL,
            tol_psd: DEFAULT_TOL,
        })
    }

    /// Full matrix algebra C^{n×n}.
    pub fn matrix(dim: usize) -> Self {
        Self::new(AlgebraKind::Matrix, dim).expect("dim >= 1")
    }

    /// Commutative diagonal algebra C^n.
    pub fn diagonal(dim: usize) -> Self {
        Self::new(AlgebraKind::Diagonal, dim).expect("dim >= 1")
    }

    pub fn with_tolerances(mut self, tol_herm: f64, tol_psd: f64) -> Result<Self> {
        if !(tol_herm.is_finite() && tol_herm > 0.0 && tol_psd.is_finite() && tol_psd > 0.0) {
            return Err(Error::invalid("tolerances must be positive"));
        }
        self.tol_herm = tol_herm;
        self.tol_psd = tol_psd;
        Ok(self)
    }

    /// Two contexts are compatible when kind and dimension agree; tolerances
    /// may differ (the left operand's tolerances win in mixed operations).
    pub fn compatible(&self, other: &AlgebraContext) -> bool {
        self.kind == other.kind && self.dim == other.dim
    }

    pub(crate) fn require_compatible(&self, other: &AlgebraContext) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(Error::ctx_mismatch(
                format!("{}({})", self.kind, self.dim),
                format!("{}({})", other.kind, other.dim),
            ))
        }
    }

    pub(crate) fn require_kind(&self, kind: AlgebraKind, what: &str) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::FormMismatch {
                detail: format!("{what} requires a {kind} context, found {}", self.kind),
            })
        }
    }
}

impl std::fmt::Display for AlgebraContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({})", self.kind, self.dim)
    }
}
