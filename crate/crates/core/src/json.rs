//! JSON wire formats for quantities, ensembles, valuations and effects.
//!
//! Quantities serialize as `{"kind":"matrix"|"diagonal","dim":n,"data":[[re,im],...]}`
//! with row-major matrix data; parse errors name the offending index.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::context::{AlgebraContext, AlgebraKind};
use crate::effects::{Effect, Event};
use crate::ensemble::{Ensemble, EnsembleForm};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};
use crate::quantity::Quantity;
use crate::states::{Valuation, ValuationKind};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContextJson {
    pub kind: AlgebraKind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_herm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_psd: Option<f64>,
}

impl ContextJson {
    pub fn to_context(&self) -> Result<AlgebraContext> {
        let ctx = AlgebraContext::new(self.kind, self.dim)?;
        match (self.tol_herm, self.tol_psd) {
            (None, None) => Ok(ctx),
            (herm, psd) => ctx.with_tolerances(
                herm.unwrap_or(crate::context::DEFAULT_TOL),
                psd.unwrap_or(crate::context::DEFAULT_TOL),
            ),
        }
    }

    pub fn from_context(ctx: &AlgebraContext) -> Self {
        ContextJson {
            kind: ctx.kind,
            dim: ctx.dim,
            tol_herm: Some(ctx.tol_herm),
            tol_psd: Some(ctx.tol_psd),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantityJson {
    pub kind: AlgebraKind,
    pub dim: usize,
    /// Row-major [re, im] pairs: n² entries for matrices, n for diagonal.
    pub data: Vec<[f64; 2]>,
    /// Optional annotation: "effect" or "event".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
}

fn complex_entries(data: &[[f64; 2]], expected: usize, what: &str) -> Result<Vec<Complex64>> {
    if data.len() != expected {
        let offending = data.len().min(expected);
        return Err(Error::Parse {
            detail: format!(
                "{what} expects {expected} entries, found {}: first mismatch at row-major index {offending}",
                data.len()
            ),
        });
    }
    Ok(data.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
}

impl QuantityJson {
    pub fn from_quantity(q: &Quantity) -> Self {
        QuantityJson {
            kind: q.kind(),
            dim: q.dim(),
            data: q
                .entries_row_major()
                .iter()
                .map(|z| [z.re, z.im])
                .collect(),
            role: None,
        }
    }

    pub fn with_role(mut self, role: &str) -> Self {
        self.role = Some(role.to_string());
        self
    }

    pub fn to_quantity(&self) -> Result<Quantity> {
        match self.kind {
            AlgebraKind::Matrix => {
                let entries = complex_entries(
                    &self.data,
                    self.dim * self.dim,
                    &format!("{}x{} matrix", self.dim, self.dim),
                )?;
                Quantity::from_matrix(
                    AlgebraContext::matrix(self.dim),
                    CMatrix::from_row_slice(self.dim, self.dim, &entries),
                )
            }
            AlgebraKind::Diagonal => {
                let entries = complex_entries(
                    &self.data,
                    self.dim,
                    &format!("diagonal quantity of dimension {}", self.dim),
                )?;
                Quantity::from_diagonal(
                    AlgebraContext::diagonal(self.dim),
                    CVector::from_column_slice(&entries),
                )
            }
        }
    }

    /// Parse honoring the role annotation, so invalid effects/events are
    /// rejected at the boundary.
    pub fn to_effect(&self) -> Result<Effect> {
        let q = self.to_quantity()?;
        match self.role.as_deref() {
            Some("event") => Ok(Event::new(q)?.effect().clone()),
            Some("effect") | None => Effect::new(q),
            Some(other) => Err(Error::Parse {
                detail: format!("unknown role {other:?}, expected \"effect\" or \"event\""),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum EnsembleJson {
    Weighted {
        ctx: ContextJson,
        data: Vec<f64>,
    },
    Pure {
        ctx: ContextJson,
        data: Vec<[f64; 2]>,
    },
    Density {
        ctx: ContextJson,
        data: Vec<[f64; 2]>,
    },
    Gibbs {
        ctx: ContextJson,
        data: Vec<[f64; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        kbar: Option<f64>,
    },
}

impl EnsembleJson {
    pub fn from_ensemble(e: &Ensemble) -> Self {
        let ctx = ContextJson::from_context(e.ctx());
        match e.form() {
            EnsembleForm::Weighted { weights } => EnsembleJson::Weighted {
                ctx,
                data: weights.clone(),
            },
            EnsembleForm::PureVector { psi } => EnsembleJson::Pure {
                ctx,
                data: psi.iter().map(|z| [z.re, z.im]).collect(),
            },
            EnsembleForm::Density { rho } => EnsembleJson::Density {
                ctx,
                data: row_major(rho),
            },
            EnsembleForm::Gibbs { entropy, kbar, .. } => EnsembleJson::Gibbs {
                ctx,
                data: row_major(entropy),
                kbar: Some(*kbar),
            },
        }
    }

    pub fn to_ensemble(&self) -> Result<Ensemble> {
        match self {
            EnsembleJson::Weighted { ctx, data } => {
                if data.len() != ctx.dim {
                    return Err(Error::Parse {
                        detail: format!(
                            "weighted ensemble expects {} weights, found {}",
                            ctx.dim,
                            data.len()
                        ),
                    });
                }
                Ensemble::weighted(data)
            }
            EnsembleJson::Pure { ctx, data } => {
                let entries = complex_entries(data, ctx.dim, "pure state vector")?;
                Ensemble::pure(CVector::from_column_slice(&entries))
            }
            EnsembleJson::Density { ctx, data } => {
                let entries =
                    complex_entries(data, ctx.dim * ctx.dim, "density matrix")?;
                Ensemble::density(CMatrix::from_row_slice(ctx.dim, ctx.dim, &entries))
            }
            EnsembleJson::Gibbs { ctx, data, kbar } => {
                let entries =
                    complex_entries(data, ctx.dim * ctx.dim, "entropy matrix")?;
                let s = Quantity::from_matrix(
                    AlgebraContext::matrix(ctx.dim),
                    CMatrix::from_row_slice(ctx.dim, ctx.dim, &entries),
                )?;
                Ensemble::gibbs(&s, kbar.unwrap_or(1.0))
            }
        }
    }
}

fn row_major(m: &CMatrix) -> Vec<[f64; 2]> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            out.push([z.re, z.im]);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValuationJson {
    ClassicalPoint { ctx: ContextJson, omega: usize },
    Copenhagen { psi: Vec<[f64; 2]> },
    Ensemble { ensemble: EnsembleJson },
}

impl ValuationJson {
    pub fn from_valuation(v: &Valuation) -> Self {
        match v.kind() {
            ValuationKind::ClassicalPoint { omega } => ValuationJson::ClassicalPoint {
                ctx: ContextJson::from_context(v.ctx()),
                omega: *omega,
            },
            ValuationKind::Copenhagen { psi } => ValuationJson::Copenhagen {
                psi: psi.iter().map(|z| [z.re, z.im]).collect(),
            },
            ValuationKind::EnsembleState { ensemble } => ValuationJson::Ensemble {
                ensemble: EnsembleJson::from_ensemble(ensemble),
            },
        }
    }

    pub fn to_valuation(&self) -> Result<Valuation> {
        match self {
            ValuationJson::ClassicalPoint { ctx, omega } => {
                Valuation::classical_point(ctx.to_context()?, *omega)
            }
            ValuationJson::Copenhagen { psi } => {
                let entries: Vec<Complex64> =
                    psi.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                Valuation::copenhagen(CVector::from_column_slice(&entries))
            }
            ValuationJson::Ensemble { ensemble } => {
                Ok(Valuation::ensemble_state(ensemble.to_ensemble()?))
            }
        }
    }
}
