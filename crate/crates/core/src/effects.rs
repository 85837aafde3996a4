//! Effects (fuzzy events), events, alternatives, the commuting-effect logic
//! and relative frequencies.

use serde::Serialize;

use crate::ensemble::{slot_quantity, Ensemble};
use crate::error::{Error, Result};
use crate::quantity::Quantity;

/// Absolute residual accepted by the effect/event validators.
const LOGIC_TOL: f64 = 1e-10;

/// A quantity e with 0 ≤ e ≤ 1.
///
/// The constructor validates and wraps; near misses are rejected with the
/// residual reported, never repaired.
#[derive(Debug, Clone, PartialEq)]
pub struct Effect {
    q: Quantity,
}

impl Effect {
    pub fn new(q: Quantity) -> Result<Self> {
        let scale = q.spectral_norm().max(1.0);
        let herm = q.hermiticity_residual();
        if herm > q.ctx().tol_herm * scale {
            return Err(Error::NotAnEffect {
                detail: format!("hermiticity residual {herm:.3e}"),
            });
        }
        let min = q.min_eigenvalue();
        let max = q.max_eigenvalue();
        let tol = q.ctx().tol_psd * scale;
        if min < -tol || max > 1.0 + tol {
            return Err(Error::NotAnEffect {
                detail: format!(
                    "spectrum [{min:.6}, {max:.6}] leaves [0,1] by {:.3e}",
                    (-min).max(max - 1.0).max(0.0)
                ),
            });
        }
        Ok(Effect { q })
    }

    pub fn quantity(&self) -> &Quantity {
        &self.q
    }

    /// ¬e = 1 − e; events map to events.
    pub fn negate(&self) -> Effect {
        let one = Quantity::identity(*self.q.ctx());
        Effect {
            q: one.sub(&self.q).expect("same context"),
        }
    }
}

/// A Hermitian idempotent effect: e² = e = e*.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    e: Effect,
}

impl Event {
    pub fn new(q: Quantity) -> Result<Self> {
        let herm = q.hermiticity_residual();
        if herm > LOGIC_TOL {
            return Err(Error::NotAnEvent {
                detail: format!("hermiticity residual {herm:.3e}"),
            });
        }
        let idem = q.power(2).distance(&q);
        if idem > LOGIC_TOL {
            return Err(Error::NotAnEvent {
                detail: format!("idempotence residual {idem:.3e}"),
            });
        }
        Ok(Event { e: Effect::new(q)? })
    }

    /// The elementary event e_φ = φφ* of a unit vector.
    pub fn elementary(phi: &crate::linalg::CVector) -> Result<Self> {
        Event::new(Quantity::projector(phi)?)
    }

    pub fn effect(&self) -> &Effect {
        &self.e
    }

    pub fn quantity(&self) -> &Quantity {
        self.e.quantity()
    }

    pub fn negate(&self) -> Event {
        Event {
            e: self.e.negate(),
        }
    }
}

/// A family of effects with Σ e_l ≤ 1.
#[derive(Debug, Clone)]
pub struct Alternative {
    members: Vec<Effect>,
}

impl Alternative {
    pub fn new(members: Vec<Effect>) -> Result<Self> {
        let report = check_alternative(&members);
        if !report.valid {
            return Err(Error::invalid(format!(
                "not an alternative: {}",
                report.violations.join("; ")
            )));
        }
        Ok(Alternative { members })
    }

    pub fn members(&self) -> &[Effect] {
        &self.members
    }
}

/// Diagnostics for a candidate alternative.
#[derive(Debug, Clone, Serialize)]
pub struct AlternativeReport {
    /// Σ e_l ≤ 1 holds.
    pub sum_bounded: bool,
    /// How far the top of the spectrum of Σ e_l exceeds 1.
    pub sum_excess: f64,
    pub all_events: bool,
    /// Pairwise e_k e_l = 0 among events (None when not all members are
    /// events).
    pub pairwise_disjoint: Option<bool>,
    pub violations: Vec<String>,
    pub valid: bool,
}

/// Verify Σ ≤ 1 and, for all-event families, pairwise disjointness.
pub fn check_alternative(members: &[Effect]) -> AlternativeReport {
    let mut violations = Vec::new();
    let mut sum_bounded = true;
    let mut sum_excess = 0.0;
    if let Some(first) = members.first() {
        if let Some(stranger) = members
            .iter()
            .find(|e| !e.quantity().ctx().compatible(first.quantity().ctx()))
        {
            violations.push(format!(
                "members live in different contexts ({} vs {})",
                first.quantity().ctx(),
                stranger.quantity().ctx()
            ));
            return AlternativeReport {
                sum_bounded: false,
                sum_excess: f64::INFINITY,
                all_events: false,
                pairwise_disjoint: None,
                violations,
                valid: false,
            };
        }
        let mut total = Quantity::zero(*first.quantity().ctx());
        for e in members {
            total = total.add(e.quantity()).expect("same context");
        }
        sum_excess = (total.max_eigenvalue() - 1.0).max(0.0);
        let one = Quantity::identity(*total.ctx());
        sum_bounded = one.sub(&total).expect("same context").is_positive();
        if !sum_bounded {
            violations.push(format!(
                "sum of members exceeds 1 by {sum_excess:.3e} in the spectrum"
            ));
        }
    }
    let all_events = members
        .iter()
        .all(|e| Event::new(e.quantity().clone()).is_ok());
    let pairwise_disjoint = if all_events && members.len() > 1 {
        let mut disjoint = true;
        for k in 0..members.len() {
            for l in (k + 1)..members.len() {
                let prod = members[k]
                    .quantity()
                    .mul(members[l].quantity())
                    .expect("same context");
                let norm = prod.spectral_norm();
                if norm > LOGIC_TOL {
                    disjoint = false;
                    violations.push(format!(
                        "events {k} and {l} overlap: ‖e_{k}e_{l}‖ = {norm:.3e}"
                    ));
                }
            }
        }
        Some(disjoint)
    } else {
        None
    };
    let valid = sum_bounded && pairwise_disjoint.unwrap_or(true);
    AlternativeReport {
        sum_bounded,
        sum_excess,
        all_events,
        pairwise_disjoint,
        violations,
        valid,
    }
}

/// The probability ⟨e⟩ of an effect; real, and inside [0, 1] up to
/// tolerance for any valid ensemble.
pub fn probability(ensemble: &Ensemble, effect: &Effect) -> Result<f64> {
    let val = ensemble.expectation(effect.quantity())?;
    if val.im.abs() > LOGIC_TOL {
        return Err(Error::BrokenEnsemble {
            detail: format!("effect probability has imaginary part {:.3e}", val.im),
        });
    }
    if val.re < -LOGIC_TOL || val.re > 1.0 + LOGIC_TOL {
        return Err(Error::BrokenEnsemble {
            detail: format!("effect probability {} outside [0,1]", val.re),
        });
    }
    Ok(val.re)
}

fn require_commuting(e: &Effect, other: &Effect) -> Result<()> {
    let norm = e
        .quantity()
        .commutator(other.quantity())?
        .spectral_norm();
    if norm > LOGIC_TOL {
        return Err(Error::NoncommutingEffects {
            commutator_norm: norm,
            tolerance: LOGIC_TOL,
        });
    }
    Ok(())
}

/// e ∧ e′ = ee′ and e ∨ e′ = e + e′ − ee′ for commuting effects.
pub fn and_or(e: &Effect, other: &Effect) -> Result<(Effect, Effect)> {
    require_commuting(e, other)?;
    let prod = e.quantity().mul(other.quantity())?;
    let join = e
        .quantity()
        .add(other.quantity())?
        .sub(&prod)?;
    Ok((Effect::new(prod)?, Effect::new(join)?))
}

/// ⟨ee′⟩ = ⟨e⟩⟨e′⟩ within 1e-10, for commuting effects.
pub fn is_independent(ensemble: &Ensemble, e: &Effect, other: &Effect) -> Result<bool> {
    require_commuting(e, other)?;
    let joint = ensemble.expectation(&e.quantity().mul(other.quantity())?)?;
    let p = ensemble.expectation(e.quantity())?;
    let q = ensemble.expectation(other.quantity())?;
    Ok((joint - p * q).norm() <= LOGIC_TOL)
}

/// Relative frequency q = (1/N) Σ_l e_l of slot copies of an effect in the
/// N-fold tensor ensemble: returns (⟨q⟩, σ(q)).
///
/// For events, σ(q) = sqrt(p(1−p)/N) holds to numerical precision.
pub fn relative_frequency(
    ensemble: &Ensemble,
    effect: &Effect,
    copies: usize,
) -> Result<(f64, f64)> {
    if copies == 0 || copies > 6 {
        return Err(Error::invalid(format!(
            "copies must lie in 1..=6, got {copies}"
        )));
    }
    ensemble.ctx().require_compatible(effect.quantity().ctx())?;
    let big = ensemble.tensor_power(copies)?;
    let mut freq = Quantity::zero(*slot_quantity(effect.quantity(), copies, 0)?.ctx());
    for l in 0..copies {
        freq = freq.add(&slot_quantity(effect.quantity(), copies, l)?)?;
    }
    freq = freq.scale_re(1.0 / copies as f64);
    let expect = big.expectation(&freq)?.re;
    let sigma = big.uncertainty(&freq)?;
    Ok((expect, sigma))
}
