//! States as partial valuations: classical point states, Copenhagen states,
//! ensemble states; sharpness analysis, spectrum membership, the four-quantity
//! no-go enumeration, the sharp-state Bell bound and the approximate product
//! rule.

use num_complex::Complex64;
use serde::Serialize;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::ensemble::Ensemble;
use crate::error::{Error, Result};
use crate::linalg::{self, CVector};
use crate::quantity::{Quantity, QuantityData};

/// Relative threshold for eigenvector detection in Copenhagen states.
pub const EIGENVECTOR_TOL: f64 = 1e-9;

/// Residual bound for a sharp rule instance.
pub const SHARPNESS_TOL: f64 = 1e-9;

/// Condition-number limit for closing a sharp set under inverses.
const INVERSION_CONDITION_LIMIT: f64 = 1e8;

/// Closure growth cap; reports record when it bites.
const CLOSURE_CAP: usize = 256;

const COMMUTE_TOL: f64 = 1e-10;

/// A reference value: a complex number, or the unspecified symbol `?`.
///
/// Arithmetic on `?` yields `?`, with the single exception 0·? = ?·0 = 0.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Defined(Complex64),
    Undefined { reason: String },
}

impl Value {
    pub fn defined(z: Complex64) -> Self {
        Value::Defined(z)
    }

    pub fn undefined(reason: impl Into<String>) -> Self {
        Value::Undefined {
            reason: reason.into(),
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Value::Defined(_))
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            Value::Defined(z) => Some(*z),
            Value::Undefined { .. } => None,
        }
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Defined(a), Value::Defined(b)) => Value::Defined(a * b),
            (Value::Defined(z), _) | (_, Value::Defined(z)) if z.norm() == 0.0 => {
                Value::Defined(Complex64::ZERO)
            }
            (Value::Undefined { reason }, _) | (_, Value::Undefined { reason }) => {
                Value::undefined(reason.clone())
            }
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Defined(a), Value::Defined(b)) => Value::Defined(a + b),
            (Value::Undefined { reason }, _) | (_, Value::Undefined { reason }) => {
                Value::undefined(reason.clone())
            }
        }
    }
}

/// The three state realizations.
#[derive(Debug, Clone)]
pub enum ValuationKind {
    /// Evaluation at a point of the diagonal algebra; always defined at
    /// finite resolution.
    ClassicalPoint { omega: usize },
    /// Eigenvalue if ψ is an eigenvector of f, `?` otherwise.
    Copenhagen { psi: CVector },
    /// The expectation of an ensemble; defined for every quantity.
    EnsembleState { ensemble: Ensemble },
}

/// A partial valuation v: quantities → C ∪ {?}.
#[derive(Debug, Clone)]
pub struct Valuation {
    ctx: AlgebraContext,
    kind: ValuationKind,
}

impl Valuation {
    pub fn classical_point(ctx: AlgebraContext, omega: usize) -> Result<Self> {
        ctx.require_kind(AlgebraKind::Diagonal, "classical point state")?;
        if omega >= ctx.dim {
            return Err(Error::invalid(format!(
                "point index {omega} out of range for dimension {}",
                ctx.dim
            )));
        }
        Ok(Valuation {
            ctx,
            kind: ValuationKind::ClassicalPoint { omega },
        })
    }

    pub fn copenhagen(psi: CVector) -> Result<Self> {
        let norm = psi.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::invalid("Copenhagen state vector must be nonzero"));
        }
        let unit = psi.map(|z| z / norm);
        Ok(Valuation {
            ctx: AlgebraContext::matrix(unit.len()),
            kind: ValuationKind::Copenhagen { psi: unit },
        })
    }

    pub fn ensemble_state(ensemble: Ensemble) -> Self {
        Valuation {
            ctx: *ensemble.ctx(),
            kind: ValuationKind::EnsembleState { ensemble },
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn kind(&self) -> &ValuationKind {
        &self.kind
    }

    /// The reference value v(f).
    pub fn value(&self, f: &Quantity) -> Result<Value> {
        self.ctx.require_compatible(f.ctx())?;
        match &self.kind {
            ValuationKind::ClassicalPoint { omega } => match f.data() {
                QuantityData::Diagonal(v) => Ok(Value::Defined(v[*omega])),
                QuantityData::Matrix(_) => unreachable!("kind checked by context"),
            },
            ValuationKind::Copenhagen { psi } => {
                let m = f.as_matrix().expect("kind checked by context");
                let lambda = (psi.adjoint() * m * psi)[(0, 0)];
                let residual = (m * psi - psi.map(|z| lambda * z)).norm();
                let threshold = EIGENVECTOR_TOL * f.spectral_norm().max(1.0);
                if residual <= threshold {
                    Ok(Value::Defined(lambda))
                } else {
                    Ok(Value::undefined(format!(
                        "not an eigenvector: residual {residual:.3e} exceeds threshold {threshold:.3e}"
                    )))
                }
            }
            ValuationKind::EnsembleState { ensemble } => {
                Ok(Value::Defined(ensemble.expectation(f)?))
            }
        }
    }
}

// ---- sharpness ---------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct SharpnessWitness {
    pub rule: String,
    pub quantities: String,
    pub residual: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleResidual {
    pub rule: String,
    pub max_residual: f64,
    pub instances: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SharpnessReport {
    pub verdict: bool,
    pub rules: Vec<RuleResidual>,
    pub witnesses: Vec<SharpnessWitness>,
    pub closure_size: usize,
    pub closure_depth: usize,
    pub closure_truncated: bool,
}

struct Closure {
    items: Vec<(String, Quantity)>,
    truncated: bool,
}

impl Closure {
    fn push(&mut self, name: String, q: Quantity) {
        if self.items.len() >= CLOSURE_CAP {
            self.truncated = true;
            return;
        }
        let scale = q.spectral_norm().max(1.0);
        if self
            .items
            .iter()
            .any(|(_, existing)| existing.distance(&q) <= 1e-12 * scale)
        {
            return;
        }
        self.items.push((name, q));
    }
}

fn hermitian_inverse(q: &Quantity) -> Option<Quantity> {
    match q.data() {
        QuantityData::Diagonal(v) => {
            let top = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let bottom = v.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
            if bottom <= top.max(1.0) / INVERSION_CONDITION_LIMIT {
                return None;
            }
            let inv = v.map(|z| z.inv());
            Quantity::from_diagonal(*q.ctx(), inv).ok()
        }
        QuantityData::Matrix(m) => {
            let (values, _) = linalg::hermitian_eigen(m);
            let top = values.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
            let bottom = values.iter().fold(f64::INFINITY, |a, &x| a.min(x.abs()));
            if bottom <= top.max(1.0) / INVERSION_CONDITION_LIMIT {
                return None;
            }
            let inv = linalg::hermitian_function(m, |x| Complex64::new(1.0 / x, 0.0));
            Quantity::from_matrix(*q.ctx(), inv).ok()
        }
    }
}

fn commute(a: &Quantity, b: &Quantity) -> bool {
    a.commutator(b)
        .map(|c| c.spectral_norm() <= COMMUTE_TOL * (a.spectral_norm() * b.spectral_norm()).max(1.0))
        .unwrap_or(false)
}

struct RuleTable {
    rules: Vec<RuleResidual>,
    witnesses: Vec<SharpnessWitness>,
}

impl RuleTable {
    fn new() -> Self {
        RuleTable {
            rules: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn record(&mut self, rule: &str, quantities: &str, residual: f64, detail: &str) {
        let entry = match self.rules.iter_mut().find(|r| r.rule == rule) {
            Some(entry) => entry,
            None => {
                self.rules.push(RuleResidual {
                    rule: rule.to_string(),
                    max_residual: 0.0,
                    instances: 0,
                });
                self.rules.last_mut().expect("just pushed")
            }
        };
        entry.instances += 1;
        entry.max_residual = entry.max_residual.max(residual);
        if residual > SHARPNESS_TOL {
            self.witnesses.push(SharpnessWitness {
                rule: rule.to_string(),
                quantities: quantities.to_string(),
                residual,
                detail: detail.to_string(),
            });
        }
    }

    fn record_undefined(&mut self, rule: &str, quantities: &str, reason: &str) {
        self.record(rule, quantities, f64::INFINITY, reason);
    }
}

/// Close `set` under squares, inverses and commuting sums/differences up to
/// `closure_depth` rounds, then evaluate the sharpness rules on every
/// applicable instance.
pub fn check_sharpness(
    valuation: &Valuation,
    set: &[Quantity],
    closure_depth: usize,
) -> Result<SharpnessReport> {
    if set.is_empty() {
        return Err(Error::invalid("sharpness check needs a nonempty set"));
    }
    for f in set {
        valuation.ctx().require_compatible(f.ctx())?;
        f.require_hermitian()?;
    }

    let mut closure = Closure {
        items: Vec::new(),
        truncated: false,
    };
    for (i, f) in set.iter().enumerate() {
        closure.push(format!("f{}", i + 1), f.clone());
    }
    for _round in 0..closure_depth {
        let snapshot = closure.items.clone();
        for (name, q) in &snapshot {
            closure.push(format!("({name})^2"), q.power(2));
            if let Some(inv) = hermitian_inverse(q) {
                closure.push(format!("({name})^-1"), inv);
            }
        }
        for i in 0..snapshot.len() {
            for j in i..snapshot.len() {
                let (na, a) = &snapshot[i];
                let (nb, b) = &snapshot[j];
                if commute(a, b) {
                    closure.push(format!("({na}+{nb})"), a.add(b)?);
                    closure.push(format!("({na}-{nb})"), a.sub(b)?);
                }
            }
        }
    }

    let mut table = RuleTable::new();
    let value_of = |q: &Quantity| valuation.value(q);

    // (SQ0): values defined and real
    let mut values: Vec<Value> = Vec::with_capacity(closure.items.len());
    for (name, q) in &closure.items {
        let v = value_of(q)?;
        match &v {
            Value::Defined(z) => {
                table.record("SQ0", name, z.im.abs(), "imaginary part of reference value");
            }
            Value::Undefined { reason } => {
                table.record_undefined("SQ0", name, reason);
            }
        }
        values.push(v);
    }

    // (SQ1): v(f²) = v(f)²
    for (idx, (name, q)) in closure.items.iter().enumerate() {
        let sq = q.power(2);
        let vsq = value_of(&sq)?;
        match (&values[idx], &vsq) {
            (Value::Defined(a), Value::Defined(b)) => {
                table.record(
                    "SQ1",
                    &format!("{name}, ({name})^2"),
                    (b - a * a).norm(),
                    "v(f^2) vs v(f)^2",
                );
            }
            _ => table.record_undefined("SQ1", name, "undefined value in squaring rule"),
        }
    }

    // (SQ2): v(f⁻¹) = v(f)⁻¹ for invertible members
    for (idx, (name, q)) in closure.items.iter().enumerate() {
        if let Some(inv) = hermitian_inverse(q) {
            let vinv = value_of(&inv)?;
            match (&values[idx], &vinv) {
                (Value::Defined(a), Value::Defined(b)) => {
                    // compare b·a with 1 to stay stable near small values
                    table.record(
                        "SQ2",
                        &format!("{name}, ({name})^-1"),
                        (b * a - Complex64::ONE).norm(),
                        "v(f^-1)·v(f) vs 1",
                    );
                }
                _ => table.record_undefined("SQ2", name, "undefined value in inversion rule"),
            }
        }
    }

    // (SQ3): v(f + λg) = v(f) + λ v(g) for commuting pairs
    // (e.s1): v(fg) = v(f) v(g) for commuting pairs
    for i in 0..closure.items.len() {
        for j in i..closure.items.len() {
            let (na, a) = &closure.items[i];
            let (nb, b) = &closure.items[j];
            if !commute(a, b) {
                continue;
            }
            let pair = format!("{na}, {nb}");
            for lambda in [1.0, -1.0, 0.5] {
                let combo = a.add(&b.scale_re(lambda))?;
                let vc = value_of(&combo)?;
                match (&values[i], &values[j], &vc) {
                    (Value::Defined(va), Value::Defined(vb), Value::Defined(v)) => {
                        table.record(
                            "SQ3",
                            &pair,
                            (v - (va + lambda * vb)).norm(),
                            "v(f+λg) vs v(f)+λv(g)",
                        );
                    }
                    _ => table.record_undefined("SQ3", &pair, "undefined value in commuting sum"),
                }
            }
            let prod = a.mul(b)?;
            let vp = value_of(&prod)?;
            match (&values[i], &values[j], &vp) {
                (Value::Defined(va), Value::Defined(vb), Value::Defined(v)) => {
                    table.record("e.s1", &pair, (v - va * vb).norm(), "v(fg) vs v(f)v(g)");
                }
                _ => table.record_undefined("e.s1", &pair, "undefined value in product rule"),
            }
        }
    }

    // (e.s2): v(α + βf) = α + β v(f) for real α, β
    for (idx, (name, q)) in closure.items.iter().enumerate() {
        for (alpha, beta) in [(0.5, 2.0), (-1.0, 1.0)] {
            let shifted = Quantity::scalar(*q.ctx(), Complex64::new(alpha, 0.0))
                .add(&q.scale_re(beta))?;
            let vs = value_of(&shifted)?;
            match (&values[idx], &vs) {
                (Value::Defined(a), Value::Defined(b)) => {
                    table.record(
                        "e.s2",
                        name,
                        (b - (alpha + beta * a)).norm(),
                        "v(α+βf) vs α+βv(f)",
                    );
                }
                _ => table.record_undefined("e.s2", name, "undefined value in affine rule"),
            }
        }
    }

    let verdict = table.witnesses.is_empty()
        && table.rules.iter().all(|r| r.max_residual <= SHARPNESS_TOL);
    Ok(SharpnessReport {
        verdict,
        rules: table.rules,
        witnesses: table.witnesses,
        closure_size: closure.items.len(),
        closure_depth,
        closure_truncated: closure.truncated,
    })
}

// ---- spectrum membership --------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub value: f64,
    pub min_singular_value: f64,
    pub in_spectrum: bool,
    /// For events: whether the value is 0 or 1 within 1e-9.
    pub event_value_dichotomic: Option<bool>,
}

/// Verify that a sharp Hermitian quantity's reference value lies in its
/// spectrum: λ − f is singular to within 1e-8·max(1,‖f‖).
pub fn spectrum_membership(valuation: &Valuation, f: &Quantity) -> Result<SpectrumReport> {
    f.require_hermitian()?;
    let value = match valuation.value(f)? {
        Value::Defined(z) => z,
        Value::Undefined { reason } => {
            return Err(Error::UndefinedValue {
                detail: format!("spectrum membership needs a defined value: {reason}"),
            })
        }
    };
    let sharp = check_sharpness(valuation, std::slice::from_ref(f), 2)?;
    if !sharp.verdict {
        return Err(Error::PreconditionFailed {
            detail: format!(
                "quantity is not sharp in this state ({} witnesses, worst rule {})",
                sharp.witnesses.len(),
                sharp
                    .witnesses
                    .first()
                    .map(|w| w.rule.as_str())
                    .unwrap_or("none")
            ),
        });
    }

    let shifted = Quantity::scalar(*f.ctx(), value).sub(f)?;
    let min_singular = match shifted.data() {
        QuantityData::Diagonal(v) => v.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min),
        QuantityData::Matrix(m) => linalg::min_singular_value(m),
    };
    let in_spectrum = min_singular <= 1e-8 * f.spectral_norm().max(1.0);

    let event_value_dichotomic = crate::effects::Event::new(f.clone()).ok().map(|_| {
        let re = value.re;
        (re.abs() <= 1e-9 || (re - 1.0).abs() <= 1e-9) && value.im.abs() <= 1e-9
    });

    Ok(SpectrumReport {
        value: value.re,
        min_singular_value: min_singular,
        in_spectrum,
        event_value_dichotomic,
    })
}

// ---- the four-quantity no-go --------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct NogoReport {
    /// f_j² = 1 and the (anti)commutation pattern hold within 1e-10.
    pub relations_ok: bool,
    /// Worst residual over the squares and the pattern.
    pub relation_residual: f64,
    /// Sign s in the verified identity f1f4f2f3 = s·f1f2f3f4.
    pub sign: f64,
    pub sign_residual: f64,
    /// Number of assignments (v1..v4) ∈ {−1,1}⁴ consistent with the product
    /// rule along both groupings.
    pub consistent_assignments: usize,
}

/// Enumerate all sign assignments for four Hermitian quantities with
/// f_j² = 1 that anticommute for |j−k| = 2 and commute otherwise. When the
/// relations hold, no assignment survives the product rule.
pub fn mermin_peres_nogo(quadruple: &[Quantity; 4]) -> Result<NogoReport> {
    let one = Quantity::identity(*quadruple[0].ctx());
    let mut relation_residual: f64 = 0.0;
    for f in quadruple {
        quadruple[0].ctx().require_compatible(f.ctx())?;
        relation_residual = relation_residual.max(f.power(2).distance(&one));
    }
    for j in 0..4 {
        for k in (j + 1)..4 {
            let prod_jk = quadruple[j].mul(&quadruple[k])?;
            let prod_kj = quadruple[k].mul(&quadruple[j])?;
            let residual = if k - j == 2 {
                prod_jk.add(&prod_kj)?.spectral_norm()
            } else {
                prod_jk.sub(&prod_kj)?.spectral_norm()
            };
            relation_residual = relation_residual.max(residual);
        }
    }
    let relations_ok = relation_residual <= 1e-10;

    // verified sign identity: f1f4f2f3 = s · f1f2f3f4
    let grouping_a = quadruple[0]
        .mul(&quadruple[1])?
        .mul(&quadruple[2].mul(&quadruple[3])?)?;
    let grouping_b = quadruple[0]
        .mul(&quadruple[3])?
        .mul(&quadruple[1].mul(&quadruple[2])?)?;
    let plus = grouping_b.distance(&grouping_a);
    let minus = grouping_b.distance(&grouping_a.neg());
    let (sign, sign_residual) = if minus < plus { (-1.0, minus) } else { (1.0, plus) };

    let mut consistent = 0usize;
    for mask in 0..16u32 {
        let v: Vec<f64> = (0..4)
            .map(|bit| if mask & (1 << bit) == 0 { 1.0 } else { -1.0 })
            .collect();
        // v(f1f2f3f4) = v1v2·v3v4 via (f1f2)(f3f4)
        let via_a = v[0] * v[1] * v[2] * v[3];
        // v(f1f4f2f3) = v1v4·v2v3 via (f1f4)(f2f3)
        let via_b = v[0] * v[3] * v[1] * v[2];
        // the same quantity up to the verified sign: v(f1f4f2f3) = s·v(f1f2f3f4)
        if (via_b - sign * via_a).abs() < 0.5 {
            consistent += 1;
        }
    }

    Ok(NogoReport {
        relations_ok,
        relation_residual,
        sign,
        sign_residual,
        consistent_assignments: consistent,
    })
}

// ---- sharp-state Bell inequality ---------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct SharpBellReport {
    pub values: [f64; 4],
    pub gamma: f64,
    pub holds: bool,
}

/// For a state with a sharp set containing four Hermitian quantities with
/// f_j² = 1 and [f_j, f_k] = 0 for odd j−k, the product rule forces
/// |v(f1f2) + v(f2f3) + v(f3f4) − v(f1f4)| ≤ 2.
pub fn sharp_bell(valuation: &Valuation, quadruple: &[Quantity; 4]) -> Result<SharpBellReport> {
    let one = Quantity::identity(*quadruple[0].ctx());
    for (j, f) in quadruple.iter().enumerate() {
        f.require_hermitian()?;
        let res = f.power(2).distance(&one);
        if res > 1e-10 * f.spectral_norm().powi(2).max(1.0) {
            return Err(Error::PreconditionFailed {
                detail: format!("f{}² = 1 fails with residual {res:.3e}", j + 1),
            });
        }
    }
    let odd_pairs = [(0usize, 1usize), (1, 2), (2, 3), (0, 3)];
    for (j, k) in odd_pairs {
        let norm = quadruple[j].commutator(&quadruple[k])?.spectral_norm();
        if norm > COMMUTE_TOL {
            return Err(Error::PreconditionFailed {
                detail: format!(
                    "f{} and f{} must commute (commutator norm {norm:.3e})",
                    j + 1,
                    k + 1
                ),
            });
        }
    }

    let mut singles = [0.0f64; 4];
    for (j, f) in quadruple.iter().enumerate() {
        match valuation.value(f)? {
            Value::Defined(z) => singles[j] = z.re,
            Value::Undefined { reason } => {
                return Err(Error::UndefinedValue {
                    detail: format!("v(f{}) undefined: {reason}", j + 1),
                })
            }
        }
    }
    for (j, k) in odd_pairs {
        let prod = quadruple[j].mul(&quadruple[k])?;
        if !valuation.value(&prod)?.is_defined() {
            return Err(Error::UndefinedValue {
                detail: format!("v(f{}f{}) undefined", j + 1, k + 1),
            });
        }
    }

    let sharp = check_sharpness(valuation, quadruple.as_slice(), 2)?;
    if !sharp.verdict {
        return Err(Error::PreconditionFailed {
            detail: format!(
                "quadruple is not a sharp set in this state ({} witnesses, first: {})",
                sharp.witnesses.len(),
                sharp
                    .witnesses
                    .first()
                    .map(|w| format!("{} on {}", w.rule, w.quantities))
                    .unwrap_or_default()
            ),
        });
    }

    // product rule: v(f_jf_k) = v(f_j)v(f_k) for the commuting pairs
    let gamma = (singles[0] * singles[1] + singles[1] * singles[2] + singles[2] * singles[3]
        - singles[0] * singles[3])
        .abs();
    Ok(SharpBellReport {
        values: singles,
        gamma,
        holds: gamma <= 2.0 + 1e-9,
    })
}

// ---- approximate product rule for ensemble states -------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ApproxProductCheck {
    pub lhs: f64,
    pub bound: f64,
    pub delta_f: f64,
    pub delta_g: f64,
    pub holds: bool,
}

/// For commuting Hermitian f, g in an ensemble state:
/// |v(fg) − v(f)v(g)| ≤ Δf·Δg with Δf = sqrt(v(f²) − v(f)²).
pub fn approx_product_rule(
    valuation: &Valuation,
    f: &Quantity,
    g: &Quantity,
) -> Result<ApproxProductCheck> {
    let ensemble = match valuation.kind() {
        ValuationKind::EnsembleState { ensemble } => ensemble,
        _ => {
            return Err(Error::PreconditionFailed {
                detail: "approximate product rule is stated for ensemble states".into(),
            })
        }
    };
    f.require_hermitian()?;
    g.require_hermitian()?;
    if !commute(f, g) {
        return Err(Error::PreconditionFailed {
            detail: format!(
                "f and g must commute (commutator norm {:.3e})",
                f.commutator(g)?.spectral_norm()
            ),
        });
    }
    let vf = ensemble.expectation(f)?.re;
    let vg = ensemble.expectation(g)?.re;
    let vfg = ensemble.expectation(&f.mul(g)?)?.re;
    let delta = |q: &Quantity, v: f64| -> Result<f64> {
        let second = ensemble.expectation(&q.power(2))?.re;
        Ok((second - v * v).max(0.0).sqrt())
    };
    let delta_f = delta(f, vf)?;
    let delta_g = delta(g, vg)?;
    let lhs = (vfg - vf * vg).abs();
    let bound = delta_f * delta_g;
    Ok(ApproxProductCheck {
        lhs,
        bound,
        delta_f,
        delta_g,
        holds: lhs <= bound + 1e-10,
    })
}
