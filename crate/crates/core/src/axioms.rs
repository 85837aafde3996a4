//! Randomized verification of the algebra axioms and derived identities.
//!
//! Each axiom is evaluated on both sides for seeded random inputs; the report
//! keeps the worst relative residual seen per axiom. Order axioms that are
//! inherently boolean contribute 0 or 1.

use num_complex::Complex64;
use serde::Serialize;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::error::{Error, Result};
use crate::quantity::Quantity;
use crate::random::{random_hermitian, random_psd, random_quantity, rng_from_seed};

/// Relative residual bound for a passing axiom check.
pub const AXIOM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub ctx: AlgebraContext,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<AxiomCheck>,
    pub pass: bool,
}

impl AxiomReport {
    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "axiom report for {} ({} samples, seed {})",
            self.ctx, self.samples, self.seed
        )?;
        for check in &self.checks {
            writeln!(
                f,
                "  {:<44} residual {:>10.3e}  {}",
                check.name,
                check.max_residual,
                if check.pass { "ok" } else { "FAIL" }
            )?;
        }
        write!(f, "overall: {}", if self.pass { "pass" } else { "FAIL" })
    }
}

struct Recorder {
    checks: Vec<(String, f64)>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn record(&mut self, name: &str, residual: f64) {
        match self.checks.iter_mut().find(|(n, _)| n == name) {
            Some((_, worst)) => *worst = worst.max(residual),
            None => self.checks.push((name.to_string(), residual)),
        }
    }

    /// Residual of `a = b`, relative to the larger of 1 and the data scale.
    fn identity(&mut self, name: &str, a: &Quantity, b: &Quantity) {
        let scale = a.spectral_norm().max(b.spectral_norm()).max(1.0);
        self.record(name, a.distance(b) / scale);
    }

    fn boolean(&mut self, name: &str, holds: bool) {
        self.record(name, if holds { 0.0 } else { 1.0 });
    }

    /// Residual of `q ≥ 0`, i.e. how far the spectrum dips below zero.
    fn positivity(&mut self, name: &str, q: &Quantity) {
        let scale = q.spectral_norm().max(1.0);
        let dip = (-q.min_eigenvalue()).max(0.0);
        let herm = q.hermiticity_residual();
        self.record(name, (dip + herm) / scale);
    }
}

/// Verify (Q1)–(Q9), the derived identities (e.p1)–(e.p8), scalar embedding
/// and the realization facts on `samples` seeded random inputs.
pub fn check_qalgebra_axioms(
    ctx: AlgebraContext,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    if samples == 0 {
        return Err(Error::invalid("samples must be at least 1"));
    }
    let mut rng = rng_from_seed(seed);
    let mut rec = Recorder::new();
    let one = Quantity::identity(ctx);
    let zero = Quantity::zero(ctx);

    for _ in 0..samples {
        let f = random_quantity(ctx, &mut rng);
        let g = random_quantity(ctx, &mut rng);
        let h = random_quantity(ctx, &mut rng);
        let alpha = Complex64::new(
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
        );
        let beta = Complex64::new(
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
        );
        let lambda: f64 = rand::Rng::gen_range(&mut rng, -2.0..2.0);

        // (Q1) scalars are quantities: embedding respects + , · , *
        let a1 = Quantity::scalar(ctx, alpha);
        let b1 = Quantity::scalar(ctx, beta);
        rec.identity("(Q1) scalar embedding: sum", &a1.add(&b1)?, &Quantity::scalar(ctx, alpha + beta));
        rec.identity("(Q1) scalar embedding: product", &a1.mul(&b1)?, &Quantity::scalar(ctx, alpha * beta));
        rec.identity("(Q1) scalar embedding: conjugate", &a1.adjoint(), &Quantity::scalar(ctx, alpha.conj()));

        // (Q2) (fg)h = f(gh), αf = fα, 0f = 0, 1f = f
        rec.identity("(Q2) product associativity", &f.mul(&g)?.mul(&h)?, &f.mul(&g.mul(&h)?)?);
        rec.identity("(Q2) scalars commute", &a1.mul(&f)?, &f.mul(&a1)?);
        rec.identity("(Q2) 0f = 0", &zero.mul(&f)?, &zero);
        rec.identity("(Q2) 1f = f", &one.mul(&f)?, &f);

        // (Q3) (f+g)+h = f+(g+h), f(g+h) = fg+fh, f+0 = f
        rec.identity("(Q3) sum associativity", &f.add(&g)?.add(&h)?, &f.add(&g.add(&h)?)?);
        rec.identity("(Q3) left distributivity", &f.mul(&g.add(&h)?)?, &f.mul(&g)?.add(&f.mul(&h)?)?);
        rec.identity("(Q3) f + 0 = f", &f.add(&zero)?, &f);

        // (Q4) f** = f, (fg)* = g*f*, (f+g)* = f*+g*
        rec.identity("(Q4) involution", &f.adjoint().adjoint(), &f);
        rec.identity("(Q4) product adjoint", &f.mul(&g)?.adjoint(), &g.adjoint().mul(&f.adjoint())?);
        rec.identity("(Q4) sum adjoint", &f.add(&g)?.adjoint(), &f.adjoint().add(&g.adjoint())?);

        // (Q5) nondegeneracy: f ≠ 0 ⇒ f*f ≠ 0 (and 0*0 = 0)
        let ff = f.adjoint().mul(&f)?;
        rec.boolean(
            "(Q5) nondegeneracy",
            f.spectral_norm() < 1e-12 || ff.spectral_norm() > 0.0,
        );

        // (Q6) partial order: reflexive, antisymmetric, transitive
        let fh = f.re_part();
        rec.boolean("(Q6) order reflexive", fh.leq(&fh)?);
        let gh = g.re_part();
        if fh.leq(&gh)? && gh.leq(&fh)? {
            let scale = fh.spectral_norm().max(1.0);
            rec.record("(Q6) order antisymmetric", fh.distance(&gh) / scale);
        } else {
            rec.record("(Q6) order antisymmetric", 0.0);
        }
        let p = random_psd(ctx, &mut rng);
        let q = random_psd(ctx, &mut rng);
        let mid = fh.add(&p)?;
        let top = mid.add(&q)?;
        rec.boolean(
            "(Q6) order transitive",
            !(fh.leq(&mid)? && mid.leq(&top)?) || fh.leq(&top)?,
        );

        // (Q7) f ≥ g ⇒ f+h ≥ g+h
        rec.boolean("(Q7) translation monotone", mid.add(&h)?.sub(&fh.add(&h)?)?.is_positive());

        // (Q8) f ≥ 0 ⇒ f = f* and g*fg ≥ 0
        rec.positivity("(Q8) conjugation preserves positivity", &g.adjoint().mul(&p)?.mul(&g)?);
        rec.record("(Q8) positive implies Hermitian", p.hermiticity_residual() / p.spectral_norm().max(1.0));

        // (Q9) 1 ≥ 0
        rec.boolean("(Q9) 1 >= 0", one.is_positive());

        // (e.p1) (f+g)h = fh+gh, f−f = 0, f+g = g+f
        rec.identity("(e.p1) right distributivity", &f.add(&g)?.mul(&h)?, &f.mul(&h)?.add(&g.mul(&h)?)?);
        rec.identity("(e.p1) f - f = 0", &f.sub(&f)?, &zero);
        rec.identity("(e.p1) sum commutativity", &f.add(&g)?, &g.add(&f)?);

        // (e.p2) [f,f*] = −2i[Re f, Im f]
        rec.identity(
            "(e.p2) [f,f*] = -2i[Re f, Im f]",
            &f.commutator(&f.adjoint())?,
            &f.re_part()
                .commutator(&f.im_part())?
                .scale(Complex64::new(0.0, -2.0)),
        );

        // (e.p3) f*f ≥ 0, ff* ≥ 0
        rec.positivity("(e.p3) f*f >= 0", &ff);
        rec.positivity("(e.p3) ff* >= 0", &f.mul(&f.adjoint())?);

        // (e.p4) ‖f‖ = 0 ⇒ f = 0
        rec.record("(e.p4) zero norm means zero", zero.spectral_norm());

        // (e.p5) f ≤ g ⇒ h*fh ≤ h*gh and |λ|f ≤ |λ|g
        let conj_low = h.adjoint().mul(&fh)?.mul(&h)?;
        let conj_high = h.adjoint().mul(&mid)?.mul(&h)?;
        rec.positivity("(e.p5) conjugation monotone", &conj_high.sub(&conj_low)?);
        rec.positivity(
            "(e.p5) scaling monotone",
            &mid.scale_re(lambda.abs()).sub(&fh.scale_re(lambda.abs()))?,
        );

        // (e.p6) f*g + g*f ≤ 2‖f‖‖g‖
        let bound = Quantity::scalar(
            ctx,
            Complex64::new(2.0 * f.spectral_norm() * g.spectral_norm(), 0.0),
        );
        rec.positivity(
            "(e.p6) f*g + g*f <= 2|f||g|",
            &bound.sub(&f.adjoint().mul(&g)?.add(&g.adjoint().mul(&f)?)?)?,
        );

        // (e.p7) ‖λf‖ = |λ|‖f‖ and triangle inequality
        let s7 = f.spectral_norm().max(1.0);
        rec.record(
            "(e.p7) norm homogeneity",
            (f.scale(alpha).spectral_norm() - alpha.norm() * f.spectral_norm()).abs() / s7,
        );
        let tri_scale = (f.spectral_norm() + g.spectral_norm()).max(1.0);
        rec.record(
            "(e.p7) triangle inequality",
            (f.add(&g)?.spectral_norm() - f.spectral_norm() - g.spectral_norm()).max(0.0) / tri_scale,
        );
        rec.record(
            "(e.p7) triangle inequality (difference)",
            (f.sub(&g)?.spectral_norm() - f.spectral_norm() - g.spectral_norm()).max(0.0) / tri_scale,
        );

        // (e.p8) ‖fg‖ ≤ ‖f‖‖g‖
        let sub_scale = (f.spectral_norm() * g.spectral_norm()).max(1.0);
        rec.record(
            "(e.p8) submultiplicative norm",
            (f.mul(&g)?.spectral_norm() - f.spectral_norm() * g.spectral_norm()).max(0.0) / sub_scale,
        );

        // realization facts noted open in general algebras
        rec.record(
            "realization: |f*| = |f|",
            (f.adjoint().spectral_norm() - f.spectral_norm()).abs() / s7,
        );
        rec.record(
            "realization: |f*f| = |f|^2",
            (ff.spectral_norm() - f.spectral_norm().powi(2)).abs() / s7.powi(2),
        );

        if ctx.kind == AlgebraKind::Diagonal {
            rec.identity("commutative multiplication", &f.mul(&g)?, &g.mul(&f)?);
            // squaring is monotone on the positive cone only in the
            // commutative realization; the matrix realization has
            // counterexamples
            let low = random_psd(ctx, &mut rng);
            let high = low.add(&random_psd(ctx, &mut rng))?;
            rec.positivity(
                "realization: 0 <= f <= g implies f^2 <= g^2",
                &high.power(2).sub(&low.power(2))?,
            );
        }
    }

    // Crafted probe for the Hermiticity clause of (Q8): a non-Hermitian
    // quantity with positive spectrum must not pass the order test.
    let probe = match ctx.kind {
        AlgebraKind::Matrix => {
            let mut m = crate::linalg::CMatrix::identity(ctx.dim, ctx.dim);
            if ctx.dim >= 2 {
                m[(0, 1)] = Complex64::new(1.0, 0.0);
            }
            Quantity::from_matrix(ctx, m)?
        }
        AlgebraKind::Diagonal => {
            let mut v = crate::linalg::CVector::from_element(ctx.dim, Complex64::ONE);
            v[0] = Complex64::new(1.0, 1.0);
            Quantity::from_diagonal(ctx, v)?
        }
    };
    rec.boolean("(Q8) non-Hermitian probe rejected", !probe.is_positive());

    // Hermitian sanity on a fresh sample: Im f = 0 for Hermitian f
    let mut rng2 = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let fherm = random_hermitian(ctx, &mut rng2);
    rec.record("hermitian has vanishing imaginary part", fherm.im_part().spectral_norm());

    let checks: Vec<AxiomCheck> = rec
        .checks
        .into_iter()
        .map(|(name, max_residual)| AxiomCheck {
            pass: max_residual <= AXIOM_TOL,
            name,
            max_residual,
            tolerance: AXIOM_TOL,
        })
        .collect();
    let pass = checks.iter().all(|c| c.pass);
    Ok(AxiomReport {
        ctx,
        samples,
        seed,
        checks,
        pass,
    })
}

/// Randomized verification of the ensemble axioms (E1)–(E3) and the derived
/// moment identities, over every ensemble form the context admits.
pub fn check_ensemble_axioms(
    ctx: AlgebraContext,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    if samples == 0 {
        return Err(Error::invalid("samples must be at least 1"));
    }
    let mut rng = rng_from_seed(seed);
    let mut rec = Recorder::new();
    let one = Quantity::identity(ctx);

    for _ in 0..samples {
        let ensembles: Vec<crate::ensemble::Ensemble> = match ctx.kind {
            AlgebraKind::Diagonal => {
                let weights: Vec<f64> = (0..ctx.dim)
                    .map(|_| rand::Rng::gen_range(&mut rng, 0.05..1.0))
                    .collect();
                vec![crate::ensemble::Ensemble::weighted(&weights)?]
            }
            AlgebraKind::Matrix => vec![
                crate::ensemble::Ensemble::pure(crate::random::random_unit_vector(
                    ctx.dim, &mut rng,
                ))?,
                crate::ensemble::Ensemble::density(crate::random::random_density_matrix(
                    ctx.dim, &mut rng,
                ))?,
                crate::ensemble::Ensemble::gibbs(&random_hermitian(ctx, &mut rng), 1.0)?,
            ],
        };
        let f = random_quantity(ctx, &mut rng);
        let g = random_quantity(ctx, &mut rng);
        let alpha = Complex64::new(
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
            rand::Rng::gen_range(&mut rng, -2.0..2.0),
        );
        let scale = f.spectral_norm().max(g.spectral_norm()).max(1.0);

        for e in &ensembles {
            rec.record("(E1) <1> = 1", (e.expectation(&one)? - Complex64::ONE).norm());
            rec.record(
                "(E1) <f*> = <f>*",
                (e.expectation(&f.adjoint())? - e.expectation(&f)?.conj()).norm() / scale,
            );
            rec.record(
                "(E1) additivity",
                (e.expectation(&f.add(&g)?)? - e.expectation(&f)? - e.expectation(&g)?).norm()
                    / scale,
            );
            rec.record(
                "(E2) homogeneity",
                (e.expectation(&f.scale(alpha))? - alpha * e.expectation(&f)?).norm() / scale,
            );
            let p = random_psd(ctx, &mut rng);
            rec.record(
                "(E3) positivity",
                ((-e.expectation(&p)?.re).max(0.0)
                    + e.expectation(&p)?.im.abs())
                    / p.spectral_norm().max(1.0),
            );
            // p5.2(iii): σ(f)² = ⟨f²⟩ − ⟨f⟩² for Hermitian f
            let h = random_hermitian(ctx, &mut rng);
            let sigma = e.uncertainty(&h)?;
            let second = e.expectation(&h.power(2))?.re;
            let first = e.expectation(&h)?.re;
            rec.record(
                "p5.2(iii) moment formula",
                (sigma * sigma - (second - first * first)).abs()
                    / h.spectral_norm().powi(2).max(1.0),
            );
            // Cauchy-Schwarz |<f*g>|² ≤ <f*f><g*g>
            let lhs = e.expectation(&f.adjoint().mul(&g)?)?.norm_sqr();
            let rhs = e.expectation(&f.adjoint().mul(&f)?)?.re
                * e.expectation(&g.adjoint().mul(&g)?)?.re;
            rec.record(
                "Cauchy-Schwarz",
                (lhs - rhs).max(0.0) / lhs.max(rhs).max(1.0),
            );
        }
    }

    let checks: Vec<AxiomCheck> = rec
        .checks
        .into_iter()
        .map(|(name, max_residual)| AxiomCheck {
            pass: max_residual <= AXIOM_TOL,
            name,
            max_residual,
            tolerance: AXIOM_TOL,
        })
        .collect();
    let pass = checks.iter().all(|c| c.pass);
    Ok(AxiomReport {
        ctx,
        samples,
        seed,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ensemble_axioms_pass_both_kinds() {
        let report = check_ensemble_axioms(AlgebraContext::matrix(3), 30, 42).unwrap();
        assert!(report.pass, "{report}");
        let report = check_ensemble_axioms(AlgebraContext::diagonal(5), 30, 42).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn matrix_algebra_passes() {
        let report = check_qalgebra_axioms(AlgebraContext::matrix(4), 100, 42).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn diagonal_algebra_passes_with_commutativity() {
        let report = check_qalgebra_axioms(AlgebraContext::diagonal(8), 100, 42).unwrap();
        assert!(report.pass, "{report}");
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "commutative multiplication"));
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(check_qalgebra_axioms(AlgebraContext::matrix(2), 0, 1).is_err());
    }

    #[test]
    fn probe_entry_present() {
        let report = check_qalgebra_axioms(AlgebraContext::matrix(2), 1, 7).unwrap();
        let probe = report
            .checks
            .iter()
            .find(|c| c.name == "(Q8) non-Hermitian probe rejected")
            .unwrap();
        assert!(probe.pass);
    }
}
