//! Adaptive Simpson quadrature with relative error control.
//!
//! Small and deterministic; plenty for the smooth radial integrands the
//! demos need. Non-convergence (recursion exhausted before the tolerance is
//! met) is an error, not a silent truncation.

const MAX_DEPTH: u32 = 60;

#[derive(Debug)]
pub struct QuadratureError {
    pub detail: String,
}

impl std::fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "quadrature did not converge: {}", self.detail)
    }
}

impl std::error::Error for QuadratureError {}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64, QuadratureError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * eps {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(QuadratureError {
            detail: format!(
                "interval [{a:.6e}, {b:.6e}] still off by {:.3e} at maximum depth",
                delta.abs()
            ),
        });
    }
    let half_eps = 0.5 * eps;
    Ok(
        adapt(f, a, m, fa, flm, fm, left, half_eps, depth - 1)?
            + adapt(f, m, b, fm, frm, fb, right, half_eps, depth - 1)?,
    )
}

/// ∫_a^b f(x) dx to relative tolerance `rel_tol`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<f64, QuadratureError> {
    assert!(b > a, "integration interval must be ordered");
    assert!(rel_tol > 0.0, "relative tolerance must be positive");

    // coarse magnitude estimate to convert the relative tolerance into an
    // absolute budget
    let panels = 64;
    let h = (b - a) / panels as f64;
    let mut coarse = 0.0;
    for k in 0..panels {
        let x0 = a + k as f64 * h;
        coarse += simpson(f(x0), f(x0 + 0.5 * h), f(x0 + h), h);
    }
    let eps = rel_tol * coarse.abs().max(f64::MIN_POSITIVE);

    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    adapt(&f, a, b, fa, fm, fb, whole, eps, MAX_DEPTH)
}
