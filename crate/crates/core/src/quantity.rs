use num_complex::Complex64;

use crate::context::{AlgebraContext, AlgebraKind};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};

/// Storage for the two realizations: a complex n-vector for the diagonal
/// (commutative) algebra, a dense complex n×n matrix otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum QuantityData {
    Diagonal(CVector),
    Matrix(CMatrix),
}

/// An element of a Q-algebra, tagged with its algebra context.
///
/// Quantities are immutable; every operation returns a fresh value. Binary
/// operations require compatible contexts and surface
/// [`Error::ContextMismatch`] otherwise. The `std::ops` impls on references
/// panic on mismatch instead, which keeps formula-heavy code readable.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantity {
    ctx: AlgebraContext,
    data: QuantityData,
}

fn check_finite_matrix(m: &CMatrix) -> Result<()> {
    for (idx, z) in m.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::invalid(format!(
                "non-finite entry at column-major index {idx}"
            )));
        }
    }
    Ok(())
}

fn check_finite_vector(v: &CVector) -> Result<()> {
    for (idx, z) in v.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::invalid(format!("non-finite entry at index {idx}")));
        }
    }
    Ok(())
}

impl Quantity {
    // ---- constructors -----------------------------------------------------

    pub fn from_matrix(ctx: AlgebraContext, m: CMatrix) -> Result<Self> {
        ctx.require_kind(AlgebraKind::Matrix, "matrix quantity")?;
        if m.nrows() != ctx.dim || m.ncols() != ctx.dim {
            return Err(Error::invalid(format!(
                "matrix is {}x{}, context dimension is {}",
                m.nrows(),
                m.ncols(),
                ctx.dim
            )));
        }
        check_finite_matrix(&m)?;
        Ok(Quantity {
            ctx,
            data: QuantityData::Matrix(m),
        })
    }

    pub fn from_diagonal(ctx: AlgebraContext, v: CVector) -> Result<Self> {
        ctx.require_kind(AlgebraKind::Diagonal, "diagonal quantity")?;
        if v.len() != ctx.dim {
            return Err(Error::invalid(format!(
                "vector has {} entries, context dimension is {}",
                v.len(),
                ctx.dim
            )));
        }
        check_finite_vector(&v)?;
        Ok(Quantity {
            ctx,
            data: QuantityData::Diagonal(v),
        })
    }

    /// n×n matrix quantity from row-major complex entries.
    pub fn matrix(dim: usize, row_major: &[Complex64]) -> Result<Self> {
        if row_major.len() != dim * dim {
            return Err(Error::invalid(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                row_major.len()
            )));
        }
        Quantity::from_matrix(
            AlgebraContext::matrix(dim),
            CMatrix::from_row_slice(dim, dim, row_major),
        )
    }

    /// n×n matrix quantity from row-major real entries.
    pub fn matrix_re(dim: usize, row_major: &[f64]) -> Result<Self> {
        let entries: Vec<Complex64> = row_major.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Quantity::matrix(dim, &entries)
    }

    /// Diagonal-algebra quantity from complex entries.
    pub fn diagonal(entries: &[Complex64]) -> Result<Self> {
        Quantity::from_diagonal(
            AlgebraContext::diagonal(entries.len()),
            CVector::from_column_slice(entries),
        )
    }

    /// Diagonal-algebra quantity from real entries.
    pub fn diagonal_re(entries: &[f64]) -> Result<Self> {
        let entries: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Quantity::diagonal(&entries)
    }

    /// The unity 1 of the algebra.
    pub fn identity(ctx: AlgebraContext) -> Self {
        let data = match ctx.kind {
            AlgebraKind::Diagonal => {
                QuantityData::Diagonal(CVector::from_element(ctx.dim, Complex64::ONE))
            }
            AlgebraKind::Matrix => QuantityData::Matrix(CMatrix::identity(ctx.dim, ctx.dim)),
        };
        Quantity { ctx, data }
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        let data = match ctx.kind {
            AlgebraKind::Diagonal => QuantityData::Diagonal(CVector::zeros(ctx.dim)),
            AlgebraKind::Matrix => QuantityData::Matrix(CMatrix::zeros(ctx.dim, ctx.dim)),
        };
        Quantity { ctx, data }
    }

    /// Embedding of a complex number as the special quantity α·1.
    pub fn scalar(ctx: AlgebraContext, alpha: Complex64) -> Self {
        Quantity::identity(ctx).scale(alpha)
    }

    /// σ1, in the 2×2 matrix algebra.
    pub fn pauli_x() -> Self {
        Quantity::matrix_re(2, &[0.0, 1.0, 1.0, 0.0]).expect("static entries")
    }

    /// σ2, in the 2×2 matrix algebra.
    pub fn pauli_y() -> Self {
        Quantity::matrix(
            2,
            &[
                Complex64::ZERO,
                -Complex64::i(),
                Complex64::i(),
                Complex64::ZERO,
            ],
        )
        .expect("static entries")
    }

    /// σ3, in the 2×2 matrix algebra.
    pub fn pauli_z() -> Self {
        Quantity::matrix_re(2, &[1.0, 0.0, 0.0, -1.0]).expect("static entries")
    }

    /// Rank-one projector φφ* onto a (normalized) vector.
    pub fn projector(phi: &CVector) -> Result<Self> {
        let n = phi.len();
        let norm = phi.norm();
        if norm == 0.0 {
            return Err(Error::invalid("cannot project onto the zero vector"));
        }
        let unit = phi.map(|z| z / norm);
        let m = &unit * unit.adjoint();
        Quantity::from_matrix(AlgebraContext::matrix(n), m)
    }

    // ---- accessors --------------------------------------------------------

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim
    }

    pub fn kind(&self) -> AlgebraKind {
        self.ctx.kind
    }

    pub fn as_matrix(&self) -> Option<&CMatrix> {
        match &self.data {
            QuantityData::Matrix(m) => Some(m),
            QuantityData::Diagonal(_) => None,
        }
    }

    pub fn as_diagonal(&self) -> Option<&CVector> {
        match &self.data {
            QuantityData::Diagonal(v) => Some(v),
            QuantityData::Matrix(_) => None,
        }
    }

    pub fn data(&self) -> &QuantityData {
        &self.data
    }

    /// Row-major complex entries (n² for matrices, n for diagonal).
    pub fn entries_row_major(&self) -> Vec<Complex64> {
        match &self.data {
            QuantityData::Diagonal(v) => v.iter().copied().collect(),
            QuantityData::Matrix(m) => {
                let n = m.nrows();
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        out.push(m[(i, j)]);
                    }
                }
                out
            }
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        match &self.data {
            QuantityData::Matrix(m) => m[(i, j)],
            QuantityData::Diagonal(v) => {
                if i == j {
                    v[i]
                } else {
                    Complex64::ZERO
                }
            }
        }
    }

    // ---- ring operations ----------------------------------------------------

    pub fn add(&self, other: &Quantity) -> Result<Quantity> {
        self.ctx.require_compatible(&other.ctx)?;
        let data = match (&self.data, &other.data) {
            (QuantityData::Diagonal(a), QuantityData::Diagonal(b)) => {
                QuantityData::Diagonal(a + b)
            }
            (QuantityData::Matrix(a), QuantityData::Matrix(b)) => QuantityData::Matrix(a + b),
            _ => unreachable!("kind agreement enforced by context check"),
        };
        Ok(Quantity {
            ctx: self.ctx,
            data,
        })
    }

    pub fn sub(&self, other: &Quantity) -> Result<Quantity> {
        self.add(&other.neg())
    }

    /// Product: matrix product in the matrix algebra, pointwise product in
    /// the diagonal algebra.
    pub fn mul(&self, other: &Quantity) -> Result<Quantity> {
        self.ctx.require_compatible(&other.ctx)?;
        let data = match (&self.data, &other.data) {
            (QuantityData::Diagonal(a), QuantityData::Diagonal(b)) => {
                QuantityData::Diagonal(a.component_mul(b))
            }
            (QuantityData::Matrix(a), QuantityData::Matrix(b)) => QuantityData::Matrix(a * b),
            _ => unreachable!("kind agreement enforced by context check"),
        };
        Ok(Quantity {
            ctx: self.ctx,
            data,
        })
    }

    pub fn neg(&self) -> Quantity {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn scale(&self, alpha: Complex64) -> Quantity {
        let data = match &self.data {
            QuantityData::Diagonal(v) => QuantityData::Diagonal(v.map(|z| alpha * z)),
            QuantityData::Matrix(m) => QuantityData::Matrix(m.map(|z| alpha * z)),
        };
        Quantity {
            ctx: self.ctx,
            data,
        }
    }

    pub fn scale_re(&self, alpha: f64) -> Quantity {
        self.scale(Complex64::new(alpha, 0.0))
    }

    /// Conjugate f*: conjugate transpose, or entrywise conjugate for the
    /// diagonal algebra. An exact involution.
    pub fn adjoint(&self) -> Quantity {
        let data = match &self.data {
            QuantityData::Diagonal(v) => QuantityData::Diagonal(v.map(|z| z.conj())),
            QuantityData::Matrix(m) => QuantityData::Matrix(m.adjoint()),
        };
        Quantity {
            ctx: self.ctx,
            data,
        }
    }

    /// [f, g] = fg − gf.
    pub fn commutator(&self, other: &Quantity) -> Result<Quantity> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Re f = (f + f*)/2; Hermitian by construction.
    pub fn re_part(&self) -> Quantity {
        self.add(&self.adjoint())
            .expect("same context")
            .scale_re(0.5)
    }

    /// Im f = (f − f*)/2i; Hermitian by construction.
    pub fn im_part(&self) -> Quantity {
        self.sub(&self.adjoint())
            .expect("same context")
            .scale(Complex64::new(0.0, -0.5))
    }

    /// f^l by repeated multiplication; f⁰ = 1.
    pub fn power(&self, l: u32) -> Quantity {
        let mut acc = Quantity::identity(self.ctx);
        for _ in 0..l {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    // ---- norm, order, positivity -------------------------------------------

    /// Spectral norm: largest singular value (max entry modulus for the
    /// diagonal algebra).
    pub fn spectral_norm(&self) -> f64 {
        match &self.data {
            QuantityData::Diagonal(v) => v.iter().map(|z| z.norm()).fold(0.0, f64::max),
            QuantityData::Matrix(m) => linalg::spectral_norm(m),
        }
    }

    /// ‖f − f*‖.
    pub fn hermiticity_residual(&self) -> f64 {
        match &self.data {
            QuantityData::Diagonal(v) => v.iter().map(|z| 2.0 * z.im.abs()).fold(0.0, f64::max),
            QuantityData::Matrix(m) => linalg::hermiticity_residual(m),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_residual() <= self.ctx.tol_herm * self.spectral_norm().max(1.0)
    }

    pub(crate) fn require_hermitian(&self) -> Result<()> {
        let residual = self.hermiticity_residual();
        let tolerance = self.ctx.tol_herm * self.spectral_norm().max(1.0);
        if residual <= tolerance {
            Ok(())
        } else {
            Err(Error::NotHermitian {
                residual,
                tolerance,
            })
        }
    }

    /// Smallest eigenvalue of the Hermitian part (smallest real part of the
    /// entries in the diagonal algebra).
    pub fn min_eigenvalue(&self) -> f64 {
        match &self.data {
            QuantityData::Diagonal(v) => v.iter().map(|z| z.re).fold(f64::INFINITY, f64::min),
            QuantityData::Matrix(m) => linalg::min_eigenvalue(m),
        }
    }

    /// Largest eigenvalue of the Hermitian part.
    pub fn max_eigenvalue(&self) -> f64 {
        -self.neg().min_eigenvalue()
    }

    /// f ≥ 0: Hermitian within `tol_herm` and spectrum above
    /// `−tol_psd·max(1,‖f‖)`.
    pub fn is_positive(&self) -> bool {
        let scale = self.spectral_norm().max(1.0);
        if self.hermiticity_residual() > self.ctx.tol_herm * scale {
            return false;
        }
        self.min_eigenvalue() >= -self.ctx.tol_psd * scale
    }

    /// f ≤ g in the algebra's partial order. Both directions may be false:
    /// the order is partial, incomparable pairs are not an error.
    pub fn leq(&self, other: &Quantity) -> Result<bool> {
        Ok(other.sub(self)?.is_positive())
    }

    /// ‖f − g‖, a convenient residual for tests and reports.
    pub fn distance(&self, other: &Quantity) -> f64 {
        self.sub(other).map(|d| d.spectral_norm()).unwrap_or(f64::INFINITY)
    }

    // ---- tensor structure ----------------------------------------------------

    /// Kronecker product. Dimensions multiply; kinds must agree.
    pub fn kron(&self, other: &Quantity) -> Result<Quantity> {
        if self.kind() != other.kind() {
            return Err(Error::ctx_mismatch(
                format!("{}", self.ctx),
                format!("{}", other.ctx),
            ));
        }
        match (&self.data, &other.data) {
            (QuantityData::Matrix(a), QuantityData::Matrix(b)) => {
                let m = a.kronecker(b);
                Quantity::from_matrix(AlgebraContext::matrix(m.nrows()), m)
            }
            (QuantityData::Diagonal(a), QuantityData::Diagonal(b)) => {
                let mut out = CVector::zeros(a.len() * b.len());
                for i in 0..a.len() {
                    for j in 0..b.len() {
                        out[i * b.len() + j] = a[i] * b[j];
                    }
                }
                Quantity::from_diagonal(AlgebraContext::diagonal(out.len()), out)
            }
            _ => unreachable!("kind agreement checked above"),
        }
    }
}

macro_rules! binop_impl {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait for &Quantity {
            type Output = Quantity;
            fn $method(self, rhs: &Quantity) -> Quantity {
                self.$inner(rhs).expect("context mismatch")
            }
        }
    };
}

binop_impl!(Add, add, add);
binop_impl!(Sub, sub, sub);
binop_impl!(Mul, mul, mul);

impl std::ops::Neg for &Quantity {
    type Output = Quantity;
    fn neg(self) -> Quantity {
        Quantity::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn add_zero_is_identity_map() {
        let f = Quantity::pauli_x();
        let z = Quantity::zero(*f.ctx());
        assert_eq!(f.add(&z).unwrap(), f);
    }

    #[test]
    fn doubling_via_addition() {
        let s1 = Quantity::pauli_x();
        let sum = s1.add(&s1).unwrap();
        assert_eq!(sum, s1.scale_re(2.0));
    }

    #[test]
    fn pauli_product_by_hand() {
        // σ1·σ3 = [[0,-1],[1,0]]
        let prod = Quantity::pauli_x().mul(&Quantity::pauli_z()).unwrap();
        let expected = Quantity::matrix_re(2, &[0.0, -1.0, 1.0, 0.0]).unwrap();
        assert!(prod.distance(&expected) < 1e-15);
    }

    #[test]
    fn unity_is_multiplicative_identity() {
        let f = Quantity::matrix(2, &[c(0.3, 0.1), c(-1.0, 2.0), c(0.0, 0.5), c(4.0, 0.0)])
            .unwrap();
        let one = Quantity::identity(*f.ctx());
        assert!(one.mul(&f).unwrap().distance(&f) < 1e-15);
    }

    #[test]
    fn diagonal_product_is_pointwise() {
        let f = Quantity::diagonal_re(&[1.0, 2.0]).unwrap();
        let g = Quantity::diagonal_re(&[3.0, 4.0]).unwrap();
        let expected = Quantity::diagonal_re(&[3.0, 8.0]).unwrap();
        assert_eq!(f.mul(&g).unwrap(), expected);
    }

    #[test]
    fn adjoint_of_hermitian_is_itself() {
        let s1 = Quantity::pauli_x();
        assert_eq!(s1.adjoint(), s1);
    }

    #[test]
    fn adjoint_conjugates_scalars() {
        let ctx = AlgebraContext::matrix(3);
        let i1 = Quantity::scalar(ctx, c(0.0, 1.0));
        assert_eq!(i1.adjoint(), Quantity::scalar(ctx, c(0.0, -1.0)));
    }

    #[test]
    fn adjoint_is_exact_involution() {
        let f = Quantity::matrix(2, &[c(0.3, 0.1), c(-1.0, 2.0), c(0.0, 0.5), c(4.0, -0.2)])
            .unwrap();
        assert_eq!(f.adjoint().adjoint(), f);
    }

    #[test]
    fn commutator_of_paulis_by_hand() {
        // [σ1, σ3] = [[0,-2],[2,0]]
        let comm = Quantity::pauli_x().commutator(&Quantity::pauli_z()).unwrap();
        let expected = Quantity::matrix_re(2, &[0.0, -2.0, 2.0, 0.0]).unwrap();
        assert!(comm.distance(&expected) < 1e-15);
    }

    #[test]
    fn self_commutator_vanishes() {
        let f = Quantity::matrix(2, &[c(0.3, 0.1), c(-1.0, 2.0), c(0.0, 0.5), c(4.0, -0.2)])
            .unwrap();
        assert_eq!(f.commutator(&f).unwrap().spectral_norm(), 0.0);
    }

    #[test]
    fn diagonal_algebra_is_commutative() {
        let f = Quantity::diagonal(&[c(1.0, 2.0), c(-0.5, 0.1)]).unwrap();
        let g = Quantity::diagonal(&[c(0.0, 1.0), c(3.0, -2.0)]).unwrap();
        assert_eq!(f.commutator(&g).unwrap().spectral_norm(), 0.0);
    }

    #[test]
    fn hermitian_has_zero_imaginary_part() {
        let f = Quantity::pauli_z();
        assert_eq!(f.im_part().spectral_norm(), 0.0);
    }

    #[test]
    fn real_imaginary_split_of_i_sigma1() {
        let f = Quantity::pauli_x().scale(c(0.0, 1.0));
        assert_eq!(f.re_part().spectral_norm(), 0.0);
        assert!(f.im_part().distance(&Quantity::pauli_x()) < 1e-15);
    }

    #[test]
    fn normality_via_real_imaginary_commutator() {
        // [f, f*] = 0 iff [Re f, Im f] = 0
        let normal = Quantity::matrix(2, &[c(1.0, 2.0), c(0.0, 0.0), c(0.0, 0.0), c(-3.0, 0.5)])
            .unwrap();
        assert!(normal.commutator(&normal.adjoint()).unwrap().spectral_norm() < 1e-14);
        assert!(
            normal
                .re_part()
                .commutator(&normal.im_part())
                .unwrap()
                .spectral_norm()
                < 1e-14
        );

        let skew = Quantity::matrix(2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!(skew.commutator(&skew.adjoint()).unwrap().spectral_norm() > 0.5);
        assert!(
            skew.re_part()
                .commutator(&skew.im_part())
                .unwrap()
                .spectral_norm()
                > 0.1
        );
    }

    #[test]
    fn spectral_norm_of_pauli() {
        assert_abs_diff_eq!(Quantity::pauli_x().spectral_norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn spectral_norm_of_scalar() {
        let ctx = AlgebraContext::matrix(4);
        let alpha = c(-3.0, 4.0);
        assert_abs_diff_eq!(
            Quantity::scalar(ctx, alpha).spectral_norm(),
            5.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn identity_is_positive() {
        assert!(Quantity::identity(AlgebraContext::matrix(3)).is_positive());
        assert!(Quantity::identity(AlgebraContext::diagonal(3)).is_positive());
    }

    #[test]
    fn minus_one_is_not_positive() {
        let ctx = AlgebraContext::matrix(2);
        assert!(!Quantity::scalar(ctx, c(-1.0, 0.0)).is_positive());
    }

    #[test]
    fn non_hermitian_is_not_positive() {
        // crafted probe: spectrum {1, 1} but f ≠ f*
        let f = Quantity::matrix_re(2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(!f.is_positive());
        let g = Quantity::diagonal(&[c(1.0, 0.5), c(2.0, 0.0)]).unwrap();
        assert!(!g.is_positive());
    }

    #[test]
    fn pauli_pair_is_incomparable() {
        // σ3 − σ1 has eigenvalues ±√2
        let s1 = Quantity::pauli_x();
        let s3 = Quantity::pauli_z();
        assert!(!s1.leq(&s3).unwrap());
        assert!(!s3.leq(&s1).unwrap());
    }

    #[test]
    fn effect_sits_between_zero_and_one() {
        let e = Quantity::matrix_re(2, &[0.25, 0.0, 0.0, 0.75]).unwrap();
        let zero = Quantity::zero(*e.ctx());
        let one = Quantity::identity(*e.ctx());
        assert!(zero.leq(&e).unwrap());
        assert!(e.leq(&one).unwrap());
    }

    #[test]
    fn powers() {
        let s1 = Quantity::pauli_x();
        assert!(s1.power(2).distance(&Quantity::identity(*s1.ctx())) < 1e-15);
        assert_eq!(s1.power(0), Quantity::identity(*s1.ctx()));
        assert_eq!(s1.power(1), s1);
    }

    #[test]
    fn squaring_is_not_monotone_in_the_matrix_realization() {
        // 0 ≤ f ≤ g yet f² ≰ g²: the order is not preserved by squaring
        // outside the commutative realization
        let f = Quantity::matrix_re(2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        let g = Quantity::matrix_re(2, &[2.0, 1.0, 1.0, 1.0]).unwrap();
        let zero = Quantity::zero(*f.ctx());
        assert!(zero.leq(&f).unwrap());
        assert!(f.leq(&g).unwrap());
        assert!(!f.power(2).leq(&g.power(2)).unwrap());

        // in the diagonal realization the implication does hold
        let fd = Quantity::diagonal_re(&[0.5, 1.0]).unwrap();
        let gd = Quantity::diagonal_re(&[0.7, 1.5]).unwrap();
        assert!(fd.leq(&gd).unwrap());
        assert!(fd.power(2).leq(&gd.power(2)).unwrap());
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let f = Quantity::pauli_x();
        let g = Quantity::diagonal_re(&[1.0, 2.0]).unwrap();
        assert!(matches!(
            f.add(&g),
            Err(Error::ContextMismatch { .. })
        ));
        let h = Quantity::matrix_re(3, &[0.0; 9]).unwrap();
        assert!(matches!(f.mul(&h), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn rejects_non_finite_entries() {
        assert!(Quantity::matrix(1, &[c(f64::NAN, 0.0)]).is_err());
        assert!(Quantity::diagonal(&[c(0.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn projector_is_idempotent_event_shape() {
        let phi = CVector::from_column_slice(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let e = Quantity::projector(&phi).unwrap();
        assert!(e.power(2).distance(&e) < 1e-14);
        assert!(e.is_positive());
    }

    #[test]
    fn kron_of_paulis_matches_spinpair_flattening() {
        // σ1 ⊗ 1 swaps (x1,x3) and (x2,x4) under row-major flattening
        let f1 = Quantity::pauli_x()
            .kron(&Quantity::identity(AlgebraContext::matrix(2)))
            .unwrap();
        let expected = Quantity::matrix_re(
            4,
            &[
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                1.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0,
            ],
        )
        .unwrap();
        assert!(f1.distance(&expected) < 1e-15);
    }
}
