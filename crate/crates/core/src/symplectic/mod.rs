//! Symplectic forms on Lie algebras.
//!
//! A [`SymplecticLieAlgebra`] can only be obtained through
//! [`validate_symplectic`], so holding one means the form is skew,
//! nondegenerate and closed, and the bracket satisfies Jacobi.

mod product;
mod report;

pub use product::{
    check_left_symmetric, curvature, CurvatureReport, NotLieAdmissible, ProductTensor,
};
pub use report::{Claim, ClaimStatus, StructuralReport};

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{Endomorphism, JacobiViolation, LieAlgebra};
use crate::linalg::{
    add_vectors, dot, kernel, scale_vector, sub_vectors, unit_vector, LinalgError, Matrix, Scalar,
    Subspace, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("form matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("form is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("form is degenerate")]
    Degenerate,
}

/// The matrix `omega_ij = omega(e_i, e_j)` of a skew bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    omega: Matrix,
}

impl SkewForm {
    pub fn new(omega: Matrix) -> Result<Self, FormError> {
        if !omega.is_square() {
            return Err(FormError::NotSquare {
                rows: omega.rows(),
                cols: omega.cols(),
            });
        }
        let n = omega.rows();
        for i in 0..n {
            for j in i..n {
                if omega[(i, j)] != -omega[(j, i)].clone() {
                    return Err(FormError::NotSkew(i, j));
                }
            }
        }
        Ok(Self { omega })
    }

    /// Sum of `c · e_i^* ∧ e_j^*`, with `(α∧β)(u,v) = α(u)β(v) − α(v)β(u)`.
    pub fn from_wedges(n: usize, wedges: &[(usize, usize, Scalar)]) -> Self {
        let mut omega = Matrix::zeros(n, n);
        for (i, j, c) in wedges {
            omega[(*i, *j)] += c;
            omega[(*j, *i)] -= c;
        }
        Self { omega }
    }

    /// Darboux pairs `(e_1, e_2), (e_3, e_4), ...`.
    pub fn standard(n: usize) -> Self {
        assert!(n.is_multiple_of(2), "standard form needs even dimension");
        let wedges: Vec<_> = (0..n / 2)
            .map(|k| (2 * k, 2 * k + 1, Scalar::one()))
            .collect();
        Self::from_wedges(n, &wedges)
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.omega.mul_vec(v))
    }

    pub fn pair_basis(&self, i: usize, j: usize) -> &Scalar {
        &self.omega[(i, j)]
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.omega.rank() == self.dim()
    }

    /// Gram matrix `Bᵀ ω B` of the form restricted to the columns of `basis`.
    pub fn restrict(&self, basis: &Matrix) -> SkewForm {
        SkewForm {
            omega: &(&basis.transpose() * &self.omega) * basis,
        }
    }
}

/// Why a (Lie algebra, form) pair is not a symplectic Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticViolation {
    DimensionMismatch {
        algebra: usize,
        form: usize,
    },
    Degenerate,
    Jacobi(JacobiViolation),
    /// Nonzero cyclic sum `ω([u,v],w) + ω([v,w],u) + ω([w,u],v)` on a basis triple.
    NotClosed {
        triple: (usize, usize, usize),
        residual: Scalar,
    },
}

impl fmt::Display for SymplecticViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimensionMismatch { algebra, form } => {
                write!(
                    f,
                    "algebra has dimension {algebra} but form has dimension {form}"
                )
            }
            Self::Degenerate => write!(f, "form is degenerate"),
            Self::Jacobi(v) => write!(f, "Jacobi identity fails on {:?}", v.triple),
            Self::NotClosed { triple, residual } => {
                write!(f, "closedness fails on {triple:?} with residual {residual}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a symplectic Lie algebra: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct InvalidSymplectic(pub Vec<SymplecticViolation>);

/// How a subspace sits relative to the form, most specific label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubspaceKind {
    Lagrangian,
    TotallyIsotropic,
    Degenerate,
    Nondegenerate,
}

impl SubspaceKind {
    pub fn is_degenerate(self) -> bool {
        self != SubspaceKind::Nondegenerate
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Lagrangian => "lagrangian",
            Self::TotallyIsotropic => "totally isotropic",
            Self::Degenerate => "degenerate",
            Self::Nondegenerate => "nondegenerate",
        }
    }
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A Lie algebra with a closed nondegenerate skew form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticLieAlgebra {
    algebra: LieAlgebra,
    form: SkewForm,
    omega_inv: Matrix,
}

/// Checks the Jacobi identity, nondegeneracy and the closedness identity.
pub fn validate_symplectic(
    algebra: &LieAlgebra,
    form: &SkewForm,
) -> Result<SymplecticLieAlgebra, InvalidSymplectic> {
    let n = algebra.dim();
    if form.dim() != n {
        return Err(InvalidSymplectic(vec![
            SymplecticViolation::DimensionMismatch {
                algebra: n,
                form: form.dim(),
            },
        ]));
    }
    let mut violations = Vec::new();
    let omega_inv = form.omega.inverse().ok();
    if omega_inv.is_none() {
        violations.push(SymplecticViolation::Degenerate);
    }
    if let Err(jacobi) = algebra.validate() {
        violations.extend(jacobi.into_iter().map(SymplecticViolation::Jacobi));
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let e = |x| unit_vector(n, x);
                let residual = form.pair(&algebra.bracket_basis(i, j), &e(k))
                    + form.pair(&algebra.bracket_basis(j, k), &e(i))
                    + form.pair(&algebra.bracket_basis(k, i), &e(j));
                if !residual.is_zero() {
                    violations.push(SymplecticViolation::NotClosed {
                        triple: (i, j, k),
                        residual,
                    });
                }
            }
        }
    }
    match omega_inv {
        Some(omega_inv) if violations.is_empty() => Ok(SymplecticLieAlgebra {
            algebra: algebra.clone(),
            form: form.clone(),
            omega_inv,
        }),
        _ => Err(InvalidSymplectic(violations)),
    }
}

impl SymplecticLieAlgebra {
    /// The `{0}` algebra.
    pub fn zero() -> Self {
        validate_symplectic(&LieAlgebra::abelian(0), &SkewForm::standard(0)).expect("zero algebra")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &SkewForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn omega_inv(&self) -> &Matrix {
        &self.omega_inv
    }

    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        self.form.pair(u, v)
    }

    /// `F^⊥ = {x : ω(x, y) = 0 for all y ∈ F}`.
    pub fn perp(&self, sub: &Subspace) -> Subspace {
        let n = self.dim();
        if sub.is_zero() {
            return Subspace::full(n);
        }
        // Row for each basis vector y of F: x ↦ ω(x, y) = (ω y)ᵀ x.
        let rows: Vec<Vector> = sub
            .basis_vectors()
            .iter()
            .map(|y| self.form.omega.mul_vec(y))
            .collect();
        kernel(&Matrix::from_rows(rows))
    }

    pub fn classify_subspace(&self, sub: &Subspace) -> SubspaceKind {
        let perp = self.perp(sub);
        if &perp == sub {
            SubspaceKind::Lagrangian
        } else if sub.is_zero() {
            SubspaceKind::Nondegenerate
        } else if perp.contains_subspace(sub).expect("same ambient") {
            SubspaceKind::TotallyIsotropic
        } else if !sub.intersect(&perp).expect("same ambient").is_zero() {
            SubspaceKind::Degenerate
        } else {
            SubspaceKind::Nondegenerate
        }
    }

    /// `f^* = ω⁻¹ fᵀ ω`, the unique map with `ω(f x, y) = ω(x, f^* y)`.
    pub fn adjoint(&self, f: &Endomorphism) -> Endomorphism {
        &(&self.omega_inv * &f.transpose()) * &self.form.omega
    }

    /// Unique `x` with `ω(x, e_w) = rhs_w` for every `w`.
    pub(crate) fn solve_left_pairing(&self, rhs: &[Scalar]) -> Vector {
        // ω(x, e_w) = (ωᵀ x)_w and ωᵀ = −ω.
        scale_vector(&-Scalar::one(), &self.omega_inv.mul_vec(rhs))
    }

    /// The `ω`-dual `H` of the trace character: `ω(H, u) = tr(ad_u)`.
    pub fn h_vector(&self) -> Vector {
        self.solve_left_pairing(&self.algebra.trace_character())
    }

    /// Rewrites algebra and form in the basis given by the columns of `basis`.
    pub fn change_basis(
        &self,
        basis: &Matrix,
        names: Vec<String>,
    ) -> Result<SymplecticLieAlgebra, LinalgError> {
        let algebra = self.algebra.change_basis(basis, names)?;
        let form = self.form.restrict(basis);
        let omega_inv = form.omega.inverse()?;
        Ok(SymplecticLieAlgebra {
            algebra,
            form,
            omega_inv,
        })
    }

    /// Equal structure constants and form matrices, ignoring names.
    pub fn same_structure(&self, other: &SymplecticLieAlgebra) -> bool {
        self.algebra.same_structure(&other.algebra) && self.form == other.form
    }

    pub fn with_names(self, names: Vec<String>) -> Self {
        Self {
            algebra: self.algebra.with_names(names),
            ..self
        }
    }
}

/// Greedy symplectic Gram-Schmidt.
///
/// Returns the change-of-basis matrix whose columns `b_1, ..., b_2n` satisfy
/// `ω(b_{2k-1}, b_{2k}) = 1` with every other pairing zero. At each step the
/// lowest-index remaining vector is paired with the first remaining vector it
/// does not annihilate.
pub fn darboux_basis(form: &SkewForm) -> Result<Matrix, FormError> {
    let n = form.dim();
    if !form.is_nondegenerate() {
        return Err(FormError::Degenerate);
    }
    let mut pending: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(u) = pending.first().cloned() {
        let Some(pos) = pending.iter().position(|w| !form.pair(&u, w).is_zero()) else {
            return Err(FormError::Degenerate);
        };
        let scale = form.pair(&u, &pending[pos]).recip();
        let w = scale_vector(&scale, &pending[pos]);
        pending = pending
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != 0 && idx != pos)
            .map(|(_, x)| {
                let along_u = scale_vector(&form.pair(x, &w), &u);
                let along_w = scale_vector(&form.pair(x, &u), &w);
                add_vectors(&sub_vectors(x, &along_u), &along_w)
            })
            .filter(|x| x.iter().any(|c| !c.is_zero()))
            .collect();
        out.push(u);
        out.push(w);
    }
    Ok(Matrix::from_columns(n, &out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i)
    }

    fn r_h3() -> SymplecticLieAlgebra {
        let alg = LieAlgebra::from_table(4, &[(0, 1, &[(2, int(1))])]);
        let form = SkewForm::from_wedges(4, &[(0, 3, int(1)), (1, 2, int(1))]);
        validate_symplectic(&alg, &form).unwrap()
    }

    fn g6_2(form: SkewForm) -> Result<SymplecticLieAlgebra, InvalidSymplectic> {
        let alg = LieAlgebra::from_table(6, &[(0, 1, &[(4, int(1))]), (0, 2, &[(5, int(1))])]);
        validate_symplectic(&alg, &form)
    }

    #[test]
    fn validation_examples() {
        let form = SkewForm::from_wedges(4, &[(0, 2, int(3)), (1, 3, frac(-1, 2))]);
        assert!(validate_symplectic(&LieAlgebra::abelian(4), &form).is_ok());
        let w1 = SkewForm::from_wedges(6, &[(0, 5, int(1)), (1, 4, int(1)), (2, 3, int(1))]);
        assert!(g6_2(w1).is_ok());
        let err = validate_symplectic(&LieAlgebra::abelian(3), &SkewForm::standard(2)).unwrap_err();
        assert_eq!(
            err.0,
            vec![SymplecticViolation::DimensionMismatch {
                algebra: 3,
                form: 2
            }]
        );
    }

    #[test]
    fn closedness_violation_is_reported() {
        // h3 x R with ω = e1*∧e2* + e3*∧e4*: cyclic sum on (1,2,4) is ω(e3, e4) = 1.
        let alg = LieAlgebra::from_table(4, &[(0, 1, &[(2, int(1))])]);
        let err = validate_symplectic(&alg, &SkewForm::standard(4)).unwrap_err();
        assert_eq!(
            err.0,
            vec![SymplecticViolation::NotClosed {
                triple: (0, 1, 3),
                residual: int(1)
            }]
        );
    }

    #[test]
    fn skew_form_rejects_non_skew() {
        assert_eq!(
            SkewForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])),
            Err(FormError::NotSkew(0, 1))
        );
        assert_eq!(
            SkewForm::new(Matrix::from_i64(&[&[1, 0], &[0, 0]])),
            Err(FormError::NotSkew(0, 0))
        );
        assert!(SkewForm::new(Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn perp_and_kinds() {
        let s = r_h3();
        assert!(s.perp(&Subspace::full(4)).is_zero());
        assert_eq!(s.perp(&Subspace::zero(4)), Subspace::full(4));
        let derived = s.algebra().derived_algebra();
        assert_eq!(
            s.classify_subspace(&derived),
            SubspaceKind::TotallyIsotropic
        );
        assert_eq!(
            s.classify_subspace(&Subspace::full(4)),
            SubspaceKind::Nondegenerate
        );
        // Z = span{x3, x4}: ω(x3, x4) = 0 and it has dimension 2, so it is lagrangian.
        assert_eq!(
            s.classify_subspace(&s.algebra().center()),
            SubspaceKind::Lagrangian
        );

        let w1 = SkewForm::from_wedges(6, &[(0, 5, int(1)), (1, 4, int(1)), (2, 3, int(1))]);
        let g = g6_2(w1).unwrap();
        assert_eq!(
            g.algebra().center(),
            Subspace::span(6, &[e(6, 3), e(6, 4), e(6, 5)])
        );
        assert_eq!(
            g.classify_subspace(&g.algebra().center()),
            SubspaceKind::Lagrangian
        );
    }

    #[test]
    fn darboux_examples() {
        assert_eq!(
            darboux_basis(&SkewForm::standard(6)).unwrap(),
            Matrix::identity(6)
        );
        let form = SkewForm::from_wedges(4, &[(0, 3, int(1)), (1, 2, int(1))]);
        let b = darboux_basis(&form).unwrap();
        let expected = Matrix::from_columns(4, &[e(4, 0), e(4, 3), e(4, 1), e(4, 2)]);
        assert_eq!(b, expected);
        assert_eq!(
            darboux_basis(&SkewForm::from_wedges(2, &[])),
            Err(FormError::Degenerate)
        );
    }

    #[test]
    fn adjoint_examples() {
        let s = r_h3();
        assert_eq!(s.adjoint(&Matrix::identity(4)), Matrix::identity(4));
        let f = Matrix::from_fn(4, 4, |i, j| frac((i * 3 + j) as i64 - 5, (j + 1) as i64));
        let fs = s.adjoint(&f);
        assert_eq!(s.adjoint(&fs), f);
        for i in 0..4 {
            for j in 0..4 {
                let lhs = s.pair(&f.mul_vec(&e(4, i)), &e(4, j));
                let rhs = s.pair(&e(4, i), &fs.mul_vec(&e(4, j)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn adjoint_matches_displayed_case_two_matrix() {
        // Abelian R^4 with {e1, e4, e2, e3} symplectic, ξ from the case ad − bc ≠ 0.
        let form = SkewForm::from_wedges(4, &[(0, 3, int(1)), (1, 2, int(1))]);
        let s = validate_symplectic(&LieAlgebra::abelian(4), &form).unwrap();
        let (a, b, c, d) = (2, 3, 5, 7);
        let xi = Matrix::from_i64(&[&[0, 0, a, b], &[0, 0, c, d], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let expected = Matrix::from_i64(&[
            &[0, 0, -d, -b],
            &[0, 0, -c, -a],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(s.adjoint(&xi), expected);
    }

    #[test]
    fn h_vector_aff1() {
        let aff1 = LieAlgebra::from_table(2, &[(0, 1, &[(1, int(1))])]);
        let s = validate_symplectic(&aff1, &SkewForm::standard(2)).unwrap();
        assert_eq!(s.h_vector(), vec![int(0), int(-1)]);
        assert!(r_h3().h_vector().iter().all(Zero::is_zero));
    }
}
