//! Bilinear products on a basis: the canonical torsion-free symplectic
//! product, the natural flat connection, curvature and left symmetry.

use num_traits::Zero;

use super::SymplecticLieAlgebra;
use crate::lie::{Endomorphism, LieAlgebra};
use crate::linalg::{
    frac, is_zero_vector, kernel, sub_vectors, unit_vector, zero_vector, Matrix, Scalar, Subspace,
    Vector,
};

/// Coefficients `p_ij^k` of a bilinear product: `e_i · e_j = sum_k p_ij^k e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProductTensor {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl std::fmt::Debug for ProductTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProductTensor")
            .field("dim", &self.dim)
            .field("nonzero", &self.nonzero_entries())
            .finish()
    }
}

impl ProductTensor {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds a tensor from `(i, j, k, c)` entries; repeated entries add up.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut t = Self::zero(dim);
        for (i, j, k, c) in entries {
            let idx = t.index(*i, *j, *k);
            t.coeffs[idx] += c;
        }
        t
    }

    /// Tensor whose products `e_i · e_j` are `f(i, j)`.
    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                coeffs.extend(v);
            }
        }
        Self { dim, coeffs }
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.index(i, j, k)]
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vector {
        let start = self.index(i, j, 0);
        self.coeffs[start..start + self.dim].to_vec()
    }

    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for i in (0..n).filter(|&i| !u[i].is_zero()) {
            for j in (0..n).filter(|&j| !v[j].is_zero()) {
                let c = &u[i] * &v[j];
                for k in 0..n {
                    let p = self.coefficient(i, j, k);
                    if !p.is_zero() {
                        out[k] += &c * p;
                    }
                }
            }
        }
        out
    }

    /// `L_u`: column `j` is `u · e_j`.
    pub fn left_mult(&self, u: &[Scalar]) -> Endomorphism {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.product(u, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// `R_u`: column `j` is `e_j · u`.
    pub fn right_mult(&self, u: &[Scalar]) -> Endomorphism {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.product(&unit_vector(n, j), u))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn left_mult_basis(&self, i: usize) -> Endomorphism {
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| self.coefficient(i, j, k).clone())
    }

    pub fn right_mult_basis(&self, i: usize) -> Endomorphism {
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| self.coefficient(j, i, k).clone())
    }

    /// `(u·v)·w − u·(v·w)`.
    pub fn associator(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
        sub_vectors(
            &self.product(&self.product(u, v), w),
            &self.product(u, &self.product(v, w)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coefficients `(i, j, k, p_ij^k)` in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.coefficient(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Span of all products `u · v`.
    pub fn span_of_products(&self) -> Subspace {
        let n = self.dim;
        let vectors: Vec<Vector> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.product_basis(i, j))
            .filter(|v| !is_zero_vector(v))
            .collect();
        Subspace::span(n, &vectors)
    }

    /// `{u : L_u = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        let n = self.dim;
        // Row (j, k): sum_i u_i p_ij^k = 0.
        kernel(&Matrix::from_fn(n * n, n, |row, i| {
            self.coefficient(i, row / n, row % n).clone()
        }))
    }

    /// `{u : R_u = 0}`.
    pub fn right_kernel(&self) -> Subspace {
        let n = self.dim;
        kernel(&Matrix::from_fn(n * n, n, |row, i| {
            self.coefficient(row / n, i, row % n).clone()
        }))
    }

    /// Lie-admissibility against a bracket: first basis pair `(i, j)` with
    /// `e_i·e_j − e_j·e_i ≠ [e_i, e_j]`, with the residual.
    pub fn lie_admissibility_defect(&self, algebra: &LieAlgebra) -> Option<NotLieAdmissible> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let commutator = sub_vectors(&self.product_basis(i, j), &self.product_basis(j, i));
                let residual = sub_vectors(&commutator, &algebra.bracket_basis(i, j));
                if !is_zero_vector(&residual) {
                    return Some(NotLieAdmissible {
                        pair: (i, j),
                        residual,
                    });
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("product is not Lie-admissible at basis pair {pair:?}")]
pub struct NotLieAdmissible {
    pub pair: (usize, usize),
    pub residual: Vector,
}

/// Curvature residuals of a Lie-admissible product, computed two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    /// Nonzero `K(e_i, e_j) = L_[e_i,e_j] − [L_i, L_j]`, `i < j`.
    pub curvature: Vec<((usize, usize), Matrix)>,
    /// Nonzero `R_{e_i·e_j} − R_j R_i − [L_i, R_j]` over all ordered pairs.
    pub right_form: Vec<((usize, usize), Matrix)>,
}

impl CurvatureReport {
    pub fn is_flat(&self) -> bool {
        self.curvature.is_empty()
    }

    /// Both residual families vanish together.
    pub fn forms_agree(&self) -> bool {
        self.curvature.is_empty() == self.right_form.is_empty()
    }
}

/// Curvature of the connection `∇_u v = u · v` on the Lie algebra.
pub fn curvature(
    product: &ProductTensor,
    algebra: &LieAlgebra,
) -> Result<CurvatureReport, NotLieAdmissible> {
    if let Some(defect) = product.lie_admissibility_defect(algebra) {
        return Err(defect);
    }
    let n = product.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| product.left_mult_basis(i)).collect();
    let rights: Vec<Matrix> = (0..n).map(|i| product.right_mult_basis(i)).collect();
    let combine = |mats: &[Matrix], coeffs: &[Scalar]| {
        coeffs
            .iter()
            .zip(mats)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (c, m)| &acc + &m.scale(c))
    };

    let mut report = CurvatureReport {
        curvature: Vec::new(),
        right_form: Vec::new(),
    };
    for i in 0..n {
        for j in i + 1..n {
            let k =
                &combine(&lefts, &algebra.bracket_basis(i, j)) - &lefts[i].commutator(&lefts[j]);
            if !k.is_zero() {
                report.curvature.push(((i, j), k));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let r_prod = combine(&rights, &product.product_basis(i, j));
            let residual =
                &(&r_prod - &(&rights[j] * &rights[i])) - &lefts[i].commutator(&rights[j]);
            if !residual.is_zero() {
                report.right_form.push(((i, j), residual));
            }
        }
    }
    Ok(report)
}

/// Basis triples `(i, j, k)`, `i < j`, where `ass(e_i, e_j, e_k) ≠ ass(e_j, e_i, e_k)`.
pub fn check_left_symmetric(product: &ProductTensor) -> Result<(), Vec<(usize, usize, usize)>> {
    let n = product.dim();
    let e = |x| unit_vector(n, x);
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let lhs = product.associator(&e(i), &e(j), &e(k));
                let rhs = product.associator(&e(j), &e(i), &e(k));
                if lhs != rhs {
                    violations.push((i, j, k));
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

impl SymplecticLieAlgebra {
    /// `ω([e_i, e_j], e_w)` for all `i, j, w`, flattened.
    fn bracket_pairings(&self) -> Vec<Scalar> {
        let n = self.dim();
        let omega = self.form().matrix();
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let b = self.algebra().bracket_basis(i, j);
                out.extend((0..n).map(|w| crate::linalg::dot(&b, &omega.column(w))));
            }
        }
        out
    }

    /// The product `•` with `3ω(u•v, w) = ω([u,v], w) + ω([u,w], v)`.
    ///
    /// Solved one ordered basis pair at a time against the fixed `ω⁻¹`.
    pub fn canonical_product(&self) -> ProductTensor {
        let n = self.dim();
        let g = self.bracket_pairings();
        let at = |i: usize, j: usize, w: usize| &g[(i * n + j) * n + w];
        let third = frac(1, 3);
        ProductTensor::from_products(n, |i, j| {
            let rhs: Vector = (0..n)
                .map(|w| &third * (at(i, j, w) + at(i, w, j)))
                .collect();
            self.solve_left_pairing(&rhs)
        })
    }

    /// The connection `ω(∇̄_u v, w) = ω(v, [w, u])`, flat on every symplectic Lie algebra.
    pub fn natural_product(&self) -> ProductTensor {
        let n = self.dim();
        let g = self.bracket_pairings();
        // ω(e_j, [e_w, e_i]) = −ω([e_w, e_i], e_j)
        ProductTensor::from_products(n, |i, j| {
            let rhs: Vector = (0..n).map(|w| -g[(w * n + i) * n + j].clone()).collect();
            self.solve_left_pairing(&rhs)
        })
    }

    pub fn curvature(&self) -> CurvatureReport {
        curvature(&self.canonical_product(), self.algebra())
            .expect("canonical product is Lie-admissible")
    }

    /// Vanishing curvature of the canonical product.
    pub fn is_flat(&self) -> bool {
        self.curvature().is_flat()
    }

    /// `(N^ℓ, N^r, span of all products)` for the canonical product.
    pub fn multiplication_kernels(&self) -> (Subspace, Subspace, Subspace) {
        let p = self.canonical_product();
        (p.left_kernel(), p.right_kernel(), p.span_of_products())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::symplectic::{validate_symplectic, SkewForm};

    fn aff1() -> SymplecticLieAlgebra {
        let alg = LieAlgebra::from_table(2, &[(0, 1, &[(1, int(1))])]);
        validate_symplectic(&alg, &SkewForm::standard(2)).unwrap()
    }

    fn r_h3() -> SymplecticLieAlgebra {
        let alg = LieAlgebra::from_table(4, &[(0, 1, &[(2, int(1))])]);
        let form = SkewForm::from_wedges(4, &[(0, 3, int(1)), (1, 2, int(1))]);
        validate_symplectic(&alg, &form).unwrap()
    }

    #[test]
    fn abelian_products_vanish() {
        let s = validate_symplectic(&LieAlgebra::abelian(4), &SkewForm::standard(4)).unwrap();
        assert!(s.canonical_product().is_zero());
        assert!(s.natural_product().is_zero());
        assert!(check_left_symmetric(&ProductTensor::zero(3)).is_ok());
        let z = ProductTensor::zero(3);
        assert!(z.left_mult(&unit_vector(3, 1)).is_zero());
        assert!(z.right_mult(&unit_vector(3, 2)).is_zero());
    }

    #[test]
    fn r_h3_products() {
        // e1e2 = 2/3 e3, e2e1 = −1/3 e3, e2e2 = −1/3 e4
        let expected = ProductTensor::from_entries(
            4,
            &[
                (0, 1, 2, frac(2, 3)),
                (1, 0, 2, frac(-1, 3)),
                (1, 1, 3, frac(-1, 3)),
            ],
        );
        assert_eq!(r_h3().canonical_product(), expected);
        assert!(r_h3().is_flat());
    }

    #[test]
    fn aff1_is_not_flat() {
        let s = aff1();
        let report = s.curvature();
        assert!(!report.is_flat());
        assert!(report.forms_agree());
        assert!(check_left_symmetric(&s.canonical_product()).is_err());
    }

    #[test]
    fn natural_product_on_aff1() {
        let s = aff1();
        let nat = s.natural_product();
        assert!(!nat.is_zero());
        let report = curvature(&nat, s.algebra()).unwrap();
        assert!(report.is_flat());
        assert!(report.forms_agree());
        assert!(check_left_symmetric(&nat).is_ok());
        // Left multiplications of ∇̄ are not ω-skew on a non-abelian algebra.
        let l0 = nat.left_mult_basis(0);
        let skew = |i, j| {
            s.pair(&l0.column(i), &unit_vector(2, j)) + s.pair(&unit_vector(2, i), &l0.column(j))
        };
        assert!((0..2).any(|i| (0..2).any(|j| !skew(i, j).is_zero())));
    }

    #[test]
    fn curvature_rejects_non_admissible_products() {
        let alg = LieAlgebra::from_table(2, &[(0, 1, &[(1, int(1))])]);
        let err = curvature(&ProductTensor::zero(2), &alg).unwrap_err();
        assert_eq!(err.pair, (0, 1));
        assert_eq!(err.residual, vec![int(0), int(-1)]);
    }

    #[test]
    fn kernels_and_products_span() {
        let s = r_h3();
        let (nl, nr, gg) = s.multiplication_kernels();
        let z = s.algebra().center();
        assert_eq!(nl.intersect(&nr).unwrap(), z);
        assert_eq!(s.perp(&gg), z);
        let (nl, nr, gg) = validate_symplectic(&LieAlgebra::abelian(2), &SkewForm::standard(2))
            .unwrap()
            .multiplication_kernels();
        assert_eq!((nl.dim(), nr.dim(), gg.dim()), (2, 2, 0));
    }
}
