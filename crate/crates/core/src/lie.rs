//! Lie algebras given by structure constants and their classical invariants.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{
    add_vectors, is_zero_vector, kernel, scale_vector, unit_vector, zero_vector, LinalgError,
    Matrix, Scalar, Subspace, Vector,
};

/// Linear map of a Lie algebra to itself, as a matrix acting on coordinate
/// columns (column `j` is the image of `e_j`).
pub type Endomorphism = Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [e_{0}, e_{0}] is identically zero and cannot be set")]
    DiagonalBracket(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Failure of the Jacobi identity on a basis triple `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

/// A finite-dimensional Lie algebra over Q.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; the others follow
/// from antisymmetry. The Jacobi identity is not assumed; see [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    basis_names: Vec<String>,
    // c[pair_index(i, j)] = [e_i, e_j] for i < j
    brackets: Vec<Vector>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerCentralSeries {
    /// `C^1 = g, C^{k+1} = [g, C^k]`, stopping at the first repeated term.
    pub terms: Vec<Subspace>,
    /// Smallest `k` with `C^{k+1} = 0`, or `None` when the series stalls above zero.
    pub nilpotency_class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    /// `D^1 = [g, g], D^{k+1} = [D^k, D^k]`.
    pub terms: Vec<Subspace>,
    pub solvable: bool,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

impl LieAlgebra {
    /// Abelian algebra on basis `x1..xn`.
    pub fn abelian(n: usize) -> Self {
        Self::abelian_named((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn abelian_named(basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        Self {
            basis_names,
            brackets: vec![zero_vector(n); n * n.saturating_sub(1) / 2],
        }
    }

    /// Sets `[e_i, e_j] = value` (and `[e_j, e_i] = -value`).
    pub fn with_bracket(mut self, i: usize, j: usize, value: Vector) -> Result<Self, LieError> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(LieError::IndexOutOfRange { index: idx, dim: n });
            }
        }
        if value.len() != n {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                found: value.len(),
            }
            .into());
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)] = value,
            std::cmp::Ordering::Greater => {
                self.brackets[pair_index(n, j, i)] = value.iter().map(|x| -x).collect()
            }
            std::cmp::Ordering::Equal => return Err(LieError::DiagonalBracket(i)),
        }
        Ok(self)
    }

    /// Builds an algebra from sparse bracket data `(i, j, [(k, c)])` meaning
    /// `[e_i, e_j] = sum c e_k`, indices 0-based. Panics on bad indices; meant
    /// for fixed tables.
    pub fn from_table(n: usize, table: &[(usize, usize, &[(usize, Scalar)])]) -> Self {
        table.iter().fold(Self::abelian(n), |alg, (i, j, terms)| {
            let mut v = zero_vector(n);
            for (k, c) in terms.iter() {
                v[*k] += c;
            }
            alg.with_bracket(*i, *j, v).expect("valid bracket table")
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.basis_names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// `[e_i, e_j]` with antisymmetric extension.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.brackets[pair_index(n, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
            std::cmp::Ordering::Equal => zero_vector(n),
        }
    }

    /// Structure constant `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)][k].clone(),
            std::cmp::Ordering::Greater => -self.brackets[pair_index(n, j, i)][k].clone(),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                let b = self.bracket_basis(i, j);
                for k in 0..n {
                    if !b[k].is_zero() {
                        out[k] += &c * &b[k];
                    }
                }
            }
        }
        out
    }

    /// All nonzero brackets `(i, j, [e_i, e_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, &self.brackets[pair_index(n, i, j)]))
            .filter(|(_, _, v)| !is_zero_vector(v))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|v| is_zero_vector(v))
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> Result<(), Vec<JacobiViolation>> {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |x| unit_vector(n, x);
                    let t1 = self.bracket(&e(i), &self.bracket_basis(j, k));
                    let t2 = self.bracket(&e(j), &self.bracket_basis(k, i));
                    let t3 = self.bracket(&e(k), &self.bracket_basis(i, j));
                    let residual = add_vectors(&add_vectors(&t1, &t2), &t3);
                    if !is_zero_vector(&residual) {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
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

    /// `ad_u`; column `j` is `[u, e_j]`.
    pub fn ad(&self, u: &[Scalar]) -> Endomorphism {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket(u, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Endomorphism {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Intersection of the kernels of all `ad_{e_j}`: the vectors `u` with
    /// `[u, e_j] = 0` for every `j`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, k) of the stacked system reads sum_i u_i c_{ij}^k = 0.
        let system = Matrix::from_fn(n * n, n, |row, i| {
            self.structure_constant(i, row / n, row % n)
        });
        kernel(&system)
    }

    /// `[A, B]`, the span of all brackets of basis vectors of `a` and `b`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                let w = self.bracket(&u, &v);
                if !is_zero_vector(&w) {
                    vectors.push(w);
                }
            }
        }
        Subspace::span(self.dim(), &vectors)
    }

    /// The derived ideal `[g, g]`.
    pub fn derived_algebra(&self) -> Subspace {
        let vectors: Vec<Vector> = self.nonzero_brackets().map(|(_, _, v)| v.clone()).collect();
        Subspace::span(self.dim(), &vectors)
    }

    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let full = Subspace::full(self.dim());
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                let class = terms.len() - 1;
                return LowerCentralSeries {
                    terms,
                    nilpotency_class: Some(class),
                };
            }
            let next = self.bracket_subspaces(&full, last);
            if &next == last {
                return LowerCentralSeries {
                    terms,
                    nilpotency_class: None,
                };
            }
            terms.push(next);
        }
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![self.derived_algebra()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                return DerivedSeries {
                    terms,
                    solvable: true,
                };
            }
            let next = self.bracket_subspaces(last, last);
            if &next == last {
                return DerivedSeries {
                    terms,
                    solvable: false,
                };
            }
            terms.push(next);
        }
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().nilpotency_class
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// The covector `u ↦ tr(ad_u)` on the basis.
    pub fn trace_character(&self) -> Vector {
        (0..self.dim()).map(|i| self.ad_basis(i).trace()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        is_zero_vector(&self.trace_character())
    }

    /// `[g, I] ⊆ I`.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        let n = self.dim();
        sub.basis_vectors().iter().all(|v| {
            (0..n).all(|j| {
                sub.contains(&self.bracket(&unit_vector(n, j), v))
                    .unwrap_or(false)
            })
        })
    }

    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        sub.contains_subspace(&self.bracket_subspaces(sub, sub))
            .unwrap_or(false)
    }

    /// Rewrites the algebra in a new basis whose vectors are the columns of
    /// `basis` (given in old coordinates).
    pub fn change_basis(
        &self,
        basis: &Matrix,
        names: Vec<String>,
    ) -> Result<LieAlgebra, LinalgError> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n || names.len() != n {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                found: basis.cols(),
            });
        }
        let inv = basis.inverse()?;
        let cols = basis.columns();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for i in 0..n {
            for j in i + 1..n {
                brackets.push(inv.mul_vec(&self.bracket(&cols[i], &cols[j])));
            }
        }
        Ok(LieAlgebra {
            basis_names: names,
            brackets,
        })
    }

    /// Same structure constants, ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.brackets == other.brackets
    }

    /// Linear combination helper: `sum c_i e_i` as a coordinate vector.
    pub fn combination(&self, terms: &[(usize, Scalar)]) -> Vector {
        terms.iter().fold(zero_vector(self.dim()), |acc, (i, c)| {
            add_vectors(&acc, &scale_vector(c, &unit_vector(self.dim(), *i)))
        })
    }
}
