//! Exact linear algebra over the rationals.
//!
//! Everything here is deterministic: pivots are always the first nonzero
//! entry in row/column order, and subspaces are stored in a canonical
//! reduced column echelon form so that two equal subspaces compare equal as
//! plain values.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Column vector of scalars.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseScalarError(pub String);

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` with no surrounding whitespace.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(s.to_owned());
    let valid_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        None if valid_int(s) => Ok(Scalar::from_integer(s.parse().map_err(|_| err())?)),
        Some((p, q)) if valid_int(p) && !q.is_empty() && q.bytes().all(|b| b.is_ascii_digit()) => {
            let p: BigInt = p.parse().map_err(|_| err())?;
            let q: BigInt = q.parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Scalar::new(p, q))
        }
        _ => Err(err()),
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// `"(a, b, c)"`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    /// Builds a `len × k` matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vector]) -> Self {
        assert!(
            columns.iter().all(|c| c.len() == len),
            "column length mismatch"
        );
        Self::from_fn(len, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Matrix commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        (0..k).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }

    /// True when some power of the matrix vanishes (checked at the dimension).
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u32).is_zero()
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Sub-matrix made of the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let reduced = rref(&self.hstack(&Matrix::identity(n)));
        if reduced.pivot_cols.iter().copied().take(n).ne(0..n) {
            return Err(LinalgError::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| {
            reduced.reduced[(i, n + j)].clone()
        }))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    let delta = &factor * &a[(r, j)];
                    a[(i, j)] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let rank = pivot_cols.len();
    Rref {
        reduced: a,
        pivot_cols,
        rank,
    }
}

/// Null space `{v : m v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    let Rref {
        reduced,
        pivot_cols,
        ..
    } = rref(m);
    let n = m.cols;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = unit_vector(n, free);
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -reduced[(row, free)].clone();
        }
        basis.push(v);
    }
    Subspace::span(n, &basis)
}

/// Solves `m x = b`; free coordinates of the returned solution are zero.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Vector, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    let aug = m.hstack(&Matrix::from_columns(m.rows, &[b.to_vec()]));
    let Rref {
        reduced,
        pivot_cols,
        ..
    } = rref(&aug);
    if pivot_cols.last() == Some(&m.cols) {
        return Err(LinalgError::NoSolution);
    }
    let mut x = zero_vector(m.cols);
    for (row, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = reduced[(row, m.cols)].clone();
    }
    Ok(x)
}

/// A linear subspace of `Q^n`, stored canonically.
///
/// The basis matrix is in reduced column echelon form: pivot rows strictly
/// increase from column to column and each pivot is the only nonzero entry
/// of its row. Equality of subspaces is therefore equality of values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersect,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: Matrix::zeros(n, 0),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: Matrix::identity(n),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == n),
            "vector length mismatch"
        );
        if vectors.is_empty() {
            return Self::zero(n);
        }
        let Rref { reduced, rank, .. } = rref(&Matrix::from_rows(vectors.to_vec()));
        let cols: Vec<Vector> = (0..rank).map(|i| reduced.row(i).to_vec()).collect();
        Self {
            ambient_dim: n,
            basis: Matrix::from_columns(n, &cols),
        }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.rows(), &m.columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis matrix (`ambient_dim × dim`).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    fn check_dim(&self, n: usize) -> Result<(), LinalgError> {
        if self.ambient_dim == n {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            })
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        self.check_dim(v.len())?;
        if is_zero_vector(v) {
            return Ok(true);
        }
        let mut vectors = self.basis_vectors();
        vectors.push(v.to_vec());
        Ok(Subspace::span(self.ambient_dim, &vectors).dim() == self.dim())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_dim(other.ambient_dim)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other.ambient_dim)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient_dim, &vectors))
    }

    /// Intersection through the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = self.basis.hstack(&-&other.basis);
        let k = self.dim();
        let vectors: Vec<Vector> = kernel(&stacked)
            .basis_vectors()
            .into_iter()
            .map(|coeffs| self.basis.mul_vec(&coeffs[..k]))
            .collect();
        Ok(Subspace::span(self.ambient_dim, &vectors))
    }

    /// Re-derives the canonical form; idempotent on values already canonical.
    pub fn canonicalize(&self) -> Subspace {
        Subspace::span(self.ambient_dim, &self.basis_vectors())
    }
}

pub fn subspace_combine(
    a: &Subspace,
    b: &Subspace,
    mode: CombineMode,
) -> Result<Subspace, LinalgError> {
    match mode {
        CombineMode::Sum => a.sum(b),
        CombineMode::Intersect => a.intersect(b),
    }
}

pub fn subspace_contains(a: &Subspace, v: &[Scalar]) -> Result<bool, LinalgError> {
    a.contains(v)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}, basis {:?})",
            self.dim(),
            self.ambient_dim,
            self.basis.columns()
        )
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let m = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let r = rref(&m);
        assert_eq!(r.reduced, m);
        assert_eq!(r.pivot_cols, vec![1]);

        // R2 <- R2 - 2 R1 leaves [[1,2],[0,0]].
        let r = rref(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        assert_eq!(
            kernel(&Matrix::from_i64(&[&[0, 1], &[0, 0]])),
            Subspace::span(2, &[v(&[1, 0])])
        );
        assert_eq!(kernel(&Matrix::zeros(3, 3)), Subspace::full(3));
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -1]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), b);
        assert_eq!(
            solve(&Matrix::from_i64(&[&[1, 1]]), &v(&[2])).unwrap(),
            v(&[2, 0])
        );
        assert_eq!(
            solve(&Matrix::from_i64(&[&[0], &[1]]), &v(&[1, 0])),
            Err(LinalgError::NoSolution)
        );
        assert!(matches!(
            solve(&Matrix::identity(2), &v(&[1])),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn subspace_lattice() {
        let e1 = Subspace::span(2, &[v(&[1, 0])]);
        let e2 = Subspace::span(2, &[v(&[0, 1])]);
        let diag = Subspace::span(2, &[v(&[1, 1])]);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert!(diag.intersect(&e1).unwrap().is_zero());
        assert!(diag.contains(&v(&[2, 2])).unwrap());
        assert!(!diag.contains(&v(&[2, 1])).unwrap());
        assert!(e1.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_basis_is_column_echelon() {
        let s = Subspace::span(3, &[v(&[2, 4, 0]), v(&[1, 2, 1])]);
        assert_eq!(s.basis_vectors(), vec![v(&[1, 2, 0]), v(&[0, 0, 1])]);
        assert_eq!(s.canonicalize(), s);
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        for bad in ["", "1/0", " 1", "1/-2", "a", "1/2/3", "--1"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
        assert_eq!(format_scalar(&frac(4, -6)), "-2/3");
        assert_eq!(format_scalar(&int(5)), "5");
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        assert_eq!(
            Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(),
            Err(LinalgError::Singular)
        );
    }
}
