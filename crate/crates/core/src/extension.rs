//! Double extensions of flat symplectic Lie algebras and their inverses.
//!
//! The extension of `(B, ω_B)` by `(ξ, b0)` lives on `ℝe ⊕ B ⊕ ℝē`, stored
//! in the basis order `[e, b_1, ..., b_m, ē]` with `ω(e, ē) = 1` and
//! `e, ē` orthogonal to `B`. Matrices act on column vectors: column `j` of
//! `ξ` is `ξ(b_j)`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{Endomorphism, LieAlgebra};
use crate::linalg::{
    add_vectors, format_scalar, format_vector, frac, int, is_zero_vector, scale_vector, solve,
    sub_vectors, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector,
};
use crate::symplectic::{
    check_left_symmetric, validate_symplectic, ProductTensor, SkewForm, SymplecticLieAlgebra,
};

/// `(ξ, b0) ∈ End(B) × B`. Admissibility is a property checked against a
/// base, not an invariant of the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub xi: Endomorphism,
    pub b0: Vector,
}

impl AdmissiblePair {
    pub fn new(xi: Endomorphism, b0: Vector) -> Self {
        Self { xi, b0 }
    }

    /// The only pair on the `{0}` algebra.
    pub fn empty() -> Self {
        Self::zero(0)
    }

    /// `ξ = 0`, `b0 = 0` on a base of dimension `m`.
    pub fn zero(m: usize) -> Self {
        Self {
            xi: Matrix::zeros(m, m),
            b0: zero_vector(m),
        }
    }

    pub fn dim(&self) -> usize {
        self.b0.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Matrix(Matrix),
    Vector(Vector),
    /// Nonzero residuals indexed by pairs of base basis vectors.
    Pairs(Vec<((usize, usize), Vector)>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Matrix(m) => m.is_zero(),
            Residual::Vector(v) => is_zero_vector(v),
            Residual::Pairs(p) => p.is_empty(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationCheck {
    /// `eq1` ... `eq5`.
    pub name: &'static str,
    pub statement: &'static str,
    pub residual: Residual,
}

impl EquationCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub equations: Vec<EquationCheck>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.equations.iter().all(EquationCheck::holds)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.equations
            .iter()
            .filter(|c| !c.holds())
            .map(|c| c.name)
            .collect()
    }

    pub fn equation(&self, name: &str) -> Option<&EquationCheck> {
        self.equations.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.equations {
            if check.holds() {
                writeln!(f, "{}: holds    {}", check.name, check.statement)?;
                continue;
            }
            writeln!(f, "{} violated  {}", check.name, check.statement)?;
            match &check.residual {
                Residual::Matrix(m) => write!(f, "{m}")?,
                Residual::Vector(v) => writeln!(f, "  residual {}", format_vector(v))?,
                Residual::Pairs(pairs) => {
                    for ((i, j), v) in pairs {
                        writeln!(f, "  (b{}, b{}): {}", i + 1, j + 1, format_vector(v))?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionWitness {
    pub e_index: usize,
    pub ebar_index: usize,
    /// Columns are the base vectors inside the extension.
    pub base_embedding: Matrix,
    /// Columns `[e, b_1, ..., b_m, ē]` in the coordinates of the extended
    /// algebra. The identity for [`double_extend`]; for
    /// [`inverse_double_extend`] it maps the rebuilt extension onto the input.
    pub basis: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("pair has dimension {found}, base has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("base is not flat")]
    BaseNotFlat,
    #[error("pair is not admissible: {} violated", .0.failed().join(", "))]
    NotAdmissible(AdmissibilityReport),
    #[error("extension postcondition failed: {0}")]
    Postcondition(String),
    #[error("algebra is not flat")]
    NotFlat,
    #[error("center is trivial")]
    TrivialCenter,
    #[error("vector is not central")]
    NotCentral,
    #[error("[ē, e] = λe with λ = {0} ≠ 0")]
    NonzeroLambda(String),
    #[error("subspace is not a Lie ideal")]
    NotAnIdeal,
    #[error("stage {stage}: {source}")]
    AtStage {
        stage: usize,
        source: Box<ExtensionError>,
    },
}

/// Evaluates the five admissibility equations on the canonical product of `base`.
pub fn check_admissible(base: &SymplecticLieAlgebra, pair: &AdmissiblePair) -> AdmissibilityReport {
    let m = base.dim();
    let p = base.canonical_product();
    let xi = &pair.xi;
    let xs = base.adjoint(xi);
    let r0 = p.right_mult(&pair.b0);
    let third = frac(1, 3);
    let e = |i| unit_vector(m, i);

    let eq1 = &(&xi.commutator(&xs) - &(xi * xi)) + &r0.scale(&third);
    let eq2 = (&xs - xi).mul_vec(&pair.b0);
    let eq3 = &(&xs * xi) - &(&r0 + &base.adjoint(&r0)).scale(&third);
    let mut eq4 = Vec::new();
    let mut eq5 = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (e(i), e(j));
            let (xa, xb) = (xi.mul_vec(&a), xi.mul_vec(&b));
            let r = sub_vectors(
                &sub_vectors(
                    &xi.mul_vec(&base.algebra().bracket(&a, &b)),
                    &p.product(&a, &xb),
                ),
                &scale_vector(&int(-1), &p.product(&b, &xa)),
            );
            if !is_zero_vector(&r) {
                eq4.push(((i, j), r));
            }
            let ab = p.product(&a, &b);
            let lhs = sub_vectors(
                &sub_vectors(&xs.mul_vec(&ab), &p.product(&xs.mul_vec(&a), &b)),
                &p.product(&a, &xs.mul_vec(&b)),
            );
            let rhs = sub_vectors(
                &sub_vectors(&xi.mul_vec(&ab), &p.product(&a, &xb)),
                &scale_vector(&int(2), &p.product(&xa, &b)),
            );
            let r = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&r) {
                eq5.push(((i, j), r));
            }
        }
    }
    AdmissibilityReport {
        equations: vec![
            EquationCheck {
                name: "eq1",
                statement: "[ξ,ξ*] = ξ² − R_b0/3",
                residual: Residual::Matrix(eq1),
            },
            EquationCheck {
                name: "eq2",
                statement: "b0 ∈ ker(ξ* − ξ)",
                residual: Residual::Vector(eq2),
            },
            EquationCheck {
                name: "eq3",
                statement: "ξ*ξ = (R_b0 + R_b0*)/3",
                residual: Residual::Matrix(eq3),
            },
            EquationCheck {
                name: "eq4",
                statement: "ξ([a,b]) = aξ(b) − bξ(a)",
                residual: Residual::Pairs(eq4),
            },
            EquationCheck {
                name: "eq5",
                statement: "ξ*(ab) − ξ*(a)b − aξ*(b) = ξ(ab) − aξ(b) − 2ξ(a)b",
                residual: Residual::Pairs(eq5),
            },
        ],
    }
}

fn check_dims(base: &SymplecticLieAlgebra, pair: &AdmissiblePair) -> Result<(), ExtensionError> {
    let m = base.dim();
    for found in [pair.xi.rows(), pair.xi.cols(), pair.b0.len()] {
        if found != m {
            return Err(ExtensionError::DimensionMismatch { expected: m, found });
        }
    }
    Ok(())
}

fn extension_names(base: &LieAlgebra) -> Vec<String> {
    let k = base.dim() / 2 + 1;
    let fresh = |stem: String| {
        let mut name = stem;
        while base.basis_names().contains(&name) {
            name.push('\'');
        }
        name
    };
    let mut names = vec![fresh(format!("e{k}"))];
    names.extend(base.basis_names().iter().cloned());
    names.push(fresh(format!("ebar{k}")));
    names
}

/// Embeds `αe + b + γē` in extension coordinates.
fn lift(alpha: Scalar, b: &[Scalar], gamma: Scalar) -> Vector {
    let mut v = Vec::with_capacity(b.len() + 2);
    v.push(alpha);
    v.extend(b.iter().cloned());
    v.push(gamma);
    v
}

/// Brackets and form of the extension without any admissibility check.
///
/// The result need not satisfy the Jacobi identity when the pair is not
/// admissible.
pub fn extension_candidate(
    base: &SymplecticLieAlgebra,
    pair: &AdmissiblePair,
) -> (LieAlgebra, SkewForm) {
    let m = base.dim();
    let n = m + 2;
    let xs = base.adjoint(&pair.xi);
    let d = &xs - &pair.xi.scale(&int(2));
    let s = &pair.xi + &xs;
    let mut alg = LieAlgebra::abelian_named(extension_names(base.algebra()));
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (unit_vector(m, i), unit_vector(m, j));
            let v = lift(
                base.pair(&s.mul_vec(&a), &b),
                &base.algebra().bracket(&a, &b),
                Scalar::zero(),
            );
            alg = alg.with_bracket(i + 1, j + 1, v).expect("indices in range");
        }
    }
    for j in 0..m {
        let a = unit_vector(m, j);
        // [b_j, ē] = −[ē, b_j].
        let v = lift(
            -base.pair(&pair.b0, &a),
            &scale_vector(&int(-1), &d.mul_vec(&a)),
            Scalar::zero(),
        );
        alg = alg.with_bracket(j + 1, n - 1, v).expect("indices in range");
    }
    let mut omega = Matrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            omega[(i + 1, j + 1)] = base.form().pair_basis(i, j).clone();
        }
    }
    if n > 0 {
        omega[(0, n - 1)] = Scalar::one();
        omega[(n - 1, 0)] = -Scalar::one();
    }
    (alg, SkewForm::new(omega).expect("skew by construction"))
}

/// The canonical product of the extension as given by the closed formulas
/// `ē•a = (ξ*−ξ)a + ω(b0,a)e/3`, `a•ē = ξa − 2ω(b0,a)e/3`,
/// `a•b = ab + ω(ξa,b)e`, `ē•ē = b0/3`, `L_e = R_e = 0`.
pub fn extension_product(base: &SymplecticLieAlgebra, pair: &AdmissiblePair) -> ProductTensor {
    let m = base.dim();
    let n = m + 2;
    let p = base.canonical_product();
    let xs = base.adjoint(&pair.xi);
    let xs_minus_xi = &xs - &pair.xi;
    let zero = Scalar::zero;
    ProductTensor::from_products(n, |i, j| {
        let is_base = |k: usize| k >= 1 && k <= m;
        let b = |k: usize| unit_vector(m, k - 1);
        if i == 0 || j == 0 {
            zero_vector(n)
        } else if is_base(i) && is_base(j) {
            let (a, c) = (b(i), b(j));
            lift(
                base.pair(&pair.xi.mul_vec(&a), &c),
                &p.product(&a, &c),
                zero(),
            )
        } else if is_base(i) {
            let a = b(i);
            lift(
                frac(-2, 3) * base.pair(&pair.b0, &a),
                &pair.xi.mul_vec(&a),
                zero(),
            )
        } else if is_base(j) {
            let a = b(j);
            lift(
                frac(1, 3) * base.pair(&pair.b0, &a),
                &xs_minus_xi.mul_vec(&a),
                zero(),
            )
        } else {
            lift(zero(), &scale_vector(&frac(1, 3), &pair.b0), zero())
        }
    })
}

/// Whether the closed-formula product of the candidate extension is left-symmetric.
pub fn candidate_is_left_symmetric(base: &SymplecticLieAlgebra, pair: &AdmissiblePair) -> bool {
    check_left_symmetric(&extension_product(base, pair)).is_ok()
}

/// Builds the double extension of a flat base and verifies it.
pub fn double_extend(
    base: &SymplecticLieAlgebra,
    pair: &AdmissiblePair,
) -> Result<(SymplecticLieAlgebra, ExtensionWitness), ExtensionError> {
    check_dims(base, pair)?;
    if !base.is_flat() {
        return Err(ExtensionError::BaseNotFlat);
    }
    let report = check_admissible(base, pair);
    if !report.is_admissible() {
        return Err(ExtensionError::NotAdmissible(report));
    }
    let (alg, form) = extension_candidate(base, pair);
    let g = validate_symplectic(&alg, &form)
        .map_err(|e| ExtensionError::Postcondition(e.to_string()))?;
    let product = g.canonical_product();
    if product != extension_product(base, pair) {
        return Err(ExtensionError::Postcondition(
            "canonical product differs from the closed formulas".into(),
        ));
    }
    let n = g.dim();
    if !product.left_mult_basis(0).is_zero() || !product.right_mult_basis(0).is_zero() {
        return Err(ExtensionError::Postcondition(
            "L_e or R_e is nonzero".into(),
        ));
    }
    if !g.is_flat() {
        return Err(ExtensionError::Postcondition(
            "extension is not flat".into(),
        ));
    }
    let m = base.dim();
    let witness = ExtensionWitness {
        e_index: 0,
        ebar_index: n - 1,
        base_embedding: Matrix::from_fn(n, m, |r, c| {
            if r == c + 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }),
        basis: Matrix::identity(n),
    };
    Ok((g, witness))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deconstruction {
    pub base: SymplecticLieAlgebra,
    pub pair: AdmissiblePair,
    pub witness: ExtensionWitness,
}

/// Writes a flat algebra as a double extension along the central vector `e`
/// (the first canonical center vector when `None`).
pub fn inverse_double_extend(
    s: &SymplecticLieAlgebra,
    e: Option<&[Scalar]>,
) -> Result<Deconstruction, ExtensionError> {
    let n = s.dim();
    if !s.is_flat() {
        return Err(ExtensionError::NotFlat);
    }
    let center = s.algebra().center();
    let e: Vector = match e {
        Some(v) if v.len() != n => {
            return Err(ExtensionError::DimensionMismatch {
                expected: n,
                found: v.len(),
            })
        }
        Some(v) if is_zero_vector(v) => return Err(ExtensionError::NotCentral),
        Some(v) if !center.contains(v).expect("same ambient") => {
            return Err(ExtensionError::NotCentral)
        }
        Some(v) => v.to_vec(),
        None => center
            .basis_vectors()
            .into_iter()
            .next()
            .ok_or(ExtensionError::TrivialCenter)?,
    };

    // ω(e, x) = 1 with free coordinates zeroed.
    let row = Matrix::from_rows(vec![s.form().matrix().transpose().mul_vec(&e)]);
    let ebar = solve(&row, &[Scalar::one()])
        .map_err(|_| ExtensionError::Postcondition("ω(e, ·) vanishes".into()))?;
    let plane = Subspace::span(n, &[e.clone(), ebar.clone()]);
    let b_prime = s.perp(&plane).basis_vectors();
    let m = b_prime.len();

    let mut columns = vec![e.clone()];
    columns.extend(b_prime.iter().cloned());
    columns.push(ebar.clone());
    let basis = Matrix::from_columns(n, &columns);
    let base_names: Vec<String> = (1..=m).map(|i| format!("b{i}")).collect();
    let mut names = vec!["e".to_string()];
    names.extend(base_names.iter().cloned());
    names.push("ebar".to_string());
    let t = s
        .change_basis(&basis, names)
        .map_err(|err| ExtensionError::Postcondition(err.to_string()))?;

    let lambda = t.algebra().structure_constant(0, n - 1, 0);
    if !lambda.is_zero() {
        return Err(ExtensionError::NonzeroLambda(format_scalar(&-lambda)));
    }

    let mut base_alg = LieAlgebra::abelian_named(base_names);
    for i in 0..m {
        for j in i + 1..m {
            let v = t.algebra().bracket_basis(i + 1, j + 1)[1..=m].to_vec();
            base_alg = base_alg.with_bracket(i, j, v).expect("indices in range");
        }
    }
    let omega_b = Matrix::from_fn(m, m, |i, j| t.form().pair_basis(i + 1, j + 1).clone());
    let base_form = SkewForm::new(omega_b.clone())
        .map_err(|err| ExtensionError::Postcondition(err.to_string()))?;
    let base = validate_symplectic(&base_alg, &base_form)
        .map_err(|err| ExtensionError::Postcondition(err.to_string()))?;

    let p = t.canonical_product();
    // ω_B(ξ b_i, b_j) is the e-coefficient of b_i • b_j, i.e. ξᵀ ω_B = F.
    let f = Matrix::from_fn(m, m, |i, j| p.coefficient(i + 1, j + 1, 0).clone());
    let xi = if m == 0 {
        Matrix::zeros(0, 0)
    } else {
        (&f * base.omega_inv()).transpose()
    };
    let b0 = scale_vector(&int(3), &p.product_basis(n - 1, n - 1)[1..=m]);
    let pair = AdmissiblePair { xi, b0 };

    let report = check_admissible(&base, &pair);
    if !report.is_admissible() {
        return Err(ExtensionError::Postcondition(format!(
            "recovered pair fails {}",
            report.failed().join(", ")
        )));
    }
    let (rebuilt, _) = double_extend(&base, &pair)?;
    if !rebuilt.same_structure(&t) {
        return Err(ExtensionError::Postcondition(
            "round trip does not reproduce the algebra".into(),
        ));
    }
    let witness = ExtensionWitness {
        e_index: 0,
        ebar_index: n - 1,
        base_embedding: Matrix::from_columns(n, &b_prime),
        basis,
    };
    Ok(Deconstruction {
        base,
        pair,
        witness,
    })
}

/// The symplectic reduction `I^⊥ / (I ∩ I^⊥)` of a Lie ideal `I`.
///
/// Quotient basis: the canonical basis vectors of `I^⊥`, greedily skipping
/// those that lie in the span of `I ∩ I^⊥` and the vectors already taken.
/// Returns the quotient and the representatives as matrix columns.
pub fn symplectic_reduce(
    s: &SymplecticLieAlgebra,
    ideal: &Subspace,
) -> Result<(SymplecticLieAlgebra, Matrix), ExtensionError> {
    let n = s.dim();
    if ideal.ambient_dim() != n {
        return Err(ExtensionError::DimensionMismatch {
            expected: n,
            found: ideal.ambient_dim(),
        });
    }
    if !s.algebra().is_ideal(ideal) {
        return Err(ExtensionError::NotAnIdeal);
    }
    let perp = s.perp(ideal);
    let kernel = ideal.intersect(&perp).expect("same ambient");
    let mut reps: Vec<Vector> = Vec::new();
    let mut spanned = kernel.clone();
    for v in perp.basis_vectors() {
        if !spanned.contains(&v).expect("same ambient") {
            spanned = spanned
                .sum(&Subspace::span(n, std::slice::from_ref(&v)))
                .expect("same ambient");
            reps.push(v);
        }
    }
    let q = reps.len();
    // Coordinates modulo the kernel: solve [R | K] c = v and keep the R part.
    let system = Matrix::from_columns(n, &reps).hstack(kernel.basis());
    let reduce = |v: &[Scalar]| -> Vector {
        let c = solve(&system, v).expect("bracket stays in I^⊥");
        c[..q].to_vec()
    };
    let names: Vec<String> = (1..=q).map(|i| format!("y{i}")).collect();
    let mut alg = LieAlgebra::abelian_named(names);
    for i in 0..q {
        for j in i + 1..q {
            let v = reduce(&s.algebra().bracket(&reps[i], &reps[j]));
            alg = alg.with_bracket(i, j, v).expect("indices in range");
        }
    }
    let omega = Matrix::from_fn(q, q, |i, j| s.pair(&reps[i], &reps[j]));
    let form =
        SkewForm::new(omega).map_err(|err| ExtensionError::Postcondition(err.to_string()))?;
    let quotient = validate_symplectic(&alg, &form)
        .map_err(|err| ExtensionError::Postcondition(err.to_string()))?;
    Ok((quotient, Matrix::from_columns(n, &reps)))
}

/// Repeated inverse double extension along the first center vector, from
/// the input down to `{0}`. Entry `k` takes stage `k` to stage `k + 1`.
pub fn reduction_tower(s: &SymplecticLieAlgebra) -> Result<Vec<Deconstruction>, ExtensionError> {
    let mut steps = Vec::new();
    let mut current = s.clone();
    while current.dim() > 0 {
        let step =
            inverse_double_extend(&current, None).map_err(|err| ExtensionError::AtStage {
                stage: steps.len(),
                source: Box::new(err),
            })?;
        current = step.base.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// Rewrites the pairs of a reduction tower so that [`extension_tower`]
/// rebuilds the reduced algebra `S`, ordered from `{0}` up.
///
/// Also returns `M` with `S.change_basis(M)` structurally identical to the
/// rebuilt algebra. Each pair is transported by the basis change accumulated
/// below it: `ξ ↦ M⁻¹ξM`, `b0 ↦ M⁻¹b0`.
pub fn tower_replay(steps: &[Deconstruction]) -> (Vec<AdmissiblePair>, Matrix) {
    let mut pairs = Vec::with_capacity(steps.len());
    let mut basis = Matrix::identity(0);
    for step in steps.iter().rev() {
        let inv = basis.inverse().expect("witness bases are invertible");
        pairs.push(AdmissiblePair::new(
            &(&inv * &step.pair.xi) * &basis,
            inv.mul_vec(&step.pair.b0),
        ));
        let n = basis.rows() + 2;
        let block = Matrix::from_fn(n, n, |i, j| match (i, j) {
            (0, 0) => Scalar::one(),
            _ if i == n - 1 && j == n - 1 => Scalar::one(),
            _ if (1..n - 1).contains(&i) && (1..n - 1).contains(&j) => {
                basis[(i - 1, j - 1)].clone()
            }
            _ => Scalar::zero(),
        });
        basis = &step.witness.basis * &block;
    }
    (pairs, basis)
}

/// Folds [`double_extend`] over `pairs`, starting from `{0}`. Every stage is
/// checked to be flat and nilpotent.
pub fn extension_tower(pairs: &[AdmissiblePair]) -> Result<SymplecticLieAlgebra, ExtensionError> {
    pairs
        .iter()
        .enumerate()
        .try_fold(SymplecticLieAlgebra::zero(), |stage, (k, pair)| {
            let at = |err| ExtensionError::AtStage {
                stage: k,
                source: Box::new(err),
            };
            let (next, _) = double_extend(&stage, pair).map_err(at)?;
            if !next.algebra().is_nilpotent() {
                return Err(at(ExtensionError::Postcondition(
                    "stage is not nilpotent".into(),
                )));
            }
            Ok(next)
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyTraceReport {
    /// `tr(ξ^k ∘ R_a) = tr(R_{ξ^k(a)})` for `k = 1..=dim B` and basis `a`.
    pub trace_identity: bool,
    /// `tr(ξ^{k+1}) = tr(R_b0 ∘ ξ^{k−1}) / 3` for `k = 1..=dim B`.
    pub power_trace_identity: bool,
    /// `D = ξ* − 2ξ` is a derivation of the base bracket.
    pub d_is_derivation: bool,
    pub base_nilpotent: bool,
    pub xi_nilpotent: bool,
    pub d_nilpotent: bool,
    /// `Im ξ` is totally isotropic.
    pub image_isotropic: bool,
    pub xi_squared_zero: bool,
}

impl NilpotencyTraceReport {
    /// Identities that hold for any admissible pair, plus nilpotency of `ξ`
    /// and `D` when the base is nilpotent.
    pub fn all_hold(&self) -> bool {
        self.trace_identity
            && self.power_trace_identity
            && self.d_is_derivation
            && (!self.base_nilpotent || (self.xi_nilpotent && self.d_nilpotent))
    }
}

pub fn nilpotency_trace_report(
    base: &SymplecticLieAlgebra,
    pair: &AdmissiblePair,
) -> NilpotencyTraceReport {
    let m = base.dim();
    let p = base.canonical_product();
    let xi = &pair.xi;
    let xs = base.adjoint(xi);
    let d = &xs - &xi.scale(&int(2));
    let r0 = p.right_mult(&pair.b0);
    let mut trace_identity = true;
    let mut power_trace_identity = true;
    for k in 1..=m as u32 {
        let xk = xi.pow(k);
        for i in 0..m {
            let a = unit_vector(m, i);
            trace_identity &=
                (&xk * &p.right_mult(&a)).trace() == p.right_mult(&xk.mul_vec(&a)).trace();
        }
        power_trace_identity &=
            xi.pow(k + 1).trace() == frac(1, 3) * (&r0 * &xi.pow(k - 1)).trace();
    }
    let alg = base.algebra();
    let d_is_derivation = (0..m).all(|i| {
        (0..m).all(|j| {
            let (a, b) = (unit_vector(m, i), unit_vector(m, j));
            d.mul_vec(&alg.bracket(&a, &b))
                == add_vectors(
                    &alg.bracket(&d.mul_vec(&a), &b),
                    &alg.bracket(&a, &d.mul_vec(&b)),
                )
        })
    });
    let image = Subspace::column_space(xi);
    NilpotencyTraceReport {
        trace_identity,
        power_trace_identity,
        d_is_derivation,
        base_nilpotent: alg.is_nilpotent(),
        xi_nilpotent: xi.is_nilpotent(),
        d_nilpotent: d.is_nilpotent(),
        image_isotropic: base
            .perp(&image)
            .contains_subspace(&image)
            .expect("same ambient"),
        xi_squared_zero: (xi * xi).is_zero(),
    }
}
