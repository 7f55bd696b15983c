//! Named flat symplectic Lie algebras of dimension at most six, the
//! admissible-pair families that generate them, and invariant fingerprints
//! standing in for isomorphism tests.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::extension::AdmissiblePair;
use crate::lie::LieAlgebra;
use crate::linalg::{frac, int, parse_scalar, unit_vector, zero_vector, Matrix, Scalar, Vector};
use crate::symplectic::{
    validate_symplectic, InvalidSymplectic, ProductTensor, SkewForm, SymplecticLieAlgebra,
};

pub const DEFAULT_LAMBDA: i64 = 2;

/// The isomorphism classes of Lie algebras of dimension ≤ 6 carrying a flat
/// symplectic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlatClass {
    R0,
    R2,
    R4,
    RxH3,
    R6,
    R3xH3,
    G61,
    G62,
    G63,
}

impl FlatClass {
    pub const ALL: [FlatClass; 9] = [
        FlatClass::R0,
        FlatClass::R2,
        FlatClass::R4,
        FlatClass::RxH3,
        FlatClass::R6,
        FlatClass::R3xH3,
        FlatClass::G61,
        FlatClass::G62,
        FlatClass::G63,
    ];

    pub const DIM6: [FlatClass; 5] = [
        FlatClass::R6,
        FlatClass::R3xH3,
        FlatClass::G61,
        FlatClass::G62,
        FlatClass::G63,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FlatClass::R0 => "R^0",
            FlatClass::R2 => "R^2",
            FlatClass::R4 => "R^4",
            FlatClass::RxH3 => "R x h3",
            FlatClass::R6 => "R^6",
            FlatClass::R3xH3 => "R^3 x h3",
            FlatClass::G61 => "g6_1",
            FlatClass::G62 => "g6_2",
            FlatClass::G63 => "g6_3",
        }
    }

    /// A representative bracket table.
    pub fn representative(self) -> LieAlgebra {
        let one = || int(1);
        match self {
            FlatClass::R0 => LieAlgebra::abelian(0),
            FlatClass::R2 => LieAlgebra::abelian(2),
            FlatClass::R4 => LieAlgebra::abelian(4),
            FlatClass::R6 => LieAlgebra::abelian(6),
            FlatClass::RxH3 => LieAlgebra::from_table(4, &[(0, 1, &[(2, one())])]),
            FlatClass::R3xH3 => LieAlgebra::from_table(6, &[(0, 1, &[(5, one())])]),
            FlatClass::G61 => LieAlgebra::from_table(
                6,
                &[
                    (0, 1, &[(3, one())]),
                    (0, 2, &[(4, one())]),
                    (1, 2, &[(5, one())]),
                ],
            ),
            FlatClass::G62 => {
                LieAlgebra::from_table(6, &[(0, 1, &[(4, one())]), (0, 2, &[(5, one())])])
            }
            FlatClass::G63 => LieAlgebra::from_table(
                6,
                &[
                    (0, 1, &[(3, one())]),
                    (0, 2, &[(4, one())]),
                    (0, 3, &[(5, one())]),
                    (1, 2, &[(5, one())]),
                ],
            ),
        }
    }
}

impl fmt::Display for FlatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedClass {
    Flat(FlatClass),
    NotFlat,
}

/// Dimensions of the standard invariant subspaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub center_meets_derived_dim: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {}, lcs {:?}, derived series {:?}, center {}, [g,g] {}, Z ∩ [g,g] {}",
            self.dim,
            self.lcs_dims,
            self.derived_dims,
            self.center_dim,
            self.derived_dim,
            self.center_meets_derived_dim
        )
    }
}

pub fn fingerprint(algebra: &LieAlgebra) -> Fingerprint {
    let center = algebra.center();
    let derived = algebra.derived_algebra();
    Fingerprint {
        dim: algebra.dim(),
        lcs_dims: algebra.lower_central_series().dims(),
        derived_dims: algebra.derived_series().dims(),
        center_dim: center.dim(),
        derived_dim: derived.dim(),
        center_meets_derived_dim: center.intersect(&derived).expect("same ambient").dim(),
    }
}

/// Fingerprints of every [`FlatClass`]; panics on first use if two coincide.
pub fn reference_fingerprints() -> &'static [(FlatClass, Fingerprint)] {
    static TABLE: OnceLock<Vec<(FlatClass, Fingerprint)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let table: Vec<_> = FlatClass::ALL
            .iter()
            .map(|&c| (c, fingerprint(&c.representative())))
            .collect();
        for (i, (a, fa)) in table.iter().enumerate() {
            for (b, fb) in &table[i + 1..] {
                assert_ne!(fa, fb, "fingerprints of {a} and {b} coincide");
            }
        }
        table
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` has no parameter `{param}`")]
    UnknownParameter { family: String, param: String },
    #[error("family `{family}`: constraint {constraint} violated")]
    ConstraintViolated { family: String, constraint: String },
    #[error("bad parameter `{0}`")]
    BadParameter(String),
    #[error("entry `{name}` is not a symplectic Lie algebra: {source}")]
    InvalidEntry {
        name: String,
        source: InvalidSymplectic,
    },
    #[error("classification needs an even dimension ≤ 6, got {0}")]
    UnsupportedDimension(usize),
}

/// Matches the fingerprint of `algebra` against the reference table.
/// `Ok(None)` means no class matched.
pub fn classify_upto6(algebra: &LieAlgebra) -> Result<Option<FlatClass>, CatalogError> {
    let n = algebra.dim();
    if n % 2 == 1 || n > 6 {
        return Err(CatalogError::UnsupportedDimension(n));
    }
    let fp = fingerprint(algebra);
    Ok(reference_fingerprints()
        .iter()
        .find(|(_, f)| *f == fp)
        .map(|(c, _)| *c))
}

/// A product entry whose published value is contradicted by the defining
/// identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub left: usize,
    pub right: usize,
    pub published: Vector,
    pub corrected: Vector,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: SymplecticLieAlgebra,
    /// The table exactly as printed, when one exists.
    pub published_products: Option<ProductTensor>,
    /// The table with the errata applied.
    pub expected_products: Option<ProductTensor>,
    pub errata: Vec<Erratum>,
    pub expected_class: Option<ExpectedClass>,
    pub source: String,
}

impl CatalogEntry {
    pub fn is_flat(&self) -> bool {
        self.algebra.is_flat()
    }
}

pub const ENTRY_NAMES: [&str; 14] = [
    "zero",
    "abelian2",
    "abelian4",
    "abelian4_alt",
    "abelian6",
    "aff1",
    "r_h3_dim4",
    "r3_h3",
    "g6_1",
    "g6_2",
    "g6_2_w1",
    "g6_2_w2",
    "g6_2_w3",
    "g6_3",
];

type Bracket<'a> = (usize, usize, &'a [(usize, Scalar)]);

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn build(
    name: &str,
    prefix: &str,
    n: usize,
    brackets: &[Bracket],
    wedges: &[(usize, usize, Scalar)],
) -> Result<SymplecticLieAlgebra, CatalogError> {
    let alg = LieAlgebra::from_table(n, brackets).with_names(names(prefix, n));
    validate_symplectic(&alg, &SkewForm::from_wedges(n, wedges)).map_err(|source| {
        CatalogError::InvalidEntry {
            name: name.to_string(),
            source,
        }
    })
}

fn products(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> ProductTensor {
    ProductTensor::from_entries(n, entries)
}

/// `x1*∧x6* + x2*∧x5* + x3*∧x4*`.
fn table_form() -> Vec<(usize, usize, Scalar)> {
    vec![(0, 5, int(1)), (1, 4, int(1)), (2, 3, int(1))]
}

struct EntryDef {
    algebra: SymplecticLieAlgebra,
    published: Option<ProductTensor>,
    errata: Vec<Erratum>,
    class: Option<ExpectedClass>,
    source: &'static str,
}

impl EntryDef {
    fn new(algebra: SymplecticLieAlgebra, class: ExpectedClass, source: &'static str) -> Self {
        EntryDef {
            algebra,
            published: None,
            errata: Vec::new(),
            class: Some(class),
            source,
        }
    }

    fn published(mut self, table: ProductTensor) -> Self {
        self.published = Some(table);
        self
    }
}

/// Looks up an entry. `g6_1:<λ>` selects the form parameter, `g6_1` uses λ = 2.
pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    use ExpectedClass::{Flat, NotFlat};
    use FlatClass::*;
    if let Some(lambda) = name.strip_prefix("g6_1:") {
        let lambda = parse_scalar(lambda).map_err(|e| CatalogError::BadParameter(e.0))?;
        return g6_1(&lambda).map(|mut e| {
            e.name = name.to_string();
            e
        });
    }
    let one = || int(1);
    let def = match name {
        "zero" => EntryDef::new(SymplecticLieAlgebra::zero(), Flat(R0), "the zero algebra"),
        "abelian2" => EntryDef::new(
            build(name, "e", 2, &[], &[(0, 1, one())])?,
            Flat(R2),
            "abelian, ω(e1,e2) = 1",
        ),
        "abelian4" => EntryDef::new(
            build(name, "e", 4, &[], &[(0, 1, one()), (2, 3, one())])?,
            Flat(R4),
            "abelian, symplectic basis e1,e2,e3,e4",
        ),
        "abelian4_alt" => EntryDef::new(
            build(name, "e", 4, &[], &[(0, 3, one()), (1, 2, one())])?,
            Flat(R4),
            "abelian, symplectic basis e1,e4,e2,e3",
        ),
        "abelian6" => EntryDef::new(
            build(name, "x", 6, &[], &table_form())?,
            Flat(R6),
            "dimension-6 classification table",
        )
        .published(ProductTensor::zero(6)),
        "aff1" => EntryDef::new(
            build(name, "e", 2, &[(0, 1, &[(1, one())])], &[(0, 1, one())])?,
            NotFlat,
            "the non-abelian 2-dimensional Lie algebra, [e1,e2] = e2",
        ),
        "r_h3_dim4" => EntryDef::new(
            build(
                name,
                "x",
                4,
                &[(0, 1, &[(2, one())])],
                &[(0, 3, one()), (1, 2, one())],
            )?,
            Flat(RxH3),
            "the non-abelian flat 4-dimensional algebra with ω0",
        ),
        "r3_h3" => EntryDef::new(
            build(name, "x", 6, &[(0, 1, &[(5, one())])], &table_form())?,
            Flat(R3xH3),
            "dimension-6 classification table",
        )
        .published(products(
            6,
            &[
                (0, 0, 4, frac(1, 3)),
                (0, 1, 5, frac(1, 3)),
                (1, 0, 5, frac(-2, 3)),
            ],
        )),
        "g6_1" => return g6_1(&int(DEFAULT_LAMBDA)),
        "g6_2" | "g6_2_w1" => {
            let def = EntryDef::new(
                g6_2_with(name, &table_form())?,
                Flat(G62),
                "dimension-6 classification table",
            );
            if name == "g6_2" {
                def.published(products(
                    6,
                    &[
                        (0, 0, 3, frac(1, 3)),
                        (0, 1, 4, frac(2, 3)),
                        (0, 2, 5, frac(1, 3)),
                        (1, 0, 4, frac(-1, 3)),
                        (1, 1, 5, frac(-1, 3)),
                        (2, 0, 5, frac(-2, 3)),
                    ],
                ))
            } else {
                EntryDef {
                    source: "g6_2 with ω1 = x1*∧x6* + x2*∧x5* + x3*∧x4*",
                    ..def
                }
            }
        }
        "g6_2_w2" => EntryDef::new(
            g6_2_with(name, &[(0, 3, one()), (1, 5, one()), (2, 4, one())])?,
            Flat(G62),
            "g6_2 with ω2 = x1*∧x4* + x2*∧x6* + x3*∧x5*",
        ),
        "g6_2_w3" => EntryDef::new(
            g6_2_with(name, &[(0, 5, one()), (1, 4, one()), (2, 3, int(-1))])?,
            Flat(G62),
            "g6_2 with ω3 = x1*∧x6* + x2*∧x5* − x3*∧x4*",
        ),
        "g6_3" => g6_3()?,
        _ => return Err(CatalogError::UnknownName(name.to_string())),
    };
    Ok(finish(name, def))
}

fn finish(name: &str, def: EntryDef) -> CatalogEntry {
    let expected = def.published.as_ref().map(|published| {
        let n = published.dim();
        let mut corrected = published.clone();
        for e in &def.errata {
            corrected = ProductTensor::from_products(n, |i, j| {
                if (i, j) == (e.left, e.right) {
                    e.corrected.clone()
                } else {
                    corrected.product_basis(i, j)
                }
            });
        }
        corrected
    });
    CatalogEntry {
        name: name.to_string(),
        algebra: def.algebra,
        published_products: def.published,
        expected_products: expected,
        errata: def.errata,
        expected_class: def.class,
        source: def.source.to_string(),
    }
}

fn g6_2_with(
    name: &str,
    wedges: &[(usize, usize, Scalar)],
) -> Result<SymplecticLieAlgebra, CatalogError> {
    build(
        name,
        "x",
        6,
        &[(0, 1, &[(4, int(1))]), (0, 2, &[(5, int(1))])],
        wedges,
    )
}

/// `g6_1` with the form `x1*∧x6* + λ x2*∧x5* + (λ−1) x3*∧x4*`, nondegenerate
/// exactly when λ ∉ {0, 1}.
pub fn g6_1(lambda: &Scalar) -> Result<CatalogEntry, CatalogError> {
    let l = lambda.clone();
    let one = Scalar::one;
    let name = format!("g6_1:{}", crate::linalg::format_scalar(&l));
    let algebra = build(
        &name,
        "x",
        6,
        &[
            (0, 1, &[(3, one())]),
            (0, 2, &[(4, one())]),
            (1, 2, &[(5, one())]),
        ],
        &[(0, 5, one()), (1, 4, l.clone()), (2, 3, &l - one())],
    )?;
    let three = int(3);
    let published = products(
        6,
        &[
            (0, 1, 3, (one() - &l * int(2)) / (&three - &three * &l)),
            (0, 2, 4, (&l * int(2) - one()) / (&three * &l)),
            (1, 0, 3, (&l - int(2)) / (&three - &three * &l)),
            (1, 2, 5, (int(2) - &l) / &three),
            (2, 0, 4, (-&l - one()) / (&three * &l)),
            (2, 1, 5, (-one() - &l) / &three),
        ],
    );
    let def = EntryDef::new(
        algebra,
        ExpectedClass::Flat(FlatClass::G61),
        "dimension-6 classification table, λ-family form",
    )
    .published(published);
    Ok(finish(
        if l == int(DEFAULT_LAMBDA) {
            "g6_1"
        } else {
            &name
        },
        def,
    ))
}

fn g6_3() -> Result<EntryDef, CatalogError> {
    let one = || int(1);
    let algebra = build(
        "g6_3",
        "x",
        6,
        &[
            (0, 1, &[(3, one())]),
            (0, 2, &[(4, one())]),
            (0, 3, &[(5, one())]),
            (1, 2, &[(5, one())]),
        ],
        &[(0, 5, one()), (1, 4, frac(1, 2)), (2, 3, frac(-1, 2))],
    )?;
    let published = products(
        6,
        &[
            (0, 0, 2, frac(2, 3)),
            (0, 3, 5, frac(1, 3)),
            (1, 0, 3, int(-1)),
            (1, 2, 5, frac(1, 2)),
            (2, 0, 4, int(-1)),
            (2, 1, 5, frac(1, 6)),
            (3, 0, 5, frac(-2, 3)),
        ],
    );
    let at = |k: usize, c: Scalar| {
        let mut v = zero_vector(6);
        v[k] = c;
        v
    };
    let erratum = Erratum {
        left: 2,
        right: 1,
        published: at(5, frac(1, 6)),
        corrected: at(5, frac(-1, 2)),
        reason: "x2•x3 − x3•x2 must equal [x2,x3] = x6, and x2•x3 = x6/2",
    };
    Ok(EntryDef {
        errata: vec![erratum],
        ..EntryDef::new(
            algebra,
            ExpectedClass::Flat(FlatClass::G63),
            "dimension-6 classification table",
        )
        .published(published)
    })
}

/// Every entry under its canonical name, including the default `g6_1`.
pub fn all_entries() -> Vec<CatalogEntry> {
    ENTRY_NAMES
        .iter()
        .map(|n| get(n).expect("catalog entries are valid"))
        .collect()
}

/// Parameter names, their side constraints and where they act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub base: &'static str,
    pub params: &'static [&'static str],
    /// Parameters that must be nonzero.
    pub nonzero: &'static [&'static str],
    /// `a d − b c ≠ 0`.
    pub det_constraint: bool,
    /// A valid point that sweeps vary around.
    pub base_point: &'static [(&'static str, i64)],
    /// Classes that extensions by this family may land in.
    pub expected: &'static [FlatClass],
    pub description: &'static str,
}

pub const FAMILIES: [Family; 8] = {
    use FlatClass::*;
    [
        Family {
            name: "dim2_trivial",
            base: "abelian2",
            params: &["alpha", "beta"],
            nonzero: &[],
            det_constraint: false,
            base_point: &[],
            expected: &[R4, RxH3],
            description: "ξ = 0, b0 = α e1 + β e2",
        },
        Family {
            name: "dim2_nilpotent",
            base: "abelian2",
            params: &["a", "alpha"],
            nonzero: &["a"],
            det_constraint: false,
            base_point: &[("a", 1)],
            expected: &[RxH3],
            description: "ξ(e2) = a e1, b0 = α e1, a ≠ 0",
        },
        Family {
            name: "dim4_abelian_case1",
            base: "abelian4",
            params: &["alpha", "beta", "gamma", "delta"],
            nonzero: &[],
            det_constraint: false,
            base_point: &[],
            expected: &[R6, R3xH3],
            description: "ξ = 0, b0 = α e1 + β e2 + γ e3 + δ e4",
        },
        Family {
            name: "dim4_abelian_case2",
            base: "abelian4_alt",
            params: &["a", "b", "c", "d", "alpha", "beta"],
            nonzero: &[],
            det_constraint: true,
            base_point: &[("a", 1), ("d", 1)],
            expected: &[G61, G62, R3xH3],
            description: "ξ(e3) = a e1 + c e2, ξ(e4) = b e1 + d e2, b0 = α e1 + β e2, ad − bc ≠ 0",
        },
        Family {
            name: "dim4_abelian_case3",
            base: "abelian4_alt",
            params: &["a", "alpha", "beta", "gamma"],
            nonzero: &["a"],
            det_constraint: false,
            base_point: &[("a", 1)],
            expected: &[R3xH3, G62],
            description: "ξ(e4) = a e1, b0 = α e1 + β e2 + γ e3, a ≠ 0",
        },
        Family {
            name: "dim4_abelian_case4",
            base: "abelian4",
            params: &["a", "alpha", "beta"],
            nonzero: &["a"],
            det_constraint: false,
            base_point: &[("a", 1)],
            expected: &[G61],
            description: "ξ(e4) = a e1, b0 = α e1 + β e3, a ≠ 0",
        },
        Family {
            name: "dim4_nonabelian_family1",
            base: "r_h3_dim4",
            params: &["a", "b", "c", "d", "alpha", "beta"],
            nonzero: &[],
            det_constraint: false,
            base_point: &[],
            expected: &[R3xH3, G61, G62],
            description: "ξ(e1) = a e3 + c e4, ξ(e2) = b e3 + d e4, b0 = α e3 + β e4",
        },
        Family {
            name: "dim4_nonabelian_family2",
            base: "r_h3_dim4",
            params: &["a", "b", "c", "d", "x"],
            nonzero: &["c"],
            det_constraint: false,
            base_point: &[("c", 1)],
            expected: &[G63],
            description: "ξ(e1) = a e3, ξ(e2) = b e3 + d e4, ξ(e4) = c e3, b0 = −9cd e1 + x e3 + 9d(a+d) e4, c ≠ 0",
        },
    ]
};

pub fn family(name: &str) -> Result<&'static Family, CatalogError> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CatalogError::UnknownFamily(name.to_string()))
}

pub type Params = BTreeMap<String, Scalar>;

/// The pair of `family` at `params`; missing parameters default to the
/// family's base point (zero when unlisted).
pub fn admissible_family(
    name: &str,
    params: &Params,
) -> Result<(&'static str, AdmissiblePair), CatalogError> {
    let fam = family(name)?;
    if let Some(unknown) = params.keys().find(|k| !fam.params.contains(&k.as_str())) {
        return Err(CatalogError::UnknownParameter {
            family: name.to_string(),
            param: unknown.clone(),
        });
    }
    let p = |key: &str| -> Scalar {
        params.get(key).cloned().unwrap_or_else(|| {
            fam.base_point
                .iter()
                .find(|(k, _)| *k == key)
                .map_or_else(Scalar::zero, |(_, v)| int(*v))
        })
    };
    let violated = |constraint: &str| CatalogError::ConstraintViolated {
        family: name.to_string(),
        constraint: constraint.to_string(),
    };
    for key in fam.nonzero {
        if p(key).is_zero() {
            return Err(violated(&format!("{key} ≠ 0")));
        }
    }
    if fam.det_constraint && (p("a") * p("d") - p("b") * p("c")).is_zero() {
        return Err(violated("ad − bc ≠ 0"));
    }
    let (m, entries, b0): (usize, Vec<(usize, usize, Scalar)>, Vec<(usize, Scalar)>) = match name {
        "dim2_trivial" => (2, vec![], vec![(0, p("alpha")), (1, p("beta"))]),
        "dim2_nilpotent" => (2, vec![(0, 1, p("a"))], vec![(0, p("alpha"))]),
        "dim4_abelian_case1" => (
            4,
            vec![],
            vec![
                (0, p("alpha")),
                (1, p("beta")),
                (2, p("gamma")),
                (3, p("delta")),
            ],
        ),
        "dim4_abelian_case2" => (
            4,
            vec![
                (0, 2, p("a")),
                (0, 3, p("b")),
                (1, 2, p("c")),
                (1, 3, p("d")),
            ],
            vec![(0, p("alpha")), (1, p("beta"))],
        ),
        "dim4_abelian_case3" => (
            4,
            vec![(0, 3, p("a"))],
            vec![(0, p("alpha")), (1, p("beta")), (2, p("gamma"))],
        ),
        "dim4_abelian_case4" => (
            4,
            vec![(0, 3, p("a"))],
            vec![(0, p("alpha")), (2, p("beta"))],
        ),
        "dim4_nonabelian_family1" => (
            4,
            vec![
                (2, 0, p("a")),
                (2, 1, p("b")),
                (3, 0, p("c")),
                (3, 1, p("d")),
            ],
            vec![(2, p("alpha")), (3, p("beta"))],
        ),
        "dim4_nonabelian_family2" => {
            let (a, c, d) = (p("a"), p("c"), p("d"));
            (
                4,
                vec![
                    (2, 0, a.clone()),
                    (2, 1, p("b")),
                    (2, 3, c.clone()),
                    (3, 1, d.clone()),
                ],
                vec![
                    (0, int(-9) * &c * &d),
                    (2, p("x")),
                    (3, int(9) * &d * (a + &d)),
                ],
            )
        }
        _ => unreachable!("family table and builder agree"),
    };
    let mut xi = Matrix::zeros(m, m);
    for (i, j, v) in entries {
        xi[(i, j)] = v;
    }
    let b0 = b0.into_iter().fold(zero_vector(m), |mut acc, (i, v)| {
        acc =
            crate::linalg::add_vectors(&acc, &crate::linalg::scale_vector(&v, &unit_vector(m, i)));
        acc
    });
    Ok((fam.base, AdmissiblePair::new(xi, b0)))
}

/// `{−2, −1, −1/2, 1/2, 1, 2, 3}`.
pub fn standard_grid() -> Vec<Scalar> {
    vec![
        int(-2),
        int(-1),
        frac(-1, 2),
        frac(1, 2),
        int(1),
        int(2),
        int(3),
    ]
}

/// Values a parameter ranges over: the standard grid, plus 0 when the
/// parameter is not required to be nonzero.
pub fn parameter_values(fam: &Family, param: &str) -> Vec<Scalar> {
    let mut values = standard_grid();
    if !fam.nonzero.contains(&param) {
        values.insert(2, Scalar::zero());
    }
    values
}

/// Deterministic sweep points for a family.
///
/// Families with at most two parameters take the full product. Larger ones
/// take every value pair on every pair of parameters, with the remaining
/// parameters at the base point. Points violating a constraint are dropped.
pub fn sweep_points(fam: &Family) -> Vec<Params> {
    let base: Vec<Scalar> = fam
        .params
        .iter()
        .map(|k| {
            fam.base_point
                .iter()
                .find(|(b, _)| b == k)
                .map_or_else(Scalar::zero, |(_, v)| int(*v))
        })
        .collect();
    let values: Vec<Vec<Scalar>> = fam
        .params
        .iter()
        .map(|k| parameter_values(fam, k))
        .collect();
    let k = fam.params.len();
    let mut points: BTreeSet<Vec<Scalar>> = BTreeSet::new();
    if k <= 2 {
        let mut acc: Vec<Vec<Scalar>> = vec![vec![]];
        for vals in &values {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    vals.iter()
                        .map(move |v| [prefix.clone(), vec![v.clone()]].concat())
                })
                .collect();
        }
        points.extend(acc);
    } else {
        points.insert(base.clone());
        for i in 0..k {
            for j in i + 1..k {
                for u in &values[i] {
                    for v in &values[j] {
                        let mut point = base.clone();
                        point[i] = u.clone();
                        point[j] = v.clone();
                        points.insert(point);
                    }
                }
            }
        }
    }
    points
        .into_iter()
        .map(|point| {
            fam.params
                .iter()
                .map(|k| k.to_string())
                .zip(point)
                .collect::<Params>()
        })
        .filter(|params| admissible_family(fam.name, params).is_ok())
        .collect()
}
