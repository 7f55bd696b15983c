//! JSON documents for symplectic Lie algebras and admissible pairs.
//!
//! Brackets and form entries are sparse lists keyed by basis names with
//! `u` before `v` in basis order; omitted pairs are zero. Rationals are
//! strings `p` or `p/q`. Export is canonical: entries in basis order,
//! rationals in lowest terms, so export → parse → export is byte-identical.

use std::collections::HashMap;
use std::path::Path;

use indexmap::IndexMap;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extension::AdmissiblePair;
use crate::lie::LieAlgebra;
use crate::linalg::{format_scalar, parse_scalar, zero_vector, Matrix, Scalar, Vector};
use crate::symplectic::{validate_symplectic, InvalidSymplectic, SkewForm, SymplecticLieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub u: String,
    pub v: String,
    pub value: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub u: String,
    pub v: String,
    pub value: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub omega: Vec<FormEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    /// Row-major; entry `[i][j]` is the `b_i` coefficient of `ξ(b_j)`.
    pub xi: Vec<Vec<String>>,
    pub b0: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("not a symplectic Lie algebra: {0}")]
    NotSymplectic(InvalidSymplectic),
}

impl DocumentError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn scalar_field(field: &str, s: &str) -> Result<Scalar, DocumentError> {
    parse_scalar(s).map_err(|e| DocumentError::field(field, format!("bad rational: {}", e.0)))
}

pub fn read_file(path: &Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path).map_err(|e| DocumentError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), DocumentError> {
    std::fs::write(path, text).map_err(|e| DocumentError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, DocumentError> {
        Self::parse(&read_file(path)?)
    }

    /// Canonical document for `s`.
    pub fn from_algebra(s: &SymplecticLieAlgebra, meta: Option<Meta>) -> Self {
        let names = s.algebra().basis_names();
        let n = s.dim();
        let mut brackets = Vec::new();
        for (i, j, v) in s.algebra().nonzero_brackets() {
            let value = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (names[k].clone(), format_scalar(c)))
                .collect();
            brackets.push(BracketEntry {
                u: names[i].clone(),
                v: names[j].clone(),
                value,
            });
        }
        let mut omega = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = s.form().pair_basis(i, j);
                if !c.is_zero() {
                    omega.push(FormEntry {
                        u: names[i].clone(),
                        v: names[j].clone(),
                        value: format_scalar(c),
                    });
                }
            }
        }
        AlgebraDocument {
            dim: n,
            basis: names.to_vec(),
            brackets,
            omega,
            meta,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }

    /// Structural validation followed by the symplectic checks.
    pub fn to_algebra(&self) -> Result<SymplecticLieAlgebra, DocumentError> {
        let (algebra, form) = self.to_parts()?;
        validate_symplectic(&algebra, &form).map_err(DocumentError::NotSymplectic)
    }

    /// Brackets and form, checked for well-formedness only.
    pub fn to_parts(&self) -> Result<(LieAlgebra, SkewForm), DocumentError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(DocumentError::field(
                "basis",
                format!("{} names for dim {}", self.basis.len(), n),
            ));
        }
        let mut index = HashMap::new();
        for (k, name) in self.basis.iter().enumerate() {
            if name.is_empty() {
                return Err(DocumentError::field(format!("basis[{k}]"), "empty name"));
            }
            if index.insert(name.as_str(), k).is_some() {
                return Err(DocumentError::field(
                    format!("basis[{k}]"),
                    format!("duplicate name `{name}`"),
                ));
            }
        }
        let resolve = |field: String, name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| DocumentError::field(field, format!("unknown basis name `{name}`")))
        };
        let ordered = |field: String, u: &str, v: &str| -> Result<(usize, usize), DocumentError> {
            let (i, j) = (
                resolve(format!("{field}.u"), u)?,
                resolve(format!("{field}.v"), v)?,
            );
            if i >= j {
                return Err(DocumentError::field(
                    field,
                    format!("`{u}` must come before `{v}` in the basis"),
                ));
            }
            Ok((i, j))
        };

        let mut algebra = LieAlgebra::abelian_named(self.basis.clone());
        let mut seen = HashMap::new();
        for (k, entry) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{k}]");
            let (i, j) = ordered(field.clone(), &entry.u, &entry.v)?;
            if seen.insert((i, j), k).is_some() {
                return Err(DocumentError::field(
                    field,
                    format!("repeated pair ({}, {})", entry.u, entry.v),
                ));
            }
            let mut value: Vector = zero_vector(n);
            for (name, c) in &entry.value {
                let slot = resolve(format!("{field}.value"), name)?;
                value[slot] = scalar_field(&format!("{field}.value.{name}"), c)?;
            }
            algebra = algebra
                .with_bracket(i, j, value)
                .map_err(|e| DocumentError::field(field, e.to_string()))?;
        }

        let mut omega = Matrix::zeros(n, n);
        seen.clear();
        for (k, entry) in self.omega.iter().enumerate() {
            let field = format!("omega[{k}]");
            let (i, j) = ordered(field.clone(), &entry.u, &entry.v)?;
            if seen.insert((i, j), k).is_some() {
                return Err(DocumentError::field(
                    field,
                    format!("repeated pair ({}, {})", entry.u, entry.v),
                ));
            }
            let c = scalar_field(&format!("{field}.value"), &entry.value)?;
            omega[(j, i)] = -c.clone();
            omega[(i, j)] = c;
        }
        Ok((algebra, SkewForm::new(omega).expect("skew by construction")))
    }
}

impl PairDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_pair(pair: &AdmissiblePair) -> Self {
        let m = pair.dim();
        PairDocument {
            xi: (0..m)
                .map(|i| (0..m).map(|j| format_scalar(&pair.xi[(i, j)])).collect())
                .collect(),
            b0: pair.b0.iter().map(format_scalar).collect(),
        }
    }

    pub fn to_pair(&self) -> Result<AdmissiblePair, DocumentError> {
        let m = self.b0.len();
        if self.xi.len() != m {
            return Err(DocumentError::field(
                "xi",
                format!("{} rows, b0 has {} entries", self.xi.len(), m),
            ));
        }
        let mut xi = Matrix::zeros(m, m);
        for (i, row) in self.xi.iter().enumerate() {
            if row.len() != m {
                return Err(DocumentError::field(
                    format!("xi[{i}]"),
                    format!("{} entries, expected {m}", row.len()),
                ));
            }
            for (j, c) in row.iter().enumerate() {
                xi[(i, j)] = scalar_field(&format!("xi[{i}][{j}]"), c)?;
            }
        }
        let b0 = self
            .b0
            .iter()
            .enumerate()
            .map(|(i, c)| scalar_field(&format!("b0[{i}]"), c))
            .collect::<Result<_, _>>()?;
        Ok(AdmissiblePair::new(xi, b0))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }
}

/// Parses a compact matrix such as `[[0,1/2],[0,0]]` (quotes optional).
pub fn parse_matrix(text: &str) -> Result<Matrix, DocumentError> {
    let compact: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '"')
        .collect();
    let bad = || DocumentError::field("xi", format!("expected [[..],[..]], got `{text}`"));
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    if inner.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let rows = inner
        .split("],[")
        .enumerate()
        .map(|(i, row)| {
            row.split(',')
                .enumerate()
                .map(|(j, c)| scalar_field(&format!("xi[{i}][{j}]"), c))
                .collect()
        })
        .collect::<Result<Vec<Vector>, _>>()?;
    let m = rows.len();
    if let Some(i) = rows.iter().position(|r| r.len() != m) {
        return Err(DocumentError::field(
            format!("xi[{i}]"),
            format!("{} entries, expected {m}", rows[i].len()),
        ));
    }
    Ok(Matrix::from_rows(rows))
}

/// Parses `v1,v2,...`; the empty string is the empty vector.
pub fn parse_vector(text: &str) -> Result<Vector, DocumentError> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(i, c)| scalar_field(&format!("b0[{i}]"), c.trim().trim_matches('"')))
        .collect()
}
