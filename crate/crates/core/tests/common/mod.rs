//! Independent oracles: dense Gaussian elimination over the rationals and
//! brute-force product solvers that never call the library's solvers.

#![allow(dead_code)]

use flatsym::{LieAlgebra, Scalar, SymplecticLieAlgebra};
use num_traits::{One, Zero};

pub type Table = Vec<Vec<Vec<Scalar>>>;

pub fn q(p: i64, d: i64) -> Scalar {
    Scalar::new(p.into(), d.into())
}

/// Unique solution of `A x = b`, or `None` when the system is singular or
/// inconsistent.
pub fn solve_unique(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Scalar::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        b[r] = &b[r] * &inv;
        let pivot_row = a[r].clone();
        let pivot_b = b[r].clone();
        let nonzero: Vec<usize> = (0..cols).filter(|&k| !pivot_row[k].is_zero()).collect();
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for &k in &nonzero {
                a[i][k] = &a[i][k] - &f * &pivot_row[k];
            }
            b[i] = &b[i] - &f * &pivot_b;
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != cols || b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = b[row].clone();
    }
    Some(x)
}

fn omega(s: &SymplecticLieAlgebra, i: usize, j: usize) -> Scalar {
    s.form().matrix()[(i, j)].clone()
}

fn structure(alg: &LieAlgebra) -> Table {
    let n = alg.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![Scalar::zero(); n]
                    } else {
                        alg.bracket_basis(i, j)
                    }
                })
                .collect()
        })
        .collect()
}

/// Solves for all `n³` coefficients `c[i][j][k]` of `e_i ⋆ e_j = Σ c e_k` at
/// once from `ω(e_i ⋆ e_j, e_w) = rhs(i, j, w)`.
fn solve_products(
    s: &SymplecticLieAlgebra,
    rhs: impl Fn(usize, usize, usize) -> Scalar,
) -> Option<Table> {
    let n = s.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let size = n * n * n;
    let mut a = Vec::with_capacity(size);
    let mut b = Vec::with_capacity(size);
    for i in 0..n {
        for j in 0..n {
            for w in 0..n {
                let mut row = vec![Scalar::zero(); size];
                for k in 0..n {
                    row[idx(i, j, k)] = omega(s, k, w);
                }
                a.push(row);
                b.push(rhs(i, j, w));
            }
        }
    }
    let x = solve_unique(a, b)?;
    Some(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| x[idx(i, j, k)].clone()).collect())
                    .collect()
            })
            .collect(),
    )
}

fn pair_with(s: &SymplecticLieAlgebra, v: &[Scalar], w: usize) -> Scalar {
    (0..v.len()).fold(Scalar::zero(), |acc, k| acc + &v[k] * omega(s, k, w))
}

/// `ω(u•v, w) = (ω([u,v], w) + ω([u,w], v)) / 3`.
pub fn brute_canonical(s: &SymplecticLieAlgebra) -> Option<Table> {
    let c = structure(s.algebra());
    let third = q(1, 3);
    solve_products(s, |i, j, w| {
        &third * (pair_with(s, &c[i][j], w) + pair_with(s, &c[i][w], j))
    })
}

/// `ω(u ∘ v, w) = ω(v, [w, u])`.
pub fn brute_natural(s: &SymplecticLieAlgebra) -> Option<Table> {
    let c = structure(s.algebra());
    let n = s.dim();
    solve_products(s, |i, j, w| {
        (0..n).fold(Scalar::zero(), |acc, k| acc + omega(s, j, k) * &c[w][i][k])
    })
}

type Mat = Vec<Vec<Scalar>>;

/// `L_i` as a matrix: column `j` is `e_i ⋆ e_j`.
fn left(t: &Table, i: usize) -> Mat {
    let n = t.len();
    (0..n)
        .map(|r| (0..n).map(|col| t[i][col][r].clone()).collect())
        .collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Basis pairs `(i, j)` where `L_{[e_i,e_j]} ≠ [L_i, L_j]`.
pub fn curvature_defects(alg: &LieAlgebra, t: &Table) -> Vec<(usize, usize)> {
    let n = t.len();
    let c = structure(alg);
    let ls: Vec<Mat> = (0..n).map(|i| left(t, i)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (ab, ba) = (mul(&ls[i], &ls[j]), mul(&ls[j], &ls[i]));
            let ok = (0..n).all(|r| {
                (0..n).all(|col| {
                    let lhs =
                        (0..n).fold(Scalar::zero(), |acc, k| acc + &c[i][j][k] * &ls[k][r][col]);
                    lhs == &ab[r][col] - &ba[r][col]
                })
            });
            if !ok {
                out.push((i, j));
            }
        }
    }
    out
}

/// Linearly independent rows spanning the same space as `vs`.
pub fn row_basis(vs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = vs.to_vec();
    let mut out = Vec::new();
    while let Some(v) = rows.pop() {
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        for r in rows.iter_mut() {
            if !r[c].is_zero() {
                let f = &r[c] / &v[c];
                for k in 0..r.len() {
                    r[k] = &r[k] - &f * &v[k];
                }
            }
        }
        out.push(v);
    }
    out
}

fn brackets_of(alg: &LieAlgebra, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let all: Vec<Vec<Scalar>> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| alg.bracket(x, y)))
        .collect();
    row_basis(&all)
}

fn units(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Dimensions of `g ⊃ [g,g] ⊃ [g,[g,g]] ⊃ …` down to the first repeat.
pub fn lcs_dims(alg: &LieAlgebra) -> Vec<usize> {
    let g = units(alg.dim());
    let mut cur = g.clone();
    let mut dims = vec![cur.len()];
    loop {
        let next = brackets_of(alg, &g, &cur);
        if next.len() == cur.len() {
            return dims;
        }
        dims.push(next.len());
        if next.is_empty() {
            return dims;
        }
        cur = next;
    }
}

/// Center dimension from the `n² × n` system `[e_i, x] = 0`.
pub fn center_dim(alg: &LieAlgebra) -> usize {
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .flat_map(|i| {
            (0..n).map(move |k| (0..n).map(|j| alg.structure_constant(i, j, k)).collect())
        })
        .collect();
    n - row_basis(&rows).len()
}
