//! Structural facts about a symplectic Lie algebra and its canonical product.
//!
//! Claims that hold on every symplectic Lie algebra are always checked.
//! Claims that need flatness are reported as not applicable on non-flat
//! input instead of failing.

use std::fmt;

use num_traits::Zero;

use super::{ProductTensor, SubspaceKind, SymplecticLieAlgebra};
use crate::linalg::{frac, is_zero_vector, kernel, unit_vector, Matrix, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Holds,
    Fails(String),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    /// Stable identifier, e.g. `center_is_products_perp`.
    pub name: &'static str,
    pub statement: &'static str,
    pub requires_flat: bool,
    pub status: ClaimStatus,
}

impl Claim {
    pub fn holds(&self) -> bool {
        self.status == ClaimStatus::Holds
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, ClaimStatus::Fails(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub dim: usize,
    pub flat: bool,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub center_dim: usize,
    pub center_kind: SubspaceKind,
    pub derived_dim: usize,
    pub derived_kind: SubspaceKind,
    pub unimodular: bool,
    pub claims: Vec<Claim>,
}

impl StructuralReport {
    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// No claim fails (not-applicable claims are fine).
    pub fn all_hold(&self) -> bool {
        !self.claims.iter().any(Claim::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.failed())
    }
}

impl fmt::Display for StructuralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension: {}", self.dim)?;
        writeln!(f, "flat: {}", if self.flat { "yes" } else { "no" })?;
        match self.nilpotency_class {
            Some(c) => writeln!(f, "nilpotency class: {c}")?,
            None => writeln!(f, "nilpotency class: not nilpotent")?,
        }
        writeln!(f, "center: {} (dim {})", self.center_kind, self.center_dim)?;
        writeln!(
            f,
            "derived ideal: {} (dim {})",
            self.derived_kind, self.derived_dim
        )?;
        writeln!(
            f,
            "unimodular: {}",
            if self.unimodular { "yes" } else { "no" }
        )?;
        for claim in &self.claims {
            let status = match &claim.status {
                ClaimStatus::Holds => "holds".to_owned(),
                ClaimStatus::Fails(w) => format!("FAILS ({w})"),
                ClaimStatus::NotApplicable(why) => format!("n/a ({why})"),
            };
            writeln!(f, "  {:<44} {}", claim.name, status)?;
        }
        Ok(())
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> ClaimStatus {
    if ok {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Fails(witness())
    }
}

fn subset(a: &Subspace, b: &Subspace) -> bool {
    b.contains_subspace(a).expect("same ambient")
}

/// Span of `x·y` for `x` in `a`, `y` in `b`.
fn products(p: &ProductTensor, a: &Subspace, b: &Subspace) -> Subspace {
    let vectors: Vec<Vector> = a
        .basis_vectors()
        .iter()
        .flat_map(|x| b.basis_vectors().into_iter().map(move |y| p.product(x, &y)))
        .filter(|v| !is_zero_vector(v))
        .collect();
    Subspace::span(p.dim(), &vectors)
}

impl SymplecticLieAlgebra {
    /// `{u : ad_u + ad_u^* = 0}`.
    pub fn anti_selfadjoint_ad(&self) -> Subspace {
        let n = self.dim();
        let maps: Vec<Matrix> = (0..n)
            .map(|i| {
                let ad = self.algebra().ad_basis(i);
                &ad + &self.adjoint(&ad)
            })
            .collect();
        kernel(&Matrix::from_fn(n * n, n, |row, i| {
            maps[i][(row / n, row % n)].clone()
        }))
    }

    pub fn structural_report(&self) -> StructuralReport {
        let n = self.dim();
        let alg = self.algebra();
        let p = self.canonical_product();
        let flat = super::curvature(&p, alg)
            .map(|r| r.is_flat())
            .unwrap_or(false);
        let full = Subspace::full(n);
        let center = alg.center();
        let derived = alg.derived_algebra();
        let derived_perp = self.perp(&derived);
        let (n_left, n_right, gg) = (p.left_kernel(), p.right_kernel(), p.span_of_products());
        let lcs = alg.lower_central_series();
        let h = self.h_vector();
        let e = |i| unit_vector(n, i);
        let abelian = alg.is_abelian();

        let mut claims = Vec::new();
        let mut push = |name, statement, requires_flat, status| {
            claims.push(Claim {
                name,
                statement,
                requires_flat,
                status,
            })
        };

        // Always-true identities of the canonical product.
        let lie_admissible = p.lie_admissibility_defect(alg);
        push(
            "lie_admissible",
            "u•v − v•u = [u,v]",
            false,
            check(lie_admissible.is_none(), || {
                format!("{:?}", lie_admissible.map(|d| d.pair))
            }),
        );
        let skew_fail = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| {
                !(self.pair(&p.product_basis(i, j), &e(k))
                    + self.pair(&e(j), &p.product_basis(i, k)))
                .is_zero()
            });
        push(
            "left_mult_skew",
            "ω(u•v, w) + ω(v, u•w) = 0",
            false,
            check(skew_fail.is_none(), || {
                format!("basis triple {skew_fail:?}")
            }),
        );
        let third = frac(1, 3);
        let formula_fail = (0..n).find(|&i| {
            let ad = alg.ad_basis(i);
            p.left_mult_basis(i) != (&ad - &self.adjoint(&ad)).scale(&third)
        });
        push(
            "left_mult_formula",
            "L_u = (ad_u − ad_u^*)/3",
            false,
            check(formula_fail.is_none(), || {
                format!("basis vector {formula_fail:?}")
            }),
        );
        let traces = alg.trace_character();
        let trace_fail = (0..n).find(|&i| p.right_mult_basis(i).trace() != -traces[i].clone());
        push(
            "trace_right_mult",
            "tr(R_u) = −tr(ad_u)",
            false,
            check(trace_fail.is_none(), || {
                format!("basis vector {trace_fail:?}")
            }),
        );

        // Equalities among distinguished subspaces.
        let anti = self.anti_selfadjoint_ad();
        push(
            "derived_perp_is_anti_selfadjoint_ad",
            "[g,g]^⊥ = {u : ad_u + ad_u^* = 0}",
            false,
            check(derived_perp == anti, || format!("{derived_perp} vs {anti}")),
        );
        let gg_perp = self.perp(&gg);
        push(
            "center_is_products_perp",
            "Z(g) = (g•g)^⊥",
            false,
            check(center == gg_perp, || format!("{center} vs {gg_perp}")),
        );
        let lr = n_left.intersect(&n_right).expect("same ambient");
        push(
            "center_is_left_right_kernel",
            "Z(g) = N^ℓ ∩ N^r",
            false,
            check(center == lr, || format!("{center} vs {lr}")),
        );
        let ld = n_left.intersect(&derived_perp).expect("same ambient");
        push(
            "center_is_left_kernel_meet_derived_perp",
            "Z(g) = N^ℓ ∩ [g,g]^⊥",
            false,
            check(center == ld, || format!("{center} vs {ld}")),
        );

        // Lie ideals I and their orthogonals.
        let mut ideals: Vec<Subspace> = vec![center.clone(), derived.clone()];
        ideals.extend(lcs.terms.iter().cloned());
        ideals.extend(alg.derived_series().terms);
        ideals.dedup();
        let ideal_fail = ideals.iter().find(|ideal| {
            let perp = self.perp(ideal);
            !(subset(&products(&p, &perp, ideal), ideal)
                && subset(&products(&p, ideal, &perp), ideal)
                && subset(&products(&p, &perp, &perp), &perp)
                && alg.is_subalgebra(&perp))
        });
        push(
            "ideal_perp_products",
            "I^⊥•I ⊆ I, I•I^⊥ ⊆ I, I^⊥•I^⊥ ⊆ I^⊥ for Lie ideals I",
            false,
            check(ideal_fail.is_none(), || {
                format!("ideal {}", ideal_fail.expect("failure"))
            }),
        );

        let center_perp = self.perp(&center);
        if subset(&center_perp, &center) {
            let associative = (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| is_zero_vector(&p.associator(&e(i), &e(j), &e(k)))))
            });
            let two_step = lcs.nilpotency_class.is_some_and(|c| c <= 2);
            push(
                "lagrangian_center_criterion",
                "Z^⊥ ⊆ Z implies flat, • associative, at most 2-step nilpotent",
                false,
                check(flat && associative && two_step, || {
                    format!("flat={flat} associative={associative} two_step={two_step}")
                }),
            );
        } else {
            push(
                "lagrangian_center_criterion",
                "Z^⊥ ⊆ Z implies flat, • associative, at most 2-step nilpotent",
                false,
                ClaimStatus::NotApplicable("Z^⊥ is not contained in Z".into()),
            );
        }

        // Consequences of flatness.
        let center_kind = self.classify_subspace(&center);
        let derived_kind = self.classify_subspace(&derived);
        let unimodular = alg.is_unimodular();
        let complete = (0..n).all(|i| p.right_mult_basis(i).trace().is_zero());
        let mut flat_claim = |name, statement, status: ClaimStatus, needs_nonabelian: bool| {
            let status = if !flat {
                ClaimStatus::NotApplicable("not flat".into())
            } else if matches!(status, ClaimStatus::NotApplicable(_)) {
                status
            } else if needs_nonabelian && abelian {
                ClaimStatus::NotApplicable("abelian: [g,g] = 0 and Z = g are nondegenerate".into())
            } else {
                status
            };
            claims.push(Claim {
                name,
                statement,
                requires_flat: true,
                status,
            });
        };
        flat_claim(
            "nilpotent",
            "g is nilpotent",
            check(lcs.nilpotency_class.is_some(), || {
                "lower central series stalls".into()
            }),
            false,
        );
        let center_status = if n == 0 {
            ClaimStatus::NotApplicable("zero algebra".into())
        } else {
            check(!center.is_zero(), || "trivial center".into())
        };
        flat_claim("center_nonzero", "Z(g) ≠ 0", center_status, false);
        flat_claim(
            "center_degenerate",
            "Z(g) is degenerate",
            check(center_kind.is_degenerate(), || center_kind.to_string()),
            true,
        );
        flat_claim(
            "derived_degenerate",
            "[g,g] is degenerate",
            check(derived_kind.is_degenerate(), || derived_kind.to_string()),
            true,
        );
        flat_claim(
            "unimodular",
            "H = 0",
            check(is_zero_vector(&h), || format!("H = {h:?}")),
            false,
        );
        let derived_meet = derived.intersect(&derived_perp).expect("same ambient");
        flat_claim(
            "h_in_derived_meet_perp",
            "H ∈ [g,g] ∩ [g,g]^⊥",
            check(derived_meet.contains(&h).expect("same ambient"), || {
                format!("H = {h:?}")
            }),
            false,
        );
        let dp = derived_perp.basis_vectors();
        let prod_fail = dp
            .iter()
            .flat_map(|u| dp.iter().map(move |v| (u, v)))
            .any(|(u, v)| !is_zero_vector(&p.product(u, v)));
        flat_claim(
            "derived_perp_products_vanish",
            "u•v = 0 for u, v ∈ [g,g]^⊥",
            check(!prod_fail, || "nonzero product".into()),
            false,
        );
        let ad_fail = dp
            .iter()
            .flat_map(|u| dp.iter().map(move |v| (u, v)))
            .any(|(u, v)| !(&alg.ad(u) * &alg.ad(v)).is_zero());
        flat_claim(
            "derived_perp_ad_compositions_vanish",
            "ad_u ∘ ad_v = 0 for u, v ∈ [g,g]^⊥",
            check(!ad_fail, || "nonzero composition".into()),
            false,
        );
        let two_sided = subset(&products(&p, &full, &n_left), &n_left)
            && subset(&products(&p, &n_left, &full), &n_left);
        flat_claim(
            "left_kernel_two_sided_ideal",
            "N^ℓ is a two-sided ideal",
            check(two_sided && alg.is_ideal(&n_left), || {
                format!("N^ℓ = {n_left}")
            }),
            false,
        );
        let g_dp = alg.bracket_subspaces(&full, &derived_perp);
        flat_claim(
            "bracket_with_derived_perp_in_left_kernel",
            "[g, [g,g]^⊥] ⊆ N^ℓ",
            check(subset(&g_dp, &n_left), || format!("{g_dp} ⊄ {n_left}")),
            false,
        );
        let solvable = alg.derived_series().solvable;
        flat_claim(
            "complete_iff_unimodular",
            "tr(R_u) = 0 for all u iff unimodular, and then solvable",
            check(complete == unimodular && (!complete || solvable), || {
                format!("complete={complete} unimodular={unimodular} solvable={solvable}")
            }),
            false,
        );

        StructuralReport {
            dim: n,
            flat,
            abelian,
            nilpotency_class: lcs.nilpotency_class,
            center_dim: center.dim(),
            center_kind,
            derived_dim: derived.dim(),
            derived_kind,
            unimodular,
            claims,
        }
    }
}
