//! Acceptance criteria. Runs without the test harness and prints one line per
//! criterion; exits nonzero if any criterion fails.
//!
//! Tolerances: every comparison is exact rational equality (tolerance 0).
//! Elapsed time is printed per criterion for information and not gated.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use flatsym::catalog::{self, classify_upto6, CatalogEntry, FlatClass, Params};
use flatsym::extension::{
    self, check_admissible, double_extend, inverse_double_extend, AdmissiblePair, ExtensionError,
};
use flatsym::linalg::{int, Matrix};
use flatsym::symplectic::{SymplecticLieAlgebra, SymplecticViolation};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct SweepRecord {
    family: &'static str,
    params: Params,
    base_dim: usize,
    failure: Option<String>,
    class: Option<FlatClass>,
}

fn run_sweep() -> Vec<SweepRecord> {
    let mut records = Vec::new();
    for fam in &catalog::FAMILIES {
        let base = catalog::get(fam.base)
            .expect("family bases are catalog entries")
            .algebra;
        for params in catalog::sweep_points(fam) {
            let (_, pair) = catalog::admissible_family(fam.name, &params)
                .expect("sweep points satisfy constraints");
            let mut record = SweepRecord {
                family: fam.name,
                params,
                base_dim: base.dim(),
                failure: None,
                class: None,
            };
            let report = check_admissible(&base, &pair);
            if !report.is_admissible() {
                record.failure = Some(format!("not admissible: {}", report.failed().join(",")));
            } else {
                match double_extend(&base, &pair) {
                    Err(e) => record.failure = Some(e.to_string()),
                    Ok((g, _)) if !g.is_flat() => {
                        record.failure = Some("extension not flat".into())
                    }
                    Ok((g, _)) if !g.algebra().is_nilpotent() => {
                        record.failure = Some("extension not nilpotent".into())
                    }
                    Ok((g, _)) => {
                        record.class = classify_upto6(g.algebra()).expect("dimension ≤ 6")
                    }
                }
            }
            records.push(record);
        }
    }
    records
}

fn show_params(p: &Params) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(",")
}

fn entry(name: &str) -> CatalogEntry {
    catalog::get(name).expect("catalog entry")
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for name in ["abelian6", "r3_h3", "g6_1", "g6_2", "g6_3"] {
        let e = entry(name);
        let computed = e.algebra.canonical_product();
        let published = e.published_products.as_ref().expect("table entry");
        let expected = e.expected_products.as_ref().expect("table entry");
        if &computed != expected {
            pass = false;
            notes.push(format!("{name}: product differs from table"));
            continue;
        }
        // The only differences from the printed table are the recorded errata,
        // and each printed value breaks u•v − v•u = [u,v].
        let n = computed.dim();
        let differing: BTreeSet<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| computed.product_basis(i, j) != published.product_basis(i, j))
            .collect();
        let listed: BTreeSet<(usize, usize)> = e.errata.iter().map(|x| (x.left, x.right)).collect();
        if differing != listed
            || (!listed.is_empty()
                && published
                    .lie_admissibility_defect(e.algebra.algebra())
                    .is_none())
        {
            pass = false;
            notes.push(format!("{name}: unexplained differences {differing:?}"));
        }
        for x in &e.errata {
            let names = e.algebra.algebra().basis_names();
            notes.push(format!(
                "{name}: table {}•{} printed as {:?}, computed {:?}, printed value breaks Lie-admissibility",
                names[x.left],
                names[x.right],
                x.published.iter().map(ToString::to_string).collect::<Vec<_>>(),
                x.corrected.iter().map(ToString::to_string).collect::<Vec<_>>()
            ));
        }
    }
    // The λ-dependent row at further grid values of λ.
    for l in catalog::standard_grid() {
        if l == int(1) {
            continue;
        }
        let e = catalog::g6_1(&l).expect("λ ∉ {0,1}");
        if &e.algebra.canonical_product() != e.expected_products.as_ref().unwrap() {
            pass = false;
            notes.push(format!("g6_1 λ={l}: mismatch"));
        }
    }
    notes.push("g6_1 row also exact at λ ∈ {-2,-1,-1/2,1/2,2,3}".into());
    outcome(pass, notes.join("; "))
}

fn criterion_2() -> Outcome {
    let flat = [
        "abelian6",
        "r3_h3",
        "g6_1",
        "g6_2",
        "g6_3",
        "r_h3_dim4",
        "g6_2_w1",
        "g6_2_w2",
        "g6_2_w3",
    ];
    let not_flat: Vec<&str> = flat
        .iter()
        .copied()
        .filter(|n| !entry(n).algebra.is_flat())
        .collect();
    let aff1 = entry("aff1").algebra.is_flat();
    outcome(
        not_flat.is_empty() && !aff1,
        format!(
            "{} entries flat, non-flat among them: {:?}; aff1 is_flat = {aff1}",
            flat.len(),
            not_flat
        ),
    )
}

const THEOREM_SUITE: [&str; 13] = [
    "nilpotent",
    "center_nonzero",
    "center_degenerate",
    "derived_degenerate",
    "unimodular",
    "center_is_left_right_kernel",
    "center_is_products_perp",
    "left_kernel_two_sided_ideal",
    "bracket_with_derived_perp_in_left_kernel",
    "derived_perp_products_vanish",
    "derived_perp_ad_compositions_vanish",
    "h_in_derived_meet_perp",
    "ideal_perp_products",
];

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut scoped = BTreeSet::new();
    let mut checked = 0;
    for e in catalog::all_entries()
        .into_iter()
        .filter(CatalogEntry::is_flat)
    {
        let report = e.algebra.structural_report();
        checked += 1;
        for name in THEOREM_SUITE {
            let claim = report.claim(name).expect("claim present");
            if claim.holds() {
                continue;
            }
            // Degeneracy claims are vacuous-false on abelian algebras and
            // "Z ≠ 0" on the zero algebra; they are reported, not counted.
            let exempt = (report.abelian
                && matches!(name, "center_degenerate" | "derived_degenerate"))
                || (report.dim == 0 && name == "center_nonzero");
            if exempt && !claim.failed() {
                scoped.insert(e.name.clone());
            } else {
                failures.push(format!("{}:{name}", e.name));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} flat entries x {} claims; failures {failures:?}; degeneracy claims not applicable on abelian entries {scoped:?}",
            THEOREM_SUITE.len()
        ),
    )
}

fn criterion_4(records: &[SweepRecord]) -> Outcome {
    let mut per_family: BTreeMap<&str, usize> = BTreeMap::new();
    for r in records {
        *per_family.entry(r.family).or_default() += 1;
    }
    let failures: Vec<String> = records
        .iter()
        .filter_map(|r| {
            r.failure
                .as_ref()
                .map(|f| format!("{}[{}]: {f}", r.family, show_params(&r.params)))
        })
        .take(5)
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "{} grid points {per_family:?}; failures {failures:?}",
            records.len()
        ),
    )
}

fn criterion_5(records: &[SweepRecord]) -> Outcome {
    let mut hits: BTreeMap<FlatClass, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for r in records
        .iter()
        .filter(|r| r.base_dim == 4 && r.failure.is_none())
    {
        let expected = catalog::family(r.family).unwrap().expected;
        match r.class {
            Some(c) if FlatClass::DIM6.contains(&c) => {
                *hits.entry(c).or_default() += 1;
                if !expected.contains(&c) {
                    bad.push(format!(
                        "{}[{}] -> {c}, outside the branch's set",
                        r.family,
                        show_params(&r.params)
                    ));
                }
            }
            other => bad.push(format!(
                "{}[{}] -> {other:?}",
                r.family,
                show_params(&r.params)
            )),
        }
    }
    let missing: Vec<FlatClass> = FlatClass::DIM6
        .iter()
        .copied()
        .filter(|c| !hits.contains_key(c))
        .collect();
    let counts: Vec<String> = hits.iter().map(|(c, k)| format!("{c}: {k}")).collect();
    outcome(
        bad.is_empty() && missing.is_empty(),
        format!(
            "hits [{}]; missing {missing:?}; misclassified {:?}",
            counts.join(", "),
            bad.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn criterion_6(records: &[SweepRecord]) -> Outcome {
    let dim4: Vec<&SweepRecord> = records.iter().filter(|r| r.base_dim == 2).collect();
    let nonabelian: Vec<&&SweepRecord> = dim4
        .iter()
        .filter(|r| r.class != Some(FlatClass::R4))
        .collect();
    let wrong: Vec<String> = nonabelian
        .iter()
        .filter(|r| r.class != Some(FlatClass::RxH3))
        .map(|r| format!("{}[{}] -> {:?}", r.family, show_params(&r.params), r.class))
        .collect();
    outcome(
        wrong.is_empty() && !nonabelian.is_empty(),
        format!(
            "{} dim-4 extensions, {} non-abelian, all R x h3 unless listed: {wrong:?}",
            dim4.len(),
            nonabelian.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut checked = 0;
    for e in catalog::all_entries()
        .into_iter()
        .filter(|e| e.is_flat() && e.algebra.dim() > 0)
    {
        checked += 1;
        let s = &e.algebra;
        let result = inverse_double_extend(s, None).and_then(|d| {
            let (rebuilt, _) = double_extend(&d.base, &d.pair)?;
            let names = rebuilt.algebra().basis_names().to_vec();
            let moved = s
                .change_basis(&d.witness.basis, names)
                .expect("witness basis invertible");
            Ok(moved.algebra().same_structure(rebuilt.algebra()) && moved.form() == rebuilt.form())
        });
        let tower = extension::reduction_tower(s).map(|steps| {
            let reaches_zero =
                steps.last().is_some_and(|st| st.base.dim() == 0) && steps.len() == s.dim() / 2;
            let (pairs, basis) = extension::tower_replay(&steps);
            let replay = extension::extension_tower(&pairs).map(|r| {
                let names = r.algebra().basis_names().to_vec();
                s.change_basis(&basis, names)
                    .is_ok_and(|t| t.same_structure(&r))
            });
            reaches_zero && replay == Ok(true)
        });
        if result != Ok(true) || tower != Ok(true) {
            pass = false;
            notes.push(format!(
                "{}: round trip {result:?}, tower {tower:?}",
                e.name
            ));
        }
    }
    notes.insert(0, format!("{checked} flat entries: one-step round trip exact and full tower to dim 0 replays exactly"));
    outcome(pass, notes.join("; "))
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    let abelian2 = entry("abelian2").algebra;
    let bad_pair = AdmissiblePair::new(Matrix::from_i64(&[&[0, 1], &[0, 0]]), vec![int(0), int(1)]);
    let failed = check_admissible(&abelian2, &bad_pair).failed();
    let eq2 = failed == vec!["eq2"]
        && matches!(double_extend(&abelian2, &bad_pair), Err(ExtensionError::NotAdmissible(ref r)) if r.failed() == vec!["eq2"])
        && !extension::candidate_is_left_symmetric(&abelian2, &bad_pair);
    notes.push(format!("β≠0 pair fails exactly {failed:?}"));

    let mut degenerate = true;
    for l in ["0", "1"] {
        let ok = match catalog::get(&format!("g6_1:{l}")) {
            Err(catalog::CatalogError::InvalidEntry { source, .. }) => {
                source.0.contains(&SymplecticViolation::Degenerate)
            }
            _ => false,
        };
        degenerate &= ok;
        notes.push(format!("g6_1 λ={l}: degenerate form rejected = {ok}"));
    }

    let aff1 = entry("aff1").algebra;
    let curvature = aff1.curvature();
    let aff1_ok = !aff1.is_flat()
        && !curvature.is_flat()
        && inverse_double_extend(&aff1, None) == Err(ExtensionError::NotFlat)
        && double_extend(&aff1, &AdmissiblePair::zero(2)) == Err(ExtensionError::BaseNotFlat)
        && classify_upto6(aff1.algebra()) == Ok(None)
        && aff1.algebra().center().is_zero();
    notes.push(format!(
        "aff1: not flat, NotFlat/BaseNotFlat, trivial center, classify Unknown = {aff1_ok}"
    ));
    outcome(eq2 && degenerate && aff1_ok, notes.join("; "))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in catalog::all_entries()
        .into_iter()
        .chain([catalog::g6_1(&common::q(-1, 2)).unwrap()])
    {
        checked += 1;
        let lib = e.algebra.canonical_product();
        match common::brute_canonical(&e.algebra) {
            Some(t) => {
                let n = e.algebra.dim();
                let same = (0..n).all(|i| {
                    (0..n).all(|j| (0..n).all(|k| lib.coefficient(i, j, k) == &t[i][j][k]))
                });
                if !same {
                    bad.push(e.name.clone());
                }
            }
            None => bad.push(format!("{}: oracle system singular", e.name)),
        }
    }
    outcome(bad.is_empty(), format!("{checked} entries, full n³ system solved by test-local elimination; mismatches {bad:?}"))
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for e in catalog::all_entries() {
        checked += 1;
        let s: &SymplecticLieAlgebra = &e.algebra;
        let Some(oracle) = common::brute_natural(s) else {
            bad.push(format!("{}: oracle singular", e.name));
            continue;
        };
        let lib = s.natural_product();
        let n = s.dim();
        let agree = (0..n)
            .all(|i| (0..n).all(|j| (0..n).all(|k| lib.coefficient(i, j, k) == &oracle[i][j][k])));
        let defects = common::curvature_defects(s.algebra(), &oracle);
        let lib_flat = flatsym::symplectic::curvature(&lib, s.algebra()).is_ok_and(|r| r.is_flat());
        if !agree || !defects.is_empty() || !lib_flat {
            bad.push(format!(
                "{}: agree={agree} defects={defects:?} lib_flat={lib_flat}",
                e.name
            ));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} entries including aff1; nonzero curvature {bad:?}"),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut line = |n: usize, title: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let ms = start.elapsed().as_millis();
        all &= o.pass;
        println!(
            "criterion {n:>2} {} | {title} | {} | {ms} ms",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    println!("acceptance: exact rational arithmetic, tolerance 0 for every comparison");
    line(1, "product tables reproduced exactly", &mut criterion_1);
    line(2, "flatness table", &mut criterion_2);
    line(3, "structural theorems on flat entries", &mut criterion_3);
    let start = Instant::now();
    let records = run_sweep();
    println!(
        "sweep: {} points in {} ms",
        records.len(),
        start.elapsed().as_millis()
    );
    line(4, "extension soundness sweep", &mut || {
        criterion_4(&records)
    });
    line(5, "dimension-6 classification reproduced", &mut || {
        criterion_5(&records)
    });
    line(6, "dimension-4 uniqueness", &mut || criterion_6(&records));
    line(
        7,
        "reduce-then-extend round trip and complete reducibility",
        &mut criterion_7,
    );
    line(8, "negative controls", &mut criterion_8);
    line(
        9,
        "independent brute-force product oracle",
        &mut criterion_9,
    );
    line(10, "natural product has zero curvature", &mut criterion_10);
    let _ = catalog::reference_fingerprints();
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILURES" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
