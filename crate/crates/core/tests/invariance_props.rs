//! Structure is independent of the chosen basis.

use flatsym::catalog::{self, fingerprint};
use flatsym::linalg::{int, Matrix};
use proptest::prelude::*;

const ENTRIES: [&str; 8] = [
    "abelian4",
    "aff1",
    "r_h3_dim4",
    "r3_h3",
    "g6_1",
    "g6_2",
    "g6_2_w2",
    "g6_3",
];

/// `L U` with unit-triangular factors: always invertible over the integers.
fn unimodular(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n * 2).prop_map(move |xs| {
        let l = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                int(1)
            } else if i > j {
                int(xs[i * n + j])
            } else {
                int(0)
            }
        });
        let u = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                int(1)
            } else if i < j {
                int(xs[n * n + i * n + j])
            } else {
                int(0)
            }
        });
        &l * &u
    })
}

fn case() -> impl Strategy<Value = (&'static str, Matrix)> {
    prop::sample::select(ENTRIES.to_vec()).prop_flat_map(|name| {
        let n = catalog::get(name).unwrap().algebra.dim();
        (Just(name), unimodular(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_basis_change((name, p) in case()) {
        let s = catalog::get(name).unwrap().algebra;
        let n = s.dim();
        let names = (1..=n).map(|i| format!("z{i}")).collect();
        let t = s.change_basis(&p, names).unwrap();
        prop_assert!(t.algebra().validate().is_ok());
        prop_assert_eq!(fingerprint(t.algebra()), fingerprint(s.algebra()));
        prop_assert_eq!(t.is_flat(), s.is_flat());
        prop_assert_eq!(catalog::classify_upto6(t.algebra()).unwrap(), catalog::classify_upto6(s.algebra()).unwrap());

        // Covariance: u' • v' = P⁻¹ (P u' • P v').
        let inv = p.inverse().unwrap();
        let (old, new) = (s.canonical_product(), t.canonical_product());
        let cols = p.columns();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(new.product_basis(i, j), inv.mul_vec(&old.product(&cols[i], &cols[j])));
            }
        }
    }
}
