//! Curvature of the canonical product, plus the natural product that is always flat.

use flatsym::catalog;

fn main() {
    for name in ["aff1", "r_h3_dim4", "g6_1", "g6_2_w3"] {
        let s = catalog::get(name).unwrap().algebra;
        let natural = flatsym::symplectic::curvature(&s.natural_product(), s.algebra()).unwrap();
        println!(
            "{name:>10}: canonical product flat = {:<5}  natural product flat = {}",
            s.is_flat(),
            natural.is_flat()
        );
    }
}
