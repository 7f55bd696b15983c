//! Sweeps every admissible family over the parameter grid and tallies classes.

use std::collections::BTreeMap;

use flatsym::catalog::{self, classify_upto6, FAMILIES};
use flatsym::extension::double_extend;

fn main() {
    for fam in &FAMILIES {
        let base = catalog::get(fam.base).unwrap().algebra;
        let mut tally: BTreeMap<String, usize> = BTreeMap::new();
        for params in catalog::sweep_points(fam) {
            let (_, pair) = catalog::admissible_family(fam.name, &params).unwrap();
            let (g, _) = double_extend(&base, &pair).unwrap();
            let class = classify_upto6(g.algebra())
                .unwrap()
                .map_or("Unknown".to_string(), |c| c.name().to_string());
            *tally.entry(class).or_default() += 1;
        }
        println!("{:<26} {tally:?}", fam.name);
    }
}
