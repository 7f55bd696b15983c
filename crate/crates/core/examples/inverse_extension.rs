//! Peels a flat algebra down to {0} one central line at a time and rebuilds it.

use flatsym::catalog;
use flatsym::extension::{extension_tower, reduction_tower, tower_replay};
use flatsym::linalg::format_vector;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "g6_3".into());
    let s = catalog::get(&name).expect("catalog entry").algebra;
    let steps = reduction_tower(&s).expect("flat input");
    for (k, step) in steps.iter().enumerate() {
        println!(
            "step {}: base dim {}, ξ =\n{}\nb0 = {}",
            k + 1,
            step.base.dim(),
            step.pair.xi,
            format_vector(&step.pair.b0)
        );
    }
    let (pairs, basis) = tower_replay(&steps);
    let rebuilt = extension_tower(&pairs).unwrap();
    let names = rebuilt.algebra().basis_names().to_vec();
    let same = s
        .change_basis(&basis, names)
        .unwrap()
        .same_structure(&rebuilt);
    println!(
        "rebuilt from {{0}} by {} extensions; identical after basis change: {same}",
        pairs.len()
    );
}
