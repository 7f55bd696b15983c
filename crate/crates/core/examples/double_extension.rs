//! Builds a six-dimensional flat algebra from a four-dimensional base and an
//! admissible pair, then classifies it.

use flatsym::catalog::{self, classify_upto6, Params};
use flatsym::extension::{check_admissible, double_extend, nilpotency_trace_report};
use flatsym::linalg::{format_vector, int};

fn main() {
    let params: Params = [
        ("a", 1),
        ("b", 0),
        ("c", 0),
        ("d", 1),
        ("alpha", 0),
        ("beta", 0),
    ]
    .iter()
    .map(|(k, v)| (k.to_string(), int(*v)))
    .collect();
    let (base_name, pair) = catalog::admissible_family("dim4_abelian_case2", &params).unwrap();
    let base = catalog::get(base_name).unwrap().algebra;
    println!(
        "base {base_name}, ξ =\n{}\nb0 = {}",
        pair.xi,
        format_vector(&pair.b0)
    );
    print!("{}", check_admissible(&base, &pair));
    println!("{:?}", nilpotency_trace_report(&base, &pair));

    let (g, witness) = double_extend(&base, &pair).unwrap();
    println!(
        "extension: dim {}, e at {}, ē at {}",
        g.dim(),
        witness.e_index,
        witness.ebar_index
    );
    for (i, j, v) in g.algebra().nonzero_brackets() {
        let names = g.algebra().basis_names();
        println!("  [{}, {}] = {}", names[i], names[j], format_vector(v));
    }
    println!(
        "flat: {}, class: {:?}",
        g.is_flat(),
        classify_upto6(g.algebra()).unwrap()
    );
}
