//! The product u•v determined by ω(u•v, w) = ⅓(ω([u,v], w) + ω([u,w], v)).

use flatsym::catalog;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "g6_3".into());
    let entry = catalog::get(&name).expect("catalog entry");
    let s = &entry.algebra;
    let names = s.algebra().basis_names();
    let p = s.canonical_product();
    println!("{name}: nonzero products");
    for (i, j, k, c) in p.nonzero_entries() {
        println!("  {} • {} ∋ {c} {}", names[i], names[j], names[k]);
    }
    match p.lie_admissibility_defect(s.algebra()) {
        None => println!("u•v − v•u = [u,v] on every basis pair"),
        Some(d) => println!("not Lie-admissible: {d:?}"),
    }
    for x in &entry.errata {
        println!(
            "erratum at {}•{}: {}",
            names[x.left], names[x.right], x.reason
        );
    }
}
