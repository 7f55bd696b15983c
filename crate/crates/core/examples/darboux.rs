//! Skew forms: nondegeneracy, a Darboux basis, orthogonals and adjoints.

use flatsym::catalog;
use flatsym::symplectic::darboux_basis;

fn main() {
    let s = catalog::get("g6_3").unwrap().algebra;
    let omega = s.form();
    println!("ω =\n{}", omega.matrix());

    let p = darboux_basis(omega).unwrap();
    println!("Darboux basis (columns) =\n{p}");
    println!("ω in that basis =\n{}", omega.restrict(&p).matrix());

    let center = s.algebra().center();
    println!("center Z = {center}, {}", s.classify_subspace(&center));
    println!("Z^⊥ = {}", s.perp(&center));

    let ad = s.algebra().ad_basis(0);
    println!("ad_x1 =\n{ad}\nad_x1* =\n{}", s.adjoint(&ad));
}
