//! Exact rational linear algebra: echelon form, kernels, solving, subspace lattice.

use flatsym::linalg::{format_vector, frac, int, kernel, rref, solve, Matrix, Subspace};

fn main() {
    let m = Matrix::from_rows(vec![
        vec![int(1), int(2), int(3)],
        vec![int(2), int(4), frac(13, 2)],
        vec![int(0), int(0), int(1)],
    ]);
    let r = rref(&m);
    println!("m =\n{m}");
    println!(
        "rref =\n{}\npivots {:?}, rank {}",
        r.reduced, r.pivot_cols, r.rank
    );
    println!("kernel: {}", kernel(&m));

    // Underdetermined systems return the solution with free coordinates zero.
    let x = solve(&Matrix::from_i64(&[&[1, 1]]), &[int(2)]).unwrap();
    println!("x + y = 2 solved as {}", format_vector(&x));
    println!(
        "[[0],[1]] x = (1,0): {:?}",
        solve(&Matrix::from_i64(&[&[0], &[1]]), &[int(1), int(0)])
    );

    let a = Subspace::span(
        3,
        &[vec![int(1), int(1), int(0)], vec![int(0), int(0), int(1)]],
    );
    let b = Subspace::span(
        3,
        &[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]],
    );
    println!("a + b = {}", a.sum(&b).unwrap());
    println!("a ∩ b = {}", a.intersect(&b).unwrap());
}
