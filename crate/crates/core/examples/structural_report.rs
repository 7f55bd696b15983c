//! Nilpotency, center and derived ideal, and the consequences of flatness.

use flatsym::catalog;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "r3_h3".into());
    let s = catalog::get(&name).expect("catalog entry").algebra;
    let report = s.structural_report();
    print!("{report}");
    if !report.all_hold() {
        println!("failing claims:");
        for c in report.failures() {
            println!("  {}", c.name);
        }
    }
}
