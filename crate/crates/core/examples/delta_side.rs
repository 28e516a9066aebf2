//! The symmetric function side: C-polynomials at t = 0 and q = 0, their
//! q <-> t symmetry, and the blue and red recursions.

use gendelta::delta_side::{to_csv, DeltaSide, Flavor};
use gendelta::symfunc::Basis;

fn main() -> gendelta::Result<()> {
    let d = DeltaSide::new(4);
    for flavor in Flavor::BOTH {
        let c = d.cpoly(3, 2, 1, flavor)?;
        println!("C(n=3, k=2, m=1) at {}: {}", flavor.name(), c.value.to_basis(Basis::M));
    }
    println!("q <-> t symmetry holds: {}", d.cpoly_symmetry_check(3, 2, 1)?);
    println!("blue/red formulas at n=4 k=2 m=1 j=2: {:?}", d.blue_red_detail(4, 2, 1, 2)?);
    println!("j = n closed form at n=3 k=2 m=1: {}", d.lemma_jn(3, 2, 1)?);

    let rows = d.run_suite(3);
    print!("{}", to_csv(&rows[..5]));
    println!("... {} rows, all pass: {}", rows.len(), rows.iter().all(|r| r.passed));
    Ok(())
}
