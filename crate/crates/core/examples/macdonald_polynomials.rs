//! Modified Macdonald polynomials, nabla and the Delta operators, plus a
//! run of the identity oracles that validate the tables.

use gendelta::macdonald::{identity_oracle_suite, DeltaVariant, Macdonald};
use gendelta::symfunc::{Basis, Partition, SymFun};

fn main() -> gendelta::Result<()> {
    let mac = Macdonald::new(3);
    for mu in Partition::all(3) {
        println!("H~{mu} = {}", mac.htilde(&mu)?);
    }

    let e3 = SymFun::e(3, 3)?;
    println!("nabla e3 = {}", mac.nabla(&e3)?.to_basis(Basis::S));
    let e1 = SymFun::e(1, 3)?;
    println!("Delta'_e1 e3 = {}", mac.delta(&e1, &e3, DeltaVariant::DeltaPrime)?.to_basis(Basis::S));

    let report = identity_oracle_suite(3);
    let failed = report.iter().filter(|e| !e.passed).count();
    println!("{} identity checks through degree 3, {failed} failed", report.len());
    Ok(())
}
