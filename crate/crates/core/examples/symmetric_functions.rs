//! Symmetric functions over Q(q, t): basis changes, products, skewing and
//! plethysm.

use gendelta::symfunc::{plethysm, Alphabet, Basis, Partition, SymFun};

fn main() -> gendelta::Result<()> {
    let lam = Partition::new(vec![2, 1])?;
    let s21 = SymFun::s(&lam, 3)?;
    for b in [Basis::M, Basis::E, Basis::H, Basis::P] {
        println!("s[2,1] in the {b} basis: {}", s21.to_basis(b));
    }

    let e1 = SymFun::e(1, 3)?;
    let prod = e1.mul(&SymFun::e(2, 3)?)?.to_basis(Basis::S);
    println!("e1 * e2 = {prod}");
    println!("h1-perp s[2,1] = {}", s21.skew_h(1));
    println!("omega s[2,1] = {}", s21.omega());

    let h2 = SymFun::h(2, 2)?;
    let over_m = plethysm(&h2, &Alphabet::x_over_m());
    println!("h2[X/((1-q)(1-t))] = {}", over_m.to_basis(Basis::S));
    println!("as JSON: {}", s21.to_json());
    Ok(())
}
