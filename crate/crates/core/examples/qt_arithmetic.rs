//! Exact arithmetic in Q(q, t): polynomials, reduced fractions, q-binomials
//! and specializations.

use gendelta::qt::{gcd, q_binomial, specialize, Assignment, IntPoly, QtRational};

fn main() -> gendelta::Result<()> {
    let a: IntPoly = "1 - q*t".parse()?;
    let b: IntPoly = "1 - q^2*t^2".parse()?;
    println!("gcd({a}, {b}) = {}", gcd(&a, &b));

    let f = QtRational::new(b.clone(), a.clone());
    println!("({b}) / ({a}) reduces to {f}");

    let g: QtRational = "(q + t)/(1 - t)".parse()?;
    println!("f + g = {}", &f + &g);
    println!("(f + g) at t = 0: {}", specialize(&(&f + &g), &Assignment::t_zero())?);
    println!("g with q and t swapped: {}", g.swap_qt());

    for k in 0..=4 {
        println!("[4 choose {k}]_q = {}", q_binomial(4, k)?);
    }
    Ok(())
}
