//! The maps between the combinatorial models: phi (dinv to inv), theta
//! (maj to inv) through insertion and deletion, and xi, eta from paths.

use gendelta::omp::{self, delete, insert, phi, phi_log, theta, Omp, Stat};
use gendelta::paths::{parse_steps, PldPath};

fn main() -> gendelta::Result<()> {
    let pi: Omp = "0|3|20|1|310|32".parse()?;
    let (base, log) = phi_log(&pi, &omp::dinv)?;
    println!("deleting from {pi} down to {base}:");
    for d in &log {
        println!("  letter {} gap {} new block {}", d.letter, d.c, d.b);
    }
    let img = phi(&pi);
    println!("phi({pi}) = {img}, dinv {} = inv {}", omp::dinv(&pi), omp::inv(&img));

    let sigma: Omp = "10|2|410|21".parse()?;
    let t = theta(&sigma);
    println!("theta({sigma}) = {t}, maj {} = inv {}", omp::maj(&sigma), omp::inv(&t));

    for (base, data) in delete(&"31|2|0".parse()?, 3, Stat::Inv) {
        println!("inv insertion of 3 into {base} with {data:?} gives {}", insert(&base, 3, &data, Stat::Inv)?);
    }

    let p = PldPath::new(parse_steps("NNEENNNEEENNEENE")?, vec![2, 3, 0, 1, 4, 0, 5, 0], [2, 4, 5, 7])?;
    println!("xi({p}) = {}", omp::xi(&p)?);
    let q = PldPath::new(parse_steps("NNNENNENNNEEEEEE")?, vec![2, 4, 5, 0, 6, 0, 1, 3], [2, 5, 7, 8])?;
    let e = omp::eta(&q)?;
    println!("eta({q}) = {e}, area {} = maj {}", q.area(), omp::maj(&e));
    println!("eta inverse gives back the path: {}", omp::eta_inv(&e)? == q);
    Ok(())
}
