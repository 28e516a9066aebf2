//! Partially labelled decorated Dyck paths: construction, statistics and
//! the q,t-enumerator of PLD(m, n)^{*k}.

use gendelta::paths::{enumerate_pld, parse_steps, pld_polynomial, series_to_symfun, PldPath};

fn main() -> gendelta::Result<()> {
    let p = PldPath::new(parse_steps("NNEENNNEENNNEEEE")?, vec![1, 3, 0, 4, 6, 0, 2, 6], [4, 7])?;
    println!("{p}");
    println!("area {} dinv {} (primary, secondary) {:?}", p.area(), p.dinv(), p.dinv_pairs());
    println!("area word {:?}, diagonal touches {}", p.area_word(), p.diagonal_touches());
    println!("as JSON: {}", serde_json::to_string(&p).unwrap());

    let all = enumerate_pld(1, 2, 1, 2);
    println!("PLD(1, 2)^{{*1}} with labels <= 2 has {} paths:", all.len());
    for q in all.iter().take(4) {
        println!("  {q}  area={} dinv={}", q.area(), q.dinv());
    }

    let series = pld_polynomial(1, 2, 1, 2);
    println!("enumerator: {}", series_to_symfun(&series, 3));
    Ok(())
}
