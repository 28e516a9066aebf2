//! Ordered multiset partitions: the three statistics, reading words,
//! standardization and q-enumerators over restricted classes.

use gendelta::omp::{self, enumerate_omp, omp_qenum_symfun, standardize, Omp, Restriction, Stat};

fn main() -> gendelta::Result<()> {
    let pi: Omp = "10|1|320|21".parse()?;
    println!("{pi}: inv={} dinv={} maj={}", omp::inv(&pi), omp::dinv(&pi), omp::maj(&pi));
    for stat in Stat::ALL {
        println!("  {stat} reading word {:?}, standardized {}", pi.reading_word(stat), standardize(&pi, stat));
    }

    let class = enumerate_omp(1, 3, 1, Restriction::R, false);
    println!("OP^R(1, 3)^1 has {} elements, e.g. {}", class.len(), class[0]);
    for stat in Stat::ALL {
        println!("  sum q^{stat} x^pi = {}", omp_qenum_symfun(1, 3, 1, stat, Restriction::R));
    }
    println!("  L-restricted dinv: {}", omp_qenum_symfun(1, 3, 1, Stat::Dinv, Restriction::L));
    Ok(())
}
