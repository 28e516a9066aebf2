//! One step of the skewing recursions: the j smallest letters are deleted
//! or turned into zeros, with the statistic drop of each stage.

use gendelta::omp::{skew_reduce, Omp, Stat};

fn main() -> gendelta::Result<()> {
    let pi: Omp = "2|0|973|10|86|50|4".parse()?;
    for stat in [Stat::Inv, Stat::Dinv] {
        let r = skew_reduce(&pi, 4, stat)?;
        println!("{stat}: {pi} with j = 4 (s = {})", r.s);
        for st in &r.stages {
            println!("  {:<36} {:<22} drop {}", st.name, st.after.to_string(), st.drop);
        }
        println!("  total drop {}", r.total_drop());
    }
    Ok(())
}
