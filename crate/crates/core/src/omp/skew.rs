//! The reduction step behind the skewing recursions: the `j` smallest
//! letters ("small cars") are removed or turned into 0s.

use serde::Serialize;

use super::{standardize, Omp, Stat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewStage {
    pub name: &'static str,
    pub after: Omp,
    /// statistic before minus statistic after
    pub drop: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewReduction {
    pub result: Omp,
    /// small cars that were the minimum of their block
    pub s: usize,
    pub stages: Vec<SkewStage>,
}

impl SkewReduction {
    pub fn total_drop(&self) -> i64 {
        self.stages.iter().map(|s| s.drop).sum()
    }
}

fn collapse(pi: &Omp, j: u32) -> Result<Omp> {
    pi.map_letters(|x| if x == 0 { 0 } else if x <= j { 1 } else { x - j + 1 })
}

/// One recursive step for `inv` (partitions without a 0 in the leftmost
/// block) or `dinv` (without a 0 in the rightmost block).
///
/// Small cars sharing a block with a 0 are deleted, the others become 0s.
/// For `inv` the 0s are then stripped from the left end; for `dinv` a 0 in
/// the rightmost block is removed and what is left of that block moves to
/// the leftmost position. The result is standardized.
pub fn skew_reduce(pi: &Omp, j: u32, stat: Stat) -> Result<SkewReduction> {
    if stat == Stat::Maj {
        return Err(Error::Precondition("skew_reduce supports inv and dinv".into()));
    }
    if !pi.is_standard() {
        return Err(Error::Precondition(format!("{pi} is not standard")));
    }
    let n = pi.positives() as u32;
    if j == 0 || j > n {
        return Err(Error::Precondition(format!("need 1 <= j <= {n}, got {j}")));
    }
    let collapsed = collapse(pi, j)
        .map_err(|_| Error::Precondition(format!("two small cars of {pi} share a block")))?;
    if standardize(&collapsed, stat) != *pi {
        return Err(Error::Precondition(format!("the small cars of {pi} invert for {stat}")));
    }
    let small = |x: u32| 1 <= x && x <= j;
    let s = pi.blocks().iter().filter(|b| b.last() != Some(&0) && b.iter().any(|&x| small(x))).count();

    let mut stages = Vec::new();
    let mut cur = pi.clone();
    let mut push = |name: &'static str, next: Omp, cur: &mut Omp| {
        let drop = i64::from(stat.eval(cur)) - i64::from(stat.eval(&next));
        stages.push(SkewStage { name, after: next.clone(), drop });
        *cur = next;
    };

    let next: Vec<Vec<u32>> = cur
        .blocks()
        .iter()
        .map(|b| if b.contains(&0) { b.iter().copied().filter(|&x| !small(x)).collect() } else { b.clone() })
        .collect();
    push("delete small cars beside a 0", Omp::new(next)?, &mut cur);

    let next = cur.map_letters(|x| if small(x) { 0 } else { x })?;
    push("turn small cars into 0", next, &mut cur);

    let mut blocks = cur.blocks().to_vec();
    match stat {
        Stat::Inv => {
            if blocks.first().is_some_and(|b| b.contains(&0)) {
                while blocks.first().is_some_and(|b| b.contains(&0)) {
                    blocks[0].retain(|&x| x != 0);
                    if blocks[0].is_empty() {
                        blocks.remove(0);
                    }
                }
                push("strip leading 0s", Omp::new(blocks)?, &mut cur);
            }
        }
        _ => {
            if blocks.last().is_some_and(|b| b.contains(&0)) {
                let mut last = blocks.pop().unwrap();
                last.retain(|&x| x != 0);
                if !last.is_empty() {
                    blocks.insert(0, last);
                }
                push("move rightmost block to the left", Omp::new(blocks)?, &mut cur);
            }
        }
    }

    let next = standardize(&cur, stat);
    push("standardize", next, &mut cur);
    Ok(SkewReduction { result: cur, s, stages })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Omp {
        s.parse().unwrap()
    }

    fn trace(r: &SkewReduction) -> Vec<(String, i64)> {
        r.stages.iter().map(|s| (s.after.to_string(), s.drop)).collect()
    }

    #[test]
    fn inv_example() {
        let r = skew_reduce(&p("2|0|973|10|86|50|4"), 4, Stat::Inv).unwrap();
        let expect = [("2|0|973|0|86|50|4", 1), ("0|0|970|0|86|50|0", 5), ("97|0|86|50|0", 0), ("53|0|42|10|0", 0)];
        let expect: Vec<(String, i64)> = expect.iter().map(|(a, b)| (a.to_string(), *b)).collect();
        assert_eq!(trace(&r), expect);
        assert_eq!(r.result, p("53|0|42|10|0"));
        assert_eq!(r.s, 3);
    }

    #[test]
    fn dinv_examples() {
        let r = skew_reduce(&p("2|0|973|10|86|50|4"), 4, Stat::Dinv).unwrap();
        let t = trace(&r);
        // deleting the 1 of block 10 loses the secondary pair with the 0 on
        // its left and the primary pair with the 7
        assert_eq!(t[0], ("2|0|973|0|86|50|4".to_string(), 2));
        assert_eq!(t[1], ("0|0|970|0|86|50|0".to_string(), 5));
        // the rightmost 0 is a singleton: it goes, and dinv drops by k - s = 1
        assert_eq!(t[2], ("0|0|970|0|86|50".to_string(), 1));
        assert_eq!(r.result, p("0|0|530|0|42|10"));

        let r = skew_reduce(&p("92|0|73|10|86|50|4"), 4, Stat::Dinv).unwrap();
        assert_eq!(trace(&r)[1], ("90|0|70|0|86|50|0".to_string(), 5));
        assert_eq!(trace(&r)[2], ("90|0|70|0|86|50".to_string(), 1));

        // a non-singleton rightmost block moves to the left end
        let r = skew_reduce(&p("0|0|2|431"), 1, Stat::Dinv).unwrap();
        assert_eq!(trace(&r)[1].0, "0|0|2|430");
        assert_eq!(trace(&r)[2], ("43|0|0|2".to_string(), 1));
        assert_eq!(r.result, p("32|0|0|1"));
    }

    #[test]
    fn rotation_drops_k_minus_s() {
        for m in 0..3 {
            for n in 2..=5 - m {
                for k in 1..=n {
                    for pi in crate::omp::enumerate_omp(m, n, k, crate::omp::Restriction::R, true) {
                        for j in 1..n as u32 {
                            let Ok(r) = skew_reduce(&pi, j, Stat::Dinv) else { continue };
                            if let Some(st) = r.stages.iter().find(|s| s.name.starts_with("move")) {
                                assert_eq!(st.drop, (k - r.s) as i64, "{pi} j={j}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(skew_reduce(&p("21|3"), 2, Stat::Inv).is_err());
        assert!(skew_reduce(&p("10|2"), 1, Stat::Maj).is_err());
        assert!(skew_reduce(&p("1|1"), 1, Stat::Inv).is_err());
        assert!(skew_reduce(&p("1|2"), 3, Stat::Inv).is_err());
    }
}
