//! `xi`: area-0 paths to partitions (dinv preserved), and `eta`: dinv-0
//! paths to partitions (area becomes maj).

use super::Omp;
use crate::error::{Error, Result};
use crate::paths::{PldPath, Step};

/// Label sets of the vertical stretches, read right to left.
pub fn xi(path: &PldPath) -> Result<Omp> {
    if path.area() != 0 {
        return Err(Error::Precondition(format!("xi needs a path of area 0, got area {}", path.area())));
    }
    let labels = path.labels();
    let blocks = path.stretches().into_iter().rev().map(|(a, b)| labels[a..b].to_vec()).collect();
    Omp::new(blocks)
}

/// Inverse of [`xi`]: each block becomes a vertical stretch starting on the
/// diagonal, all of its rises decorated.
pub fn xi_inv(pi: &Omp) -> Result<PldPath> {
    if pi.blocks().last().is_some_and(|b| b.contains(&0)) {
        return Err(Error::Precondition(format!("{pi} has a 0 in its rightmost block")));
    }
    let (mut steps, mut labels, mut decorated) = (Vec::new(), Vec::new(), Vec::new());
    for b in pi.blocks().iter().rev() {
        for (i, &x) in b.iter().rev().enumerate() {
            steps.push(Step::N);
            labels.push(x);
            if i > 0 {
                decorated.push(labels.len());
            }
        }
        steps.extend(std::iter::repeat_n(Step::E, b.len()));
    }
    PldPath::new(steps, labels, decorated)
}

/// Labels top to bottom; two consecutive labels share a block exactly when
/// they form a decorated rise.
pub fn eta(path: &PldPath) -> Result<Omp> {
    if path.dinv() != 0 {
        return Err(Error::Precondition(format!("eta needs a path of dinv 0, got dinv {}", path.dinv())));
    }
    let labels = path.labels();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for row in (1..=labels.len()).rev() {
        let joins = row < labels.len() && path.decorated_rows().contains(&(row + 1));
        match blocks.last_mut() {
            Some(b) if joins => b.push(labels[row - 1]),
            _ => blocks.push(vec![labels[row - 1]]),
        }
    }
    Omp::new(blocks)
}

/// Inverse of [`eta`]: the concatenated word read bottom to top, climbing a
/// column exactly when the label increases.
pub fn eta_inv(pi: &Omp) -> Result<PldPath> {
    if pi.blocks().last().is_some_and(|b| b.contains(&0)) {
        return Err(Error::Precondition(format!("{pi} has a 0 in its rightmost block")));
    }
    let mut labels: Vec<u32> = pi.word();
    labels.reverse();
    // block index of each row, bottom to top
    let mut owner: Vec<usize> = pi.blocks().iter().enumerate().flat_map(|(i, b)| std::iter::repeat_n(i, b.len())).collect();
    owner.reverse();
    let mut steps = Vec::new();
    let mut decorated = Vec::new();
    let mut x = 0usize;
    for (i, &l) in labels.iter().enumerate() {
        if i > 0 {
            if labels[i - 1] < l {
                if owner[i - 1] == owner[i] {
                    decorated.push(i + 1);
                }
            } else {
                steps.push(Step::E);
                x += 1;
            }
        }
        steps.push(Step::N);
    }
    steps.extend(std::iter::repeat_n(Step::E, labels.len() - x));
    PldPath::new(steps, labels, decorated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omp::{dinv, maj};
    use crate::paths::parse_steps;

    fn path(steps: &str, labels: &[u32], dec: &[usize]) -> PldPath {
        PldPath::new(parse_steps(steps).unwrap(), labels.to_vec(), dec.iter().copied()).unwrap()
    }

    #[test]
    fn area_zero_example() {
        let p = path("NNEENNNEEENNEENE", &[2, 3, 0, 1, 4, 0, 5, 0], &[2, 4, 5, 7]);
        let pi = xi(&p).unwrap();
        assert_eq!(pi.to_string(), "0|50|410|32");
        assert_eq!((pi.zeros(), pi.positives(), pi.k()), (3, 5, 1));
        assert_eq!(dinv(&pi), p.dinv());
        assert_eq!(xi_inv(&pi).unwrap(), p);
    }

    #[test]
    fn dinv_zero_example() {
        let p = path("NNNENNENNNEEEEEE", &[2, 4, 5, 0, 6, 0, 1, 3], &[2, 5, 7, 8]);
        assert_eq!(p.dinv(), 0);
        let pi = eta(&p).unwrap();
        assert_eq!(pi.to_string(), "310|60|5|42");
        assert_eq!(p.area(), 7);
        assert_eq!(maj(&pi), 7);
        assert_eq!(eta_inv(&pi).unwrap(), p);
    }

    #[test]
    fn singleton() {
        let p = path("NE", &[1], &[]);
        assert_eq!(xi(&p).unwrap().to_string(), "1");
        assert_eq!(eta(&p).unwrap().to_string(), "1");
    }

    #[test]
    fn preconditions() {
        let p = path("NNEENNNEENNNEEEE", &[1, 3, 0, 4, 6, 0, 2, 6], &[4, 7]);
        assert!(xi(&p).is_err());
        assert!(eta(&p).is_err());
        assert!(xi_inv(&"1|10".parse().unwrap()).is_err());
    }
}
