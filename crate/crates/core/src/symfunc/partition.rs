use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
///
/// Ordering is lexicographic on the parts, which is also the order used when
/// serializing symmetric functions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A cell of a Ferrers diagram in French notation: rows are counted from the
/// bottom, columns from the left, both from zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell { row: r as u32, col: c }))
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.part(c.row as usize) > c.col
    }

    /// Cells strictly to the right.
    pub fn arm(&self, c: Cell) -> u32 {
        self.part(c.row as usize) - c.col - 1
    }

    /// Cells strictly above.
    pub fn leg(&self, c: Cell) -> u32 {
        self.0[c.row as usize..].iter().filter(|&&p| p > c.col).count() as u32 - 1
    }

    /// Cells strictly to the left.
    pub fn coarm(&self, c: Cell) -> u32 {
        c.col
    }

    /// Cells strictly below.
    pub fn coleg(&self, c: Cell) -> u32 {
        c.row
    }

    /// `n(mu) = sum_i (i - 1) mu_i`.
    pub fn n(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Multiplicity of each part size, indexed by the size.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the size of the centraliser.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        z
    }

    /// The partition whose parts are those of both.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in increasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rem.min(max) {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions `nu` contained in `self` with `self / nu` having `k` cells.
    pub fn subpartitions_by(&self, k: u32) -> Vec<Partition> {
        if k > self.size() {
            return Vec::new();
        }
        Partition::all(self.size() - k)
            .into_iter()
            .filter(|nu| self.contains_partition(nu))
            .collect()
    }

    /// Partitions `nu` with `nu / self` a horizontal strip of `k` cells
    /// removed, i.e. `self / nu` a horizontal strip of size `k`.
    pub fn remove_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; l];
        fn rec(lam: &[u32], i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                if rem == 0 {
                    out.push(Partition::from_parts_unsorted(cur.clone()));
                }
                return;
            }
            let lo = lam.get(i + 1).copied().unwrap_or(0);
            let hi = lam[i];
            for v in (lo..=hi).rev() {
                let taken = hi - v;
                if taken > rem {
                    break;
                }
                cur[i] = v;
                rec(lam, i + 1, rem - taken, cur, out);
            }
        }
        rec(&self.0, 0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions obtained by adding a horizontal strip of `k` cells.
    pub fn add_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        Partition::all(self.size() + k)
            .into_iter()
            .filter(|big| big.remove_horizontal_strips(k).contains(self))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `2,1,1`, `(2,1,1)`, `[2, 1, 1]` and the empty forms `()`, `[]`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3), vec![p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
    }

    #[test]
    fn geometry() {
        let mu = p(&[3, 1]);
        assert_eq!(mu.conjugate(), p(&[2, 1, 1]));
        let c = Cell { row: 0, col: 0 };
        assert_eq!((mu.arm(c), mu.leg(c), mu.coarm(c), mu.coleg(c)), (2, 1, 0, 0));
        let c = Cell { row: 1, col: 0 };
        assert_eq!((mu.arm(c), mu.leg(c), mu.coarm(c), mu.coleg(c)), (0, 0, 0, 1));
        assert_eq!(mu.n(), 1);
        assert_eq!(mu.cells().count(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1]).z(), 2.into());
        assert_eq!(p(&[2, 2, 1]).z(), 8.into());
        assert_eq!(p(&[3]).z(), 3.into());
    }

    #[test]
    fn strips() {
        assert_eq!(p(&[2, 1]).remove_horizontal_strips(1), vec![p(&[1, 1]), p(&[2])]);
        assert!(p(&[1, 1]).remove_horizontal_strips(2).is_empty());
        assert_eq!(p(&[2]).remove_horizontal_strips(2), vec![Partition::empty()]);
        assert_eq!(p(&[1]).add_horizontal_strips(1), vec![p(&[1, 1]), p(&[2])]);
    }

    #[test]
    fn parse_and_print() {
        for s in ["(2,1,1)", "2,1,1", "[2, 1, 1]"] {
            assert_eq!(s.parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        }
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }
}
