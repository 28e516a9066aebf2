//! Per-degree change-of-basis matrices, built once and cached.
//!
//! Every basis is first expanded in the monomial basis with integer
//! coefficients; conversions to and from the power basis are then obtained
//! by exact inversion over the rationals.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::Basis;

/// Sparse rows: `rows[i]` lists `(j, a_ij)` with `a_ij != 0`.
pub(crate) type SparseMatrix = Vec<Vec<(usize, BigRational)>>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `to_p[b][i]`: the expansion of `b_{parts[i]}` in the power basis.
    pub to_p: [SparseMatrix; 5],
    /// `from_p[b][i]`: the expansion of `p_{parts[i]}` in basis `b`.
    pub from_p: [SparseMatrix; 5],
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

pub(crate) fn tables(n: u32) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

fn build(n: u32) -> DegreeTables {
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let in_m: Vec<Vec<Vec<BigRational>>> = Basis::ALL
        .iter()
        .map(|&b| {
            parts
                .iter()
                .map(|lam| {
                    parts
                        .iter()
                        .map(|mu| BigRational::from_integer(m_coefficient(b, lam, mu)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let p_idx = Basis::P.index();
    let p_inv = invert(&in_m[p_idx]);
    let mut to_p: Vec<SparseMatrix> = Vec::new();
    let mut from_p: Vec<SparseMatrix> = Vec::new();
    for (bi, a) in in_m.iter().enumerate() {
        if bi == p_idx {
            to_p.push(identity(parts.len()));
            from_p.push(identity(parts.len()));
            continue;
        }
        to_p.push(sparse(&matmul(a, &p_inv)));
        from_p.push(sparse(&matmul(&in_m[p_idx], &invert(a))));
    }
    DegreeTables {
        parts,
        index,
        to_p: to_p.try_into().ok().unwrap(),
        from_p: from_p.try_into().ok().unwrap(),
    }
}

fn identity(n: usize) -> SparseMatrix {
    (0..n).map(|i| vec![(i, BigRational::one())]).collect()
}

fn sparse(a: &[Vec<BigRational>]) -> SparseMatrix {
    a.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            let mut out = vec![BigRational::zero(); n];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Gauss-Jordan inverse; the matrices here are always invertible.
pub(crate) fn invert(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Coefficient of `m_mu` in `b_lambda`.
fn m_coefficient(b: Basis, lam: &Partition, mu: &Partition) -> BigInt {
    match b {
        Basis::M => {
            if lam == mu {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Basis::S => kostka(lam, mu),
        _ => {
            let mut memo = HashMap::new();
            fill_count(b, lam.parts(), 0, mu.parts().to_vec(), &mut memo)
        }
    }
}

/// Number of ways to fill the columns `rem` (indexed by the variables) from
/// the factors `lam[i..]`, each factor being `p_k`, `e_k` or `h_k`.
fn fill_count(
    b: Basis,
    lam: &[u32],
    i: usize,
    rem: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
) -> BigInt {
    if i == lam.len() {
        return if rem.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
    }
    if let Some(v) = memo.get(&(i, rem.clone())) {
        return v.clone();
    }
    let k = lam[i];
    let mut total = BigInt::zero();
    let mut push = |next: Vec<u32>, memo: &mut HashMap<_, _>| {
        total += fill_count(b, lam, i + 1, next, memo);
    };
    match b {
        Basis::P => {
            for j in 0..rem.len() {
                if rem[j] >= k {
                    let mut next = rem.clone();
                    next[j] -= k;
                    push(next, memo);
                }
            }
        }
        Basis::E => {
            let avail: Vec<usize> = (0..rem.len()).filter(|&j| rem[j] > 0).collect();
            for_each_subset(&avail, k as usize, &mut |sub| {
                let mut next = rem.clone();
                for &j in sub {
                    next[j] -= 1;
                }
                push(next, memo);
            });
        }
        Basis::H => {
            let mut next = rem.clone();
            for_each_bounded_composition(&rem, k, 0, &mut next, &mut |v| push(v.to_vec(), memo));
        }
        _ => unreachable!(),
    }
    memo.insert((i, rem), total.clone());
    total
}

fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), f);
}

fn for_each_bounded_composition(rem: &[u32], k: u32, j: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if j == rem.len() {
        if k == 0 {
            f(cur);
        }
        return;
    }
    for take in 0..=k.min(rem[j]) {
        cur[j] = rem[j] - take;
        for_each_bounded_composition(rem, k - take, j + 1, cur, f);
    }
    cur[j] = rem[j];
}

/// Number of semistandard tableaux of shape `lam` and content `mu`, counted
/// by peeling horizontal strips of sizes `mu_l, mu_{l-1}, ...`.
pub(crate) fn kostka(lam: &Partition, mu: &Partition) -> BigInt {
    if lam.size() != mu.size() {
        return BigInt::zero();
    }
    let mut memo: HashMap<(Partition, usize), BigInt> = HashMap::new();
    fn rec(shape: &Partition, k: usize, mu: &[u32], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
        if k == 0 {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = memo.get(&(shape.clone(), k)) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for smaller in shape.remove_horizontal_strips(mu[k - 1]) {
            total += rec(&smaller, k - 1, mu, memo);
        }
        memo.insert((shape.clone(), k), total.clone());
        total
    }
    rec(lam, mu.len(), mu.parts(), &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_monomial_expansions() {
        // p_2 = m_2, p_11 = m_2 + 2 m_11, e_2 = m_11, h_2 = m_2 + m_11
        assert_eq!(m_coefficient(Basis::P, &p(&[1, 1]), &p(&[1, 1])), 2.into());
        assert_eq!(m_coefficient(Basis::E, &p(&[2]), &p(&[2])), 0.into());
        assert_eq!(m_coefficient(Basis::H, &p(&[2]), &p(&[1, 1])), 1.into());
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2.into());
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])), 2.into());
    }

    #[test]
    fn round_trip_matrices() {
        for n in 1..=6 {
            let t = tables(n);
            for b in Basis::ALL {
                let bi = b.index();
                for i in 0..t.parts.len() {
                    // b -> p -> b must return e_i
                    let mut acc = vec![BigRational::zero(); t.parts.len()];
                    for (k, x) in &t.to_p[bi][i] {
                        for (j, y) in &t.from_p[bi][*k] {
                            acc[*j] += x * y;
                        }
                    }
                    for (j, v) in acc.iter().enumerate() {
                        assert_eq!(v.is_one(), i == j);
                        assert!(i == j || v.is_zero());
                    }
                }
            }
        }
    }
}
