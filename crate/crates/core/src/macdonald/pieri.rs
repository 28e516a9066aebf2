use std::collections::BTreeMap;

use super::table::Macdonald;
use crate::error::{Error, Result};
use crate::qt::QtRational;
use crate::symfunc::{plethysm, Alphabet, Basis, Partition, SymFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// `h_k^perp H~_mu = sum_nu c_{mu nu} H~_nu`
    C,
    /// `e_k[X/M] H~_nu = sum_mu d_{mu nu} H~_mu`
    D,
}

/// Solves `A x = b` over `Q(q, t)` by Gauss-Jordan elimination; `None` when
/// the columns of `A` are dependent.
pub(crate) fn solve_linear(mut a: Vec<Vec<QtRational>>, mut b: Vec<QtRational>) -> Option<Vec<QtRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            return None;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        b[r] = &b[r] * &inv;
        let (prow, pb) = (a[r].clone(), b[r].clone());
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for (x, y) in a[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
            b[i] = &b[i] - &(&f * &pb);
        }
        r += 1;
    }
    // consistency of the remaining equations
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

impl Macdonald {
    /// Coefficients of a homogeneous `f` of degree `n` in the `H~` basis,
    /// by solving the Schur-coefficient system of the table.
    pub fn solve(&self, f: &SymFun, n: u32) -> Result<BTreeMap<Partition, QtRational>> {
        if let Some(d) = f.homogeneous_degree() {
            if d != n {
                return Err(Error::DegreeMismatch { expected: n as usize, found: d as usize });
            }
        }
        let table = self.table(n)?;
        let lambdas = Partition::all(n);
        let mus: Vec<&Partition> = table.entries().map(|(m, _)| m).collect();
        let a: Vec<Vec<QtRational>> = lambdas
            .iter()
            .map(|lam| mus.iter().map(|mu| table.get(mu).unwrap().schur.coeff(lam)).collect())
            .collect();
        let fs = f.to_basis(Basis::S);
        let b: Vec<QtRational> = lambdas.iter().map(|lam| fs.coeff(lam)).collect();
        let x = solve_linear(a, b).ok_or(Error::Singular(n as usize))?;
        Ok(mus.into_iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// `c_{mu nu}^{(k)}` over `nu`, or `d_{mu nu}^{(k)}` over `mu` when
    /// `kind` is [`PieriKind::D`] (then `p` is `nu`).
    pub fn pieri_coeffs(&self, p: &Partition, k: u32, kind: PieriKind) -> Result<BTreeMap<Partition, QtRational>> {
        match kind {
            PieriKind::C => {
                if k > p.size() {
                    return Ok(BTreeMap::new());
                }
                let f = self.htilde(p)?.skew_h(k);
                self.solve(&f, p.size() - k)
            }
            PieriKind::D => {
                let n = p.size() + k;
                let ek = plethysm(&SymFun::e(k, n)?, &Alphabet::x_over_m());
                let f = ek.mul(&self.htilde(p)?.with_bound(n)?)?;
                self.solve(&f, n)
            }
        }
    }

    /// Generalised Pieri coefficients `d^A_{mu nu}` of `A H~_nu`.
    pub fn pieri_general(&self, a: &SymFun, nu: &Partition) -> Result<BTreeMap<Partition, QtRational>> {
        let deg = a.homogeneous_degree().unwrap_or(0);
        let n = nu.size() + deg;
        let f = a.with_bound(n)?.mul(&self.htilde(nu)?.with_bound(n)?)?;
        self.solve(&f, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let q = QtRational::q();
        let one = QtRational::one();
        // [[1, 1], [q, 1]] x = [2, 1 + q]  ->  x = [1, 1]
        let a = vec![vec![one.clone(), one.clone()], vec![q.clone(), one.clone()]];
        let b = vec![QtRational::from_int(2), &one + &q];
        assert_eq!(solve_linear(a, b).unwrap(), vec![one.clone(), one.clone()]);
        let sing = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert!(solve_linear(sing, vec![one.clone(), one]).is_none());
    }
}
