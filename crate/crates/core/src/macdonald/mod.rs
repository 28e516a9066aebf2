//! Modified Macdonald polynomials, partition statistics and the operators
//! diagonal in the `H~` basis.

mod hhl;
pub mod oracle;
mod pieri;
mod table;

use serde::{Deserialize, Serialize};

pub use oracle::{identity_oracle_suite, OracleEntry};
pub use pieri::PieriKind;
pub use table::{star_pairing, Fault, HEntry, Macdonald, MacdonaldTable};

use crate::error::{Error, Result};
use crate::qt::{IntPoly, QtRational};
use crate::symfunc::{b_poly, m_poly, plethysm_scalar, Alphabet, Basis, Partition, SymFun};

/// `B`, `T`, `Pi` and `w` of a nonempty partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuStats {
    pub mu: Partition,
    pub b: QtRational,
    pub t: QtRational,
    pub pi: QtRational,
    pub w: QtRational,
}

pub fn mu_stats(mu: &Partition) -> Result<MuStats> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let (mut tq, mut tt) = (0, 0);
    let mut pi = IntPoly::one();
    let mut w = IntPoly::one();
    for c in mu.cells() {
        let (a1, l1) = (mu.coarm(c), mu.coleg(c));
        tq += a1;
        tt += l1;
        if (a1, l1) != (0, 0) {
            pi = &pi * &(&IntPoly::one() - &IntPoly::monomial(1, a1, l1));
        }
        let (a, l) = (mu.arm(c), mu.leg(c));
        let f1 = &IntPoly::monomial(1, a, 0) - &IntPoly::monomial(1, 0, l + 1);
        let f2 = &IntPoly::monomial(1, 0, l) - &IntPoly::monomial(1, a + 1, 0);
        w = &w * &(&f1 * &f2);
    }
    Ok(MuStats {
        mu: mu.clone(),
        b: QtRational::from_poly(b_poly(mu)),
        t: QtRational::from_poly(IntPoly::monomial(1, tq, tt)),
        pi: QtRational::from_poly(pi),
        w: QtRational::from_poly(w),
    })
}

/// `M = (1 - q)(1 - t)`
pub fn m_value() -> QtRational {
    QtRational::from_poly(m_poly())
}

/// `H~_mu` in the Schur basis, from the shared table.
pub fn htilde(mu: &Partition) -> SymFun {
    table::MacdonaldTable::cached(mu.size())
        .get(mu)
        .expect("every partition is tabulated")
        .schur
        .clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaVariant {
    /// eigenvalue `F[B_mu]`
    Delta,
    /// eigenvalue `F[B_mu - 1]`
    DeltaPrime,
}

impl Macdonald {
    /// `F[B_mu]` or `F[B_mu - 1]`.
    pub fn delta_eigenvalue(&self, op: &SymFun, mu: &Partition, variant: DeltaVariant) -> Result<QtRational> {
        let mut alphabet = QtRational::from_poly(b_poly(mu));
        if variant == DeltaVariant::DeltaPrime {
            alphabet = &alphabet - &QtRational::one();
        }
        plethysm_scalar(op, &Alphabet::scalar(alphabet))
    }

    /// `Delta_F f` or `Delta'_F f`, in the Schur basis.
    pub fn delta(&self, op: &SymFun, f: &SymFun, variant: DeltaVariant) -> Result<SymFun> {
        if f.homogeneous_degree().is_none() && !f.is_zero() {
            return Err(Error::Precondition("Delta operators act on homogeneous functions".into()));
        }
        let op = op.to_basis(Basis::P);
        self.apply_eigen(f, |mu| self.delta_eigenvalue(&op, mu, variant))
    }

    /// `nabla H~_mu = T_mu H~_mu`
    pub fn nabla(&self, f: &SymFun) -> Result<SymFun> {
        self.apply_eigen(f, |mu| {
            if mu.is_empty() {
                Ok(QtRational::one())
            } else {
                Ok(mu_stats(mu)?.t)
            }
        })
    }
}

/// `Delta_F f` with tables sized to `f`.
pub fn delta_op(op: &SymFun, f: &SymFun, variant: DeltaVariant) -> Result<SymFun> {
    let n = f.homogeneous_degree().unwrap_or(0);
    Macdonald::new(n).delta(op, f, variant)
}

pub fn nabla(f: &SymFun) -> Result<SymFun> {
    let n = f.homogeneous_degree().unwrap_or(0);
    Macdonald::new(n).nabla(f)
}

pub fn pieri_coeffs(
    p: &Partition,
    k: u32,
    kind: PieriKind,
) -> Result<std::collections::BTreeMap<Partition, QtRational>> {
    let n = match kind {
        PieriKind::C => p.size(),
        PieriKind::D => p.size() + k,
    };
    Macdonald::new(n).pieri_coeffs(p, k, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn statistics() {
        let one = mu_stats(&p(&[1])).unwrap();
        assert!(one.b.is_one() && one.t.is_one() && one.pi.is_one());
        assert_eq!(one.w, m_value());
        assert_eq!(mu_stats(&p(&[2, 1])).unwrap().t, &QtRational::q() * &QtRational::t());
        assert_eq!(mu_stats(&p(&[2])).unwrap().b, "1 + q".parse().unwrap());
        assert_eq!(mu_stats(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn small_htilde() {
        assert_eq!(htilde(&p(&[1])), SymFun::s(&p(&[1]), 1).unwrap());
        let h2 = htilde(&p(&[2]));
        assert_eq!(h2.swap_qt(), htilde(&p(&[1, 1])));
    }

    #[test]
    fn nabla_examples() {
        let mac = Macdonald::new(3);
        let e1 = SymFun::e(1, 1).unwrap();
        assert_eq!(mac.nabla(&e1).unwrap(), e1);
        let e2 = SymFun::e(2, 2).unwrap();
        let c = mac.expand(&e2).unwrap();
        let q_part = mac.htilde(&p(&[2])).unwrap().scale(&(&c[&p(&[2])] * &QtRational::q()));
        let t_part = mac.htilde(&p(&[1, 1])).unwrap().scale(&(&c[&p(&[1, 1])] * &QtRational::t()));
        assert_eq!(mac.nabla(&e2).unwrap(), q_part.add(&t_part));
    }

    #[test]
    fn delta_examples() {
        let mac = Macdonald::new(4);
        let f = SymFun::e(3, 3).unwrap().add(&SymFun::h(3, 3).unwrap().scale(&QtRational::q()));
        let e0 = SymFun::one(3);
        assert_eq!(mac.delta(&e0, &f, DeltaVariant::DeltaPrime).unwrap(), f);
        let e3 = SymFun::e(3, 3).unwrap();
        assert_eq!(mac.delta(&e3, &f, DeltaVariant::Delta).unwrap(), mac.nabla(&f).unwrap());
        for k in 1..=3 {
            let ek = SymFun::e(k, 3).unwrap();
            let ek1 = SymFun::e(k - 1, 3).unwrap();
            let lhs = mac.delta(&ek, &f, DeltaVariant::Delta).unwrap();
            let rhs = mac
                .delta(&ek, &f, DeltaVariant::DeltaPrime)
                .unwrap()
                .add(&mac.delta(&ek1, &f, DeltaVariant::DeltaPrime).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn star_and_solve_agree() {
        let mac = Macdonald::new(4);
        let f = SymFun::s(&p(&[2, 1, 1]), 4).unwrap().add(&SymFun::p(4, 4).unwrap());
        assert_eq!(mac.expand(&f).unwrap(), mac.solve(&f, 4).unwrap());
    }
}
