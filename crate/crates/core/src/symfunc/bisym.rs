use std::collections::BTreeMap;

use super::partition::Partition;
use super::plethysm::Alphabet;
use super::symfun::SymFun;
use super::Basis;
use crate::error::{Error, Result};
use crate::qt::{Accumulator, QtRational};

/// A symmetric function in two alphabets `X` and `Y`, stored on the basis
/// `p_lambda[X] p_mu[Y]`. Used for Cauchy-type kernel identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiSymFun {
    terms: BTreeMap<(Partition, Partition), QtRational>,
}

impl BiSymFun {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `f[X] g[Y]`
    pub fn tensor(f: &SymFun, g: &SymFun) -> Self {
        let (f, g) = (f.to_basis(Basis::P), g.to_basis(Basis::P));
        let mut terms = BTreeMap::new();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                terms.insert((a.clone(), b.clone()), c * d);
            }
        }
        Self { terms }
    }

    /// `f[X Y R]` for an X-free alphabet `R`: `p_lambda` becomes
    /// `prod_i p_{lambda_i}[R] p_lambda[X] p_lambda[Y]`.
    pub fn kernel(f: &SymFun, r: &Alphabet) -> Result<Self> {
        if r.has_x() {
            return Err(Error::Precondition("kernel alphabet must be X-free".into()));
        }
        let f = f.to_basis(Basis::P);
        let mut cache: BTreeMap<u32, QtRational> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        for (lam, c) in f.terms() {
            let mut w = c.clone();
            for &k in lam.parts() {
                let v = cache.entry(k).or_insert_with(|| r.power_eval(k).0);
                w = &w * &*v;
            }
            if !w.is_zero() {
                terms.insert((lam.clone(), lam.clone()), w);
            }
        }
        Ok(Self { terms })
    }

    pub fn add(&self, other: &BiSymFun) -> Self {
        let mut acc: BTreeMap<(Partition, Partition), Accumulator> = BTreeMap::new();
        for (k, v) in self.terms.iter().chain(other.terms.iter()) {
            acc.entry(k.clone()).or_default().add(v);
        }
        Self::from_acc(acc)
    }

    pub fn scale(&self, c: &QtRational) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { terms }
    }

    /// Sum of a family, with one accumulation per coefficient.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a BiSymFun>) -> Self {
        let mut acc: BTreeMap<(Partition, Partition), Accumulator> = BTreeMap::new();
        for f in items {
            for (k, v) in &f.terms {
                acc.entry(k.clone()).or_default().add(v);
            }
        }
        Self::from_acc(acc)
    }

    fn from_acc(acc: BTreeMap<(Partition, Partition), Accumulator>) -> Self {
        let terms = acc
            .into_iter()
            .map(|(k, a)| (k, a.finish()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &QtRational)> {
        self.terms.iter()
    }
}
