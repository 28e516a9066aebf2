use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use super::hhl::htilde_schur;
use crate::error::{Error, Result};
use crate::qt::{Accumulator, IntPoly, QtRational};
use crate::symfunc::{Basis, Partition, SymFun};

/// `H~_mu` stored in the two forms the algorithms need.
#[derive(Clone, Debug)]
pub struct HEntry {
    pub schur: SymFun,
    pub power: SymFun,
    /// `<H~_mu, H~_mu>_*`
    pub norm: QtRational,
}

/// The modified Macdonald polynomials of one degree.
#[derive(Clone, Debug)]
pub struct MacdonaldTable {
    n: u32,
    entries: BTreeMap<Partition, HEntry>,
}

/// A single corrupted Schur coefficient, for mutation testing.
#[derive(Clone, Debug)]
pub struct Fault {
    pub mu: Partition,
    pub lambda: Partition,
    pub delta: QtRational,
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<MacdonaldTable>>>> = OnceLock::new();

/// `(-1)^{|l| - l(l)} z_l prod_i (1 - q^{l_i})(1 - t^{l_i})`
pub(crate) fn star_weight(lam: &Partition) -> QtRational {
    let mut w = IntPoly::constant(lam.z());
    for &k in lam.parts() {
        let a = &IntPoly::one() - &IntPoly::monomial(1, k, 0);
        let b = &IntPoly::one() - &IntPoly::monomial(1, 0, k);
        w = &(&w * &a) * &b;
    }
    if (lam.size() as usize - lam.len()) % 2 == 1 {
        w = -w;
    }
    QtRational::from_poly(w)
}

/// The star scalar product `<f, g>_*`, under which the `H~_mu` are orthogonal.
pub fn star_pairing(f: &SymFun, g: &SymFun) -> QtRational {
    let (f, g) = (f.to_basis(Basis::P), g.to_basis(Basis::P));
    let mut acc = Accumulator::new();
    for (lam, c) in f.terms() {
        let d = g.coeff(lam);
        if !d.is_zero() {
            acc.add(&(&(c * &d) * &star_weight(lam)));
        }
    }
    acc.finish()
}

fn entry_from_schur(schur: SymFun) -> HEntry {
    let power = schur.to_basis(Basis::P);
    let norm = star_pairing(&power, &power);
    HEntry { schur, power, norm }
}

impl MacdonaldTable {
    pub fn build(n: u32) -> Self {
        let parts = Partition::all(n);
        let entries: BTreeMap<Partition, HEntry> = parts
            .into_par_iter()
            .map(|mu| {
                let h = if n == 0 { SymFun::one(0) } else { htilde_schur(&mu, n) };
                (mu, entry_from_schur(h))
            })
            .collect();
        Self { n, entries }
    }

    /// The shared table of degree `n`, built on first use.
    pub fn cached(n: u32) -> Arc<Self> {
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().unwrap().get(&n) {
            return t.clone();
        }
        let built = Arc::new(Self::build(n));
        cache.write().unwrap().entry(n).or_insert(built).clone()
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &HEntry)> {
        self.entries.iter()
    }

    pub fn get(&self, mu: &Partition) -> Option<&HEntry> {
        self.entries.get(mu)
    }

    /// A copy with one Schur coefficient shifted by `fault.delta`.
    pub fn with_fault(&self, fault: &Fault) -> Self {
        let mut out = self.clone();
        if let Some(e) = out.entries.get_mut(&fault.mu) {
            let bump = SymFun::s(&fault.lambda, self.n.max(fault.lambda.size()))
                .expect("bound chosen to fit")
                .scale(&fault.delta);
            *e = entry_from_schur(e.schur.add(&bump));
        }
        out
    }
}

/// The modified Macdonald polynomials of every degree up to a bound.
#[derive(Clone, Debug)]
pub struct Macdonald {
    tables: Vec<Arc<MacdonaldTable>>,
}

impl Macdonald {
    pub fn new(max_degree: u32) -> Self {
        Self { tables: (0..=max_degree).map(MacdonaldTable::cached).collect() }
    }

    pub fn max_degree(&self) -> u32 {
        self.tables.len() as u32 - 1
    }

    pub fn with_fault(&self, fault: &Fault) -> Self {
        let mut out = self.clone();
        let n = fault.mu.size() as usize;
        if n < out.tables.len() {
            out.tables[n] = Arc::new(out.tables[n].with_fault(fault));
        }
        out
    }

    pub fn table(&self, n: u32) -> Result<&MacdonaldTable> {
        self.tables
            .get(n as usize)
            .map(|t| t.as_ref())
            .ok_or(Error::DegreeOverflow { needed: n as usize, bound: self.max_degree() as usize })
    }

    fn entry(&self, mu: &Partition) -> Result<&HEntry> {
        Ok(self.table(mu.size())?.get(mu).expect("every partition is tabulated"))
    }

    /// `H~_mu` in the Schur basis.
    pub fn htilde(&self, mu: &Partition) -> Result<&SymFun> {
        Ok(&self.entry(mu)?.schur)
    }

    pub fn htilde_power(&self, mu: &Partition) -> Result<&SymFun> {
        Ok(&self.entry(mu)?.power)
    }

    /// Coefficients of `f` in the `H~` basis, by star-orthogonality.
    pub fn expand(&self, f: &SymFun) -> Result<BTreeMap<Partition, QtRational>> {
        let fp = f.to_basis(Basis::P);
        let mut degrees: Vec<u32> = fp.terms().map(|(l, _)| l.size()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut out = BTreeMap::new();
        for n in degrees {
            let table = self.table(n)?;
            let part = fp.homogeneous(n);
            let coeffs: Vec<(Partition, QtRational)> = table
                .entries
                .par_iter()
                .map(|(mu, e)| (mu.clone(), &star_pairing(&part, &e.power) / &e.norm))
                .collect();
            out.extend(coeffs.into_iter().filter(|(_, c)| !c.is_zero()));
        }
        Ok(out)
    }

    /// `sum_mu c_mu H~_mu` in the Schur basis.
    pub fn combine(&self, coeffs: &BTreeMap<Partition, QtRational>, bound: u32) -> Result<SymFun> {
        let mut acc: BTreeMap<Partition, Accumulator> = BTreeMap::new();
        for (mu, c) in coeffs {
            for (lam, k) in self.htilde(mu)?.terms() {
                acc.entry(lam.clone()).or_default().add(&(c * k));
            }
        }
        SymFun::from_terms(Basis::S, bound, acc.into_iter().map(|(l, a)| (l, a.finish())))
    }

    /// `sum_mu a_mu H~_mu / w_mu` over `mu |- n`, in the Schur basis.
    pub fn combine_over_w<F>(&self, n: u32, bound: u32, numer: F) -> Result<SymFun>
    where
        F: Fn(&Partition) -> Result<QtRational> + Sync,
    {
        let table = self.table(n)?;
        let coeffs = table
            .entries
            .par_iter()
            .map(|(mu, e)| {
                let w = if mu.is_empty() { e.norm.clone() } else { super::mu_stats(mu)?.w };
                Ok((mu.clone(), &numer(mu)? / &w))
            })
            .collect::<Result<_>>()?;
        self.combine(&coeffs, bound)
    }

    /// Multiplies each `H~_mu` coefficient of `f` by `eigen(mu)`.
    pub fn apply_eigen<F>(&self, f: &SymFun, eigen: F) -> Result<SymFun>
    where
        F: Fn(&Partition) -> Result<QtRational> + Sync,
    {
        let coeffs = self
            .expand(f)?
            .into_par_iter()
            .map(|(mu, c)| Ok((eigen(&mu)? * c, mu)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, mu)| (mu, c))
            .collect();
        self.combine(&coeffs, f.bound())
    }
}

