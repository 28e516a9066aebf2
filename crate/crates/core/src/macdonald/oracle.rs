//! Exact checks of the classical identities relating `H~`, the Pieri
//! coefficients and the Delta operators. Every check reports a witness
//! on failure instead of panicking.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::{mu_stats, DeltaVariant, Macdonald, PieriKind};
use crate::error::Result;
use crate::qt::{binom2, q_analogue, qbinom, IntPoly, QtRational};
use crate::symfunc::{
    m_poly, plethysm, plethysm_scalar, Alphabet, Basis, BiSymFun, Partition, SymFun,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEntry {
    pub identity: String,
    pub size: u32,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

type Check = Result<Option<String>>;

fn entry(identity: &str, size: u32, outcome: Check) -> OracleEntry {
    let witness = match outcome {
        Ok(w) => w,
        Err(e) => Some(format!("error: {e}")),
    };
    OracleEntry { identity: identity.to_string(), size, passed: witness.is_none(), witness }
}

fn nonempty(n: u32) -> Vec<Partition> {
    (1..=n).flat_map(Partition::all).collect()
}

fn scalar_alpha(p: IntPoly) -> Alphabet {
    Alphabet::scalar(QtRational::from_poly(p))
}

fn mb(mu: &Partition) -> Alphabet {
    Alphabet::m_b(mu).expect("nonempty")
}

fn b_of(mu: &Partition) -> Alphabet {
    scalar_alpha(crate::symfunc::b_poly(mu))
}

fn over_m() -> Alphabet {
    Alphabet::x_over_m()
}

/// Runs every identity for all sizes up to `max_n` on the shared tables.
pub fn identity_oracle_suite(max_n: u32) -> Vec<OracleEntry> {
    run_oracles(&Macdonald::new(max_n), max_n)
}

/// Same, against an explicit (possibly corrupted) set of tables.
pub fn run_oracles(mac: &Macdonald, max_n: u32) -> Vec<OracleEntry> {
    let mut jobs: Vec<(&'static str, u32)> = Vec::new();
    for n in 1..=max_n {
        for id in IDENTITIES {
            jobs.push((id, n));
        }
    }
    let pieri = PieriCache::default();
    jobs.into_par_iter()
        .map(|(id, n)| entry(id, n, run_one(mac, &pieri, id, n, max_n)))
        .collect()
}

/// One identity at one size.
pub fn run_single(mac: &Macdonald, identity: &str, n: u32, max_n: u32) -> OracleEntry {
    entry(identity, n, run_one(mac, &PieriCache::default(), identity, n, max_n))
}

pub const IDENTITIES: [&str; 13] = [
    "conjugation_symmetry",
    "star_norm",
    "reciprocity",
    "cauchy",
    "en_expansion",
    "e_h_expansion",
    "p_expansion",
    "rel_c_d",
    "sum_b_mu",
    "summation",
    "deltaprime",
    "haglund",
    "master_equation",
];

fn run_one(mac: &Macdonald, pieri: &PieriCache, id: &str, n: u32, max_n: u32) -> Check {
    match id {
        "conjugation_symmetry" => conjugation_symmetry(mac, n),
        "star_norm" => star_norm(mac, n),
        "reciprocity" => reciprocity(mac, n, max_n),
        "cauchy" => cauchy(mac, n),
        "en_expansion" => en_expansion(mac, n),
        "e_h_expansion" => e_h_expansion(mac, n),
        "p_expansion" => p_expansion(mac, n),
        "rel_c_d" => rel_c_d(mac, pieri, n),
        "sum_b_mu" => sum_b_mu(mac, pieri, n),
        "summation" => summation(mac, pieri, n),
        "deltaprime" => deltaprime(mac, n),
        "haglund" => haglund(mac, pieri, n),
        "master_equation" => master_equation(mac, n),
        _ => unreachable!("unknown identity {id}"),
    }
}

/// Memoised Pieri coefficients; keyed by kind, partition and `k`.
#[derive(Default)]
pub struct PieriCache {
    inner: std::sync::Mutex<HashMap<(bool, Partition, u32), BTreeMap<Partition, QtRational>>>,
}

impl PieriCache {
    pub fn get(&self, mac: &Macdonald, p: &Partition, k: u32, kind: PieriKind) -> Result<BTreeMap<Partition, QtRational>> {
        let key = (kind == PieriKind::C, p.clone(), k);
        if let Some(v) = self.inner.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = mac.pieri_coeffs(p, k, kind)?;
        self.inner.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }
}

fn mismatch(what: &str, lhs: &SymFun, rhs: &SymFun) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: lhs = {}, rhs = {}", lhs.to_basis(Basis::S), rhs.to_basis(Basis::S)))
}

fn conjugation_symmetry(mac: &Macdonald, n: u32) -> Check {
    for mu in Partition::all(n) {
        let a = mac.htilde(&mu)?.swap_qt();
        let b = mac.htilde(&mu.conjugate())?;
        if let Some(w) = mismatch(&format!("mu = {mu}"), &a, b) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn star_norm(mac: &Macdonald, n: u32) -> Check {
    let table = mac.table(n)?;
    for (mu, e) in table.entries() {
        let w = mu_stats(mu)?.w;
        if e.norm != w {
            return Ok(Some(format!("mu = {mu}: <H,H>_* = {}, w = {w}", e.norm)));
        }
    }
    Ok(None)
}

fn reciprocity(mac: &Macdonald, n: u32, max_n: u32) -> Check {
    for alpha in Partition::all(n) {
        let pa = mu_stats(&alpha)?.pi;
        for beta in nonempty(max_n) {
            let pb = mu_stats(&beta)?.pi;
            let lhs = &plethysm_scalar(mac.htilde_power(&alpha)?, &mb(&beta))? / &pa;
            let rhs = &plethysm_scalar(mac.htilde_power(&beta)?, &mb(&alpha))? / &pb;
            if lhs != rhs {
                return Ok(Some(format!("alpha = {alpha}, beta = {beta}: {lhs} != {rhs}")));
            }
        }
    }
    Ok(None)
}

fn cauchy(mac: &Macdonald, n: u32) -> Check {
    let inv_m = Alphabet::scalar(QtRational::new(IntPoly::one(), m_poly()));
    let lhs = BiSymFun::kernel(&SymFun::e(n, n)?, &inv_m)?;
    let mut parts = Vec::new();
    for mu in Partition::all(n) {
        let h = mac.htilde_power(&mu)?;
        parts.push(BiSymFun::tensor(h, h).scale(&mu_stats(&mu)?.w.recip()));
    }
    let rhs = BiSymFun::sum(&parts);
    Ok((lhs != rhs).then(|| format!("e_{n}[XY/M] differs from the H~ kernel sum")))
}

fn en_expansion(mac: &Macdonald, n: u32) -> Check {
    let m = QtRational::from_poly(m_poly());
    let rhs = mac.combine_over_w(n, n, |mu| {
        let s = mu_stats(mu)?;
        Ok(&(&m * &s.b) * &s.pi)
    })?;
    Ok(mismatch(&format!("e_{n}"), &SymFun::e(n, n)?, &rhs))
}

fn e_h_expansion(mac: &Macdonald, n: u32) -> Check {
    for k in 0..=n {
        let hk = plethysm(&SymFun::h(k, n)?, &over_m());
        let en = plethysm(&SymFun::e(n - k, n)?, &over_m());
        let lhs = hk.mul(&en)?;
        let ek = SymFun::e(k, n)?;
        let rhs = mac.combine_over_w(n, n, |mu| plethysm_scalar(&ek, &b_of(mu)))?;
        if let Some(w) = mismatch(&format!("k = {k}"), &lhs, &rhs) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn p_expansion(mac: &Macdonald, n: u32) -> Check {
    let m = QtRational::from_poly(m_poly());
    let qn = q_analogue(n);
    let factor = QtRational::from_poly(&qn * &qn.swap_qt());
    let rhs = mac.combine_over_w(n, n, |mu| Ok(&(&factor * &m) * &mu_stats(mu)?.pi))?;
    Ok(mismatch(&format!("omega p_{n}"), &SymFun::p(n, n)?.omega(), &rhs))
}

fn rel_c_d(mac: &Macdonald, pieri: &PieriCache, n: u32) -> Check {
    for mu in Partition::all(n) {
        let wm = mu_stats(&mu)?.w;
        for k in 1..n {
            let c = pieri.get(mac, &mu, k, PieriKind::C)?;
            for nu in mu.subpartitions_by(k) {
                let d = pieri.get(mac, &nu, k, PieriKind::D)?;
                let dv = d.get(&mu).cloned().unwrap_or_default();
                let cv = c.get(&nu).cloned().unwrap_or_default();
                let rhs = &(&wm / &mu_stats(&nu)?.w) * &dv;
                if cv != rhs {
                    return Ok(Some(format!("mu = {mu}, nu = {nu}, k = {k}: c = {cv}, (w_mu/w_nu) d = {rhs}")));
                }
            }
            // no coefficients outside nu contained in mu
            if let Some(bad) = c.keys().find(|nu| !mu.contains_partition(nu)) {
                return Ok(Some(format!("c_{{{mu},{bad}}} nonzero outside containment")));
            }
        }
    }
    Ok(None)
}

fn sum_b_mu(mac: &Macdonald, pieri: &PieriCache, n: u32) -> Check {
    for mu in Partition::all(n) {
        let total: QtRational = pieri.get(mac, &mu, 1, PieriKind::C)?.into_values().sum();
        let b = mu_stats(&mu)?.b;
        if total != b {
            return Ok(Some(format!("mu = {mu}: sum = {total}, B = {b}")));
        }
    }
    Ok(None)
}

fn summation(mac: &Macdonald, pieri: &PieriCache, n: u32) -> Check {
    for alpha in Partition::all(n) {
        for l in 1..=n {
            let c = pieri.get(mac, &alpha, l, PieriKind::C)?;
            let mut total = QtRational::zero();
            for (nu, v) in &c {
                let t = if nu.is_empty() { QtRational::one() } else { mu_stats(nu)?.t };
                total = &total + &(v * &t);
            }
            let rhs = plethysm_scalar(&SymFun::e(n - l, n)?, &b_of(&alpha))?;
            if total != rhs {
                return Ok(Some(format!("alpha = {alpha}, l = {l}: {total} != {rhs}")));
            }
        }
    }
    Ok(None)
}

/// A generic element of degree `n`: distinct small coefficients on all `s_lambda`.
pub(crate) fn generic(n: u32) -> SymFun {
    let terms = Partition::all(n)
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, QtRational::from_int(i as i64 + 1)));
    SymFun::from_terms(Basis::S, n, terms).expect("within bound")
}

fn deltaprime(mac: &Macdonald, n: u32) -> Check {
    let f = generic(n);
    for k in 1..=n + 1 {
        let ek = SymFun::e(k, k.max(n))?;
        let ek1 = SymFun::e(k - 1, k.max(n))?;
        let lhs = mac.delta(&ek, &f, DeltaVariant::Delta)?;
        let rhs = mac
            .delta(&ek, &f, DeltaVariant::DeltaPrime)?
            .add(&mac.delta(&ek1, &f, DeltaVariant::DeltaPrime)?);
        let rhs = if k > n { SymFun::zero(Basis::S, n) } else { rhs };
        if let Some(w) = mismatch(&format!("k = {k}"), &lhs, &rhs) {
            return Ok(Some(w));
        }
    }
    let nabla = mac.nabla(&f)?;
    let en = mac.delta(&SymFun::e(n, n)?, &f, DeltaVariant::Delta)?;
    Ok(mismatch("nabla = Delta_{e_n}", &nabla, &en))
}

/// `A = e_j[X/M]` and `F = h_m[X/M] e_k[X/M]`, for every `nu` with `|nu| + j = n`.
fn haglund(mac: &Macdonald, pieri: &PieriCache, n: u32) -> Check {
    for j in 1..=3.min(n - 1) {
        let ej = SymFun::e(j, mac.max_degree())?;
        for m in 0..=3 {
            for k in 0..=3 {
                if m + k == 0 || m + k > mac.max_degree() {
                    continue;
                }
                let bound = mac.max_degree();
                let f = plethysm(&SymFun::h(m, bound)?, &over_m()).mul(&plethysm(&SymFun::e(k, bound)?, &over_m()))?;
                let delta_f = mac.delta(&ej, &f, DeltaVariant::Delta)?;
                for nu in Partition::all(n - j) {
                    let d = pieri.get(mac, &nu, j, PieriKind::D)?;
                    let mut lhs = QtRational::zero();
                    for (mu, dv) in &d {
                        let pi = mu_stats(mu)?.pi;
                        lhs = &lhs + &(&(&pi * &plethysm_scalar(&f, &mb(mu))?) * dv);
                    }
                    let rhs = &mu_stats(&nu)?.pi * &plethysm_scalar(&delta_f, &mb(&nu))?;
                    if lhs != rhs {
                        return Ok(Some(format!("j = {j}, m = {m}, k = {k}, nu = {nu}: {lhs} != {rhs}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn master_equation(mac: &Macdonald, b: u32) -> Check {
    let one_minus_t = &IntPoly::one() - &IntPoly::t();
    let x_over_1mq = Alphabet::scaled_x(QtRational::new(IntPoly::one(), &IntPoly::one() - &IntPoly::q()));
    let hq: Vec<SymFun> = (0..=b).map(|i| plethysm(&SymFun::h(i, b).unwrap(), &x_over_1mq)).collect();
    let hm: Vec<SymFun> = (0..=b).map(|i| plethysm(&SymFun::h(i, b).unwrap(), &over_m())).collect();
    let em: Vec<SymFun> = (0..=b).map(|i| plethysm(&SymFun::e(i, b).unwrap(), &over_m())).collect();
    for k in 1..=3u32 {
        for m in 0..=3u32 {
            let hk = SymFun::h(k, k)?;
            let em_op = SymFun::e(m, m.max(1))?;
            let lhs = mac.combine_over_w(b, b, |g| {
                let a = plethysm_scalar(&hk, &scalar_alpha(&one_minus_t * &crate::symfunc::b_poly(g)))?;
                let e = plethysm_scalar(&em_op, &b_of(g))?;
                Ok(&a * &e)
            })?;
            let mut rhs = SymFun::zero(Basis::P, b);
            for j in 0..=m {
                for s in 0..=k {
                    if s + m > b {
                        continue;
                    }
                    let (s_, j_, k_) = (s as i64, j as i64, k as i64);
                    let coef = &qbinom(s_ + j_, s_) * &qbinom(k_ + j_ - 1, s_ + j_ - 1);
                    if coef.is_zero() || s + j > b {
                        continue;
                    }
                    let coef = coef.shift_up(binom2(s_) as u32, m - j);
                    let term = hq[(s + j) as usize].mul(&hm[(m - j) as usize])?.mul(&em[(b - s - m) as usize])?;
                    rhs = rhs.add(&term.scale(&QtRational::from_poly(coef)));
                }
            }
            if let Some(w) = mismatch(&format!("b = {b}, k = {k}, m = {m}"), &lhs, &rhs) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
