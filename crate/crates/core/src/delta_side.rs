//! The polynomials `C_{n,k}^{(m)} = Delta_{h_m} Delta'_{e_{k-1}} e_n` at
//! `t = 0` or `q = 0`, the function `A(i, j, m)`, and the identities that
//! relate them.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macdonald::{DeltaVariant, Macdonald};
use crate::qt::{binom2, qbinom, specialize, tbinom, Assignment, IntPoly, QtRational};
use crate::symfunc::{b_poly, plethysm, plethysm_scalar, Alphabet, Basis, Partition, SymFun};

/// Which variable survives the specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// `t = 0`, polynomials in `q`
    #[serde(rename = "q")]
    QSide,
    /// `q = 0`, polynomials in `t`
    #[serde(rename = "t")]
    TSide,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::QSide, Flavor::TSide];

    pub fn assignment(self) -> Assignment {
        match self {
            Flavor::QSide => Assignment::t_zero(),
            Flavor::TSide => Assignment::q_zero(),
        }
    }

    /// Gaussian binomial in the surviving variable; zero outside `0 <= k <= n`.
    pub fn binom(self, n: i64, k: i64) -> IntPoly {
        match self {
            Flavor::QSide => qbinom(n, k),
            Flavor::TSide => tbinom(n, k),
        }
    }

    pub fn power(self, e: u32) -> IntPoly {
        match self {
            Flavor::QSide => IntPoly::monomial(1, e, 0),
            Flavor::TSide => IntPoly::monomial(1, 0, e),
        }
    }

    /// `[n]` in the surviving variable.
    pub fn analogue(self, n: u32) -> IntPoly {
        (0..n).fold(IntPoly::zero(), |acc, i| &acc + &self.power(i))
    }

    /// `X / (1 - v)` for the surviving variable `v`.
    fn x_over_one_minus(self) -> Alphabet {
        Alphabet::scaled_x(QtRational::new(IntPoly::one(), &IntPoly::one() - &self.power(1)))
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::QSide => "q",
            Flavor::TSide => "t",
        }
    }
}

/// `chi(P)`: 1 if the statement holds, 0 otherwise.
pub fn chi(p: bool) -> i64 {
    i64::from(p)
}

/// `^qC_{n,k}^{(m)}` or `^tC_{n,k}^{(m)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    pub flavor: Flavor,
    pub value: SymFun,
}

/// Macdonald tables plus a cache of unspecialized C-polynomials.
pub struct DeltaSide {
    mac: Macdonald,
    exact: Mutex<HashMap<(u32, u32, u32), SymFun>>,
}

/// Outcome of the blue and red formulas in both variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlueRed {
    pub blue_q: bool,
    pub red_q: bool,
    pub blue_t: bool,
    pub red_t: bool,
}

impl BlueRed {
    pub fn all(&self) -> bool {
        self.blue_q && self.red_q && self.blue_t && self.red_t
    }
}

/// One line of the delta-side report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSideRow {
    pub identity: String,
    pub parameters: String,
    pub passed: bool,
}

fn poly(p: IntPoly) -> QtRational {
    QtRational::from_poly(p)
}

/// `q^e` for a possibly negative `e`.
fn q_pow(e: i64) -> QtRational {
    let m = IntPoly::monomial(1, e.unsigned_abs() as u32, 0);
    if e >= 0 {
        poly(m)
    } else {
        QtRational::new(IntPoly::one(), m)
    }
}

fn binom2_u(n: i64) -> u32 {
    binom2(n) as u32
}

impl DeltaSide {
    pub fn new(max_degree: u32) -> Self {
        Self::with_macdonald(Macdonald::new(max_degree))
    }

    /// Uses the given tables, e.g. a deliberately corrupted copy.
    pub fn with_macdonald(mac: Macdonald) -> Self {
        Self { mac, exact: Mutex::new(HashMap::new()) }
    }

    pub fn macdonald(&self) -> &Macdonald {
        &self.mac
    }

    /// `Delta_{h_m} Delta'_{e_{k-1}} e_n` before specialization; zero when `k > n`.
    pub fn cpoly_exact(&self, n: u32, k: u32, m: u32) -> Result<SymFun> {
        if n == 0 || k == 0 {
            return Err(Error::Precondition(format!("C_{{n,k}} needs n, k >= 1 (got n = {n}, k = {k})")));
        }
        if let Some(v) = self.exact.lock().unwrap().get(&(n, k, m)) {
            return Ok(v.clone());
        }
        let value = if k > n {
            self.mac.table(n)?;
            SymFun::zero(Basis::S, n)
        } else {
            let hm = SymFun::h(m, m)?.to_basis(Basis::P);
            let ek = SymFun::e(k - 1, k - 1)?.to_basis(Basis::P);
            self.mac.apply_eigen(&SymFun::e(n, n)?, |mu| {
                let a = self.mac.delta_eigenvalue(&ek, mu, DeltaVariant::DeltaPrime)?;
                if a.is_zero() {
                    return Ok(a);
                }
                Ok(a * self.mac.delta_eigenvalue(&hm, mu, DeltaVariant::Delta)?)
            })?
        };
        self.exact.lock().unwrap().insert((n, k, m), value.clone());
        Ok(value)
    }

    pub fn cpoly(&self, n: u32, k: u32, m: u32, flavor: Flavor) -> Result<CPoly> {
        let value = self.cpoly_exact(n, k, m)?.specialize(&flavor.assignment())?;
        Ok(CPoly { n, k, m, flavor, value })
    }

    fn c(&self, n: u32, k: u32, m: u32, flavor: Flavor) -> Result<SymFun> {
        Ok(self.cpoly(n, k, m, flavor)?.value)
    }

    /// `^tC` equals `^qC` with `q` replaced by `t`.
    pub fn cpoly_symmetry_check(&self, n: u32, k: u32, m: u32) -> Result<bool> {
        let q = self.cpoly(n, k, m, Flavor::QSide)?.value;
        let t = self.cpoly(n, k, m, Flavor::TSide)?.value;
        Ok(q.specialize(&Assignment::q_to_t())? == t)
    }

    /// `A(i, j, m) = sum_{mu |- i+j} e_m[B_mu] e_i[B_mu] H~_mu / w_mu`.
    pub fn a_func(&self, i: u32, j: u32, m: u32) -> Result<SymFun> {
        if i == 0 {
            return Err(Error::Precondition("A(i, j, m) needs i >= 1".into()));
        }
        let n = i + j;
        let em = SymFun::e(m, m)?.to_basis(Basis::P);
        let ei = SymFun::e(i, i)?.to_basis(Basis::P);
        self.mac.combine_over_w(n, n, |mu| {
            let b = Alphabet::scalar(poly(b_poly(mu)));
            let x = plethysm_scalar(&ei, &b)?;
            if x.is_zero() {
                return Ok(x);
            }
            Ok(x * plethysm_scalar(&em, &b)?)
        })
    }

    pub fn a_symmetry_check(&self, i: u32, j: u32, m: u32) -> Result<bool> {
        let a = self.a_func(i, j, m)?;
        Ok(a == a.swap_qt())
    }

    /// `A(i,j,m)` at `q = 0` against its expansion in `h[X/(1-t)] e[X/M]`,
    /// and the same with `q` and `t` exchanged.
    pub fn crucial_check(&self, i: u32, j: u32, m: u32) -> Result<bool> {
        let a = self.a_func(i, j, m)?;
        let n = i + j;
        for flavor in [Flavor::TSide, Flavor::QSide] {
            let at = flavor.assignment();
            let lhs = a.specialize(&at)?;
            let mut rhs = SymFun::zero(Basis::P, n);
            for s in 0..=i {
                let coef = &(&flavor.power(binom2_u((i - s) as i64)) * &flavor.binom(m as i64, (i - s) as i64))
                    * &flavor.binom((s + m) as i64, s as i64);
                if coef.is_zero() || s + m > n {
                    continue;
                }
                let h = plethysm(&SymFun::h(s + m, n)?, &flavor.x_over_one_minus()).specialize(&at)?;
                let e = plethysm(&SymFun::e(n - s - m, n)?, &Alphabet::x_over_m()).specialize(&at)?;
                rhs = rhs.add(&h.mul(&e)?.scale(&poly(coef)));
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `h_i[X/(1-q)] e_j[X/M]` against its `H~` expansion.
    pub fn ghs_check(&self, i: u32, j: u32) -> Result<bool> {
        if i == 0 {
            return Err(Error::Precondition("the identity needs i >= 1".into()));
        }
        let n = i + j;
        let lhs = plethysm(&SymFun::h(i, n)?, &Flavor::QSide.x_over_one_minus())
            .mul(&plethysm(&SymFun::e(j, n)?, &Alphabet::x_over_m()))?;
        let one_minus_t = &IntPoly::one() - &IntPoly::t();
        let hs: Vec<SymFun> = (0..=i).map(|r| SymFun::h(r, r).map(|h| h.to_basis(Basis::P))).collect::<Result<_>>()?;
        let rhs = self.mac.combine_over_w(n, n, |mu| {
            let alpha = Alphabet::scalar(poly(&one_minus_t * &b_poly(mu)));
            let mut acc = QtRational::zero();
            for r in 1..=i as i64 {
                let i = i as i64;
                let sign = if (i - r) % 2 == 0 { 1 } else { -1 };
                let c = q_pow(binom2(r) + r - i * r) * poly(qbinom(i - 1, r - 1).scale(&sign.into()));
                acc += &(c * plethysm_scalar(&hs[r as usize], &alpha)?);
            }
            Ok(acc)
        })?;
        Ok(lhs == rhs)
    }

    /// `h_j^perp C_{n,k}^{(m)}` against the blue and red right-hand sides.
    pub fn blue_red(&self, n: u32, k: u32, m: u32, j: u32, flavor: Flavor) -> Result<(bool, bool)> {
        if !(1 <= j && j < n && 1 <= k && k <= n) {
            return Err(Error::Precondition(format!("need 1 <= j < n and 1 <= k <= n (n = {n}, k = {k}, j = {j})")));
        }
        let lhs = self.c(n, k, m, flavor)?.skew_h(j);
        let v = |e: i64| flavor.power(e as u32);
        let b = |a: i64, c: i64| flavor.binom(a, c);
        let (n, k, m, j) = (n as i64, k as i64, m as i64, j as i64);
        let c = |nn: i64, kk: i64, mm: i64| self.c(nn as u32, kk as u32, mm as u32, flavor);
        let scaled = |f: &SymFun, p: &IntPoly| f.scale(&poly(p.clone()));
        let zero = || SymFun::zero(Basis::S, n as u32);

        let (mut blue, mut red) = (zero(), zero());
        for s in 0..=j.min(k - 1) {
            let coef = &v(binom2(j - s)) * &b(m, j - s);
            if coef.is_zero() {
                continue;
            }
            let t1 = scaled(&c(n - j, k - s, s + m)?, &(&coef * &b(s + m, s)));
            blue = blue.add(&scaled(&t1, &v(s)));
            red = red.add(&t1);
            let c2 = &coef * &b(s + m - 1, s - 1);
            if c2.is_zero() {
                continue;
            }
            let mut inner = zero();
            for r in 0..=s + m - 1 {
                let pair = c(n - j, k - s, r)?.add(&c(n - j, k - s + 1, r)?);
                inner = inner.add(&scaled(&pair, &v(r)));
            }
            let t2 = scaled(&inner, &c2);
            blue = blue.add(&t2);
            red = red.add(&scaled(&t2, &v(k - s)));
        }
        if chi(j >= k) == 1 {
            let coef = &(&v(binom2(j - k)) * &b(m, j - k)) * &b(k + m - 1, k - 1);
            if !coef.is_zero() {
                let mut inner = zero();
                for r in 0..=k + m - 1 {
                    inner = inner.add(&scaled(&c(n - j, 1, r)?, &v(r)));
                }
                let t3 = scaled(&inner, &coef);
                blue = blue.add(&t3);
                red = red.add(&t3);
            }
        }
        Ok((lhs == blue, lhs == red))
    }

    pub fn blue_red_detail(&self, n: u32, k: u32, m: u32, j: u32) -> Result<BlueRed> {
        let (blue_q, red_q) = self.blue_red(n, k, m, j, Flavor::QSide)?;
        let (blue_t, red_t) = self.blue_red(n, k, m, j, Flavor::TSide)?;
        Ok(BlueRed { blue_q, red_q, blue_t, red_t })
    }

    pub fn blue_red_check(&self, n: u32, k: u32, m: u32, j: u32) -> Result<bool> {
        Ok(self.blue_red_detail(n, k, m, j)?.all())
    }

    /// The closed form of `h_n^perp C_{n,k}^{(m)}` in the given variable,
    /// checked against the skew of the computed C-polynomial.
    pub fn lemma_jn_flavor(&self, n: u32, k: u32, m: u32, flavor: Flavor) -> Result<IntPoly> {
        if !(1 <= k && k <= n) {
            return Err(Error::Precondition(format!("need 1 <= k <= n (n = {n}, k = {k})")));
        }
        let (ni, ki, mi) = (n as i64, k as i64, m as i64);
        let closed = &(&flavor.power(binom2_u(ni - ki)) * &flavor.binom(mi, ni - ki)) * &flavor.binom(mi + ki - 1, ki - 1);
        let skew = self.c(n, k, m, flavor)?.skew_h(n).constant_term();
        if skew != poly(closed.clone()) {
            return Err(Error::IdentityFailed(format!(
                "h_{n}^perp C_{{{n},{k}}}^({m}) = {skew}, expected {closed}"
            )));
        }
        Ok(closed)
    }

    pub fn lemma_jn(&self, n: u32, k: u32, m: u32) -> Result<IntPoly> {
        self.lemma_jn_flavor(n, k, m, Flavor::QSide)
    }

    /// Monomial-basis coefficients that are not polynomials with nonnegative
    /// integer coefficients.
    pub fn monomial_violations(c: &CPoly) -> Vec<Partition> {
        c.value
            .to_basis(Basis::M)
            .terms()
            .filter(|(_, a)| !a.as_poly().is_some_and(IntPoly::has_nonnegative_coefficients))
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Every delta-side identity at sizes up to `max_n`.
    pub fn run_suite(&self, max_n: u32) -> Vec<DeltaSideRow> {
        let jobs = suite_jobs(max_n);
        jobs.par_iter()
            .map(|job| {
                let passed = self.run_job(job).unwrap_or(false);
                DeltaSideRow { identity: job.identity().to_string(), parameters: job.parameters(), passed }
            })
            .collect()
    }

    fn run_job(&self, job: &Job) -> Result<bool> {
        match *job {
            Job::CpolySymmetry { n, k, m } => self.cpoly_symmetry_check(n, k, m),
            Job::ASymmetry { i, j, m } => self.a_symmetry_check(i, j, m),
            Job::Crucial { i, j, m } => self.crucial_check(i, j, m),
            Job::Ghs { i, j } => self.ghs_check(i, j),
            Job::QbinomLemma { s, m, i } => Ok(qbinom_lemma_check(s, m, i)),
            Job::Lemmetto { a, ref nu } => lemmetto_check(a, nu),
            Job::Blue { n, k, m, j } => {
                let d = self.blue_red_detail(n, k, m, j)?;
                Ok(d.blue_q && d.blue_t)
            }
            Job::Red { n, k, m, j } => {
                let d = self.blue_red_detail(n, k, m, j)?;
                Ok(d.red_q && d.red_t)
            }
            Job::LemmaJn { n, k, m } => Ok(Flavor::BOTH.iter().all(|&f| self.lemma_jn_flavor(n, k, m, f).is_ok())),
            Job::Nonnegative { n, k, m } => {
                Ok(Self::monomial_violations(&self.cpoly(n, k, m, Flavor::QSide)?).is_empty())
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Job {
    CpolySymmetry { n: u32, k: u32, m: u32 },
    ASymmetry { i: u32, j: u32, m: u32 },
    Crucial { i: u32, j: u32, m: u32 },
    Ghs { i: u32, j: u32 },
    QbinomLemma { s: u32, m: u32, i: u32 },
    Lemmetto { a: u32, nu: Partition },
    Blue { n: u32, k: u32, m: u32, j: u32 },
    Red { n: u32, k: u32, m: u32, j: u32 },
    LemmaJn { n: u32, k: u32, m: u32 },
    Nonnegative { n: u32, k: u32, m: u32 },
}

impl Job {
    fn identity(&self) -> &'static str {
        match self {
            Job::CpolySymmetry { .. } => "cpoly_qt_symmetry",
            Job::ASymmetry { .. } => "a_qt_symmetry",
            Job::Crucial { .. } => "crucial",
            Job::Ghs { .. } => "ghs",
            Job::QbinomLemma { .. } => "qbinom_lemma",
            Job::Lemmetto { .. } => "lemmetto",
            Job::Blue { .. } => "blue_formula",
            Job::Red { .. } => "red_formula",
            Job::LemmaJn { .. } => "lemma_jn",
            Job::Nonnegative { .. } => "monomial_nonnegativity",
        }
    }

    fn parameters(&self) -> String {
        let mut s = String::new();
        match self {
            Job::CpolySymmetry { n, k, m } | Job::LemmaJn { n, k, m } | Job::Nonnegative { n, k, m } => {
                write!(s, "n={n} k={k} m={m}")
            }
            Job::ASymmetry { i, j, m } | Job::Crucial { i, j, m } => write!(s, "i={i} j={j} m={m}"),
            Job::Ghs { i, j } => write!(s, "i={i} j={j}"),
            Job::QbinomLemma { s: a, m, i } => write!(s, "s={a} m={m} i={i}"),
            Job::Lemmetto { a, nu } => write!(s, "a={a} nu={}", nu.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")),
            Job::Blue { n, k, m, j } | Job::Red { n, k, m, j } => write!(s, "n={n} k={k} m={m} j={j}"),
        }
        .expect("writing to a String");
        s
    }
}

fn suite_jobs(max_n: u32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            for m in 0..=2 {
                jobs.push(Job::CpolySymmetry { n, k, m });
                jobs.push(Job::Nonnegative { n, k, m });
                jobs.push(Job::LemmaJn { n, k, m });
                for j in 1..n {
                    jobs.push(Job::Blue { n, k, m, j });
                    jobs.push(Job::Red { n, k, m, j });
                }
            }
        }
    }
    for i in 1..=max_n {
        for j in 0..=max_n - i {
            jobs.push(Job::Ghs { i, j });
            for m in 0..=3 {
                jobs.push(Job::Crucial { i, j, m });
                if i + j <= 4 && m <= 2 {
                    jobs.push(Job::ASymmetry { i, j, m });
                }
            }
        }
    }
    for s in 0..=4 {
        for m in 0..=4 {
            for i in 1..=5 {
                jobs.push(Job::QbinomLemma { s, m, i });
            }
        }
    }
    for a in 1..=5 {
        for size in 1..=max_n.min(5) {
            for nu in Partition::all(size) {
                jobs.push(Job::Lemmetto { a, nu });
            }
        }
    }
    jobs
}

/// The `r`-sum of q-binomials collapsing to `q^{C(i-s,2)} [m, i-s]_q`.
pub fn qbinom_lemma_check(s: u32, m: u32, i: u32) -> bool {
    let (s, m, i) = (s as i64, m as i64, i as i64);
    let mut lhs = QtRational::zero();
    for r in 1..=i {
        let sign: i64 = if (i - r) % 2 == 0 { 1 } else { -1 };
        let c = &qbinom(i - 1, r - 1) * &qbinom(r + m - 1, s + m - 1);
        lhs += &(q_pow(binom2(s) + binom2(r) + r - i * r) * poly(c.scale(&sign.into())));
    }
    let rhs = q_pow(binom2(i - s)) * poly(qbinom(m, i - s));
    lhs == rhs
}

/// `[a]_t h_a[B_nu]` against `sum_{r<a} t^r B_nu h_r[B_nu]`, all at `q = 0`.
pub fn lemmetto_check(a: u32, nu: &Partition) -> Result<bool> {
    if nu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let at = Assignment::q_zero();
    let b = Alphabet::scalar(poly(b_poly(nu)));
    let h_at = |r: u32| -> Result<QtRational> { specialize(&plethysm_scalar(&SymFun::h(r, r)?, &b)?, &at) };
    let b0 = poly(b_poly(nu).at_q_zero());
    let lhs = poly(Flavor::TSide.analogue(a)) * h_at(a)?;
    let mut rhs = QtRational::zero();
    for r in 0..a {
        rhs += &(poly(IntPoly::monomial(1, 0, r)) * &b0 * h_at(r)?);
    }
    Ok(lhs == rhs)
}

/// The report as CSV with a header line.
pub fn to_csv(rows: &[DeltaSideRow]) -> String {
    let mut out = String::from("identity,parameters,result\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.identity, r.parameters, if r.passed { "pass" } else { "fail" });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds() -> DeltaSide {
        DeltaSide::new(4)
    }

    #[test]
    fn trivial_cpoly() {
        let c = ds().cpoly(1, 1, 0, Flavor::QSide).unwrap();
        assert_eq!(c.value, SymFun::e(1, 1).unwrap());
    }

    #[test]
    fn lemma_jn_values() {
        let d = ds();
        for n in 1..=4 {
            assert!(d.lemma_jn(n, n, 0).unwrap().is_one());
        }
        assert!(d.lemma_jn(2, 1, 1).unwrap().is_one());
        let q = IntPoly::q();
        let expect = &q * &(&(&IntPoly::one() + &q) + &q.pow(2));
        assert_eq!(d.lemma_jn(3, 1, 3).unwrap(), expect);
    }

    #[test]
    fn small_identities() {
        let d = ds();
        assert!(d.crucial_check(1, 0, 0).unwrap());
        assert!(d.crucial_check(2, 1, 1).unwrap());
        assert!(d.ghs_check(1, 0).unwrap());
        assert!(d.ghs_check(2, 1).unwrap());
        assert!(d.blue_red_check(2, 1, 0, 1).unwrap());
        assert!(d.blue_red_check(3, 2, 1, 1).unwrap());
        assert!(qbinom_lemma_check(0, 0, 1));
        assert!(qbinom_lemma_check(1, 2, 2));
        assert!(lemmetto_check(1, &Partition::new(vec![1]).unwrap()).unwrap());
        assert!(lemmetto_check(2, &Partition::new(vec![2, 1]).unwrap()).unwrap());
    }

    #[test]
    fn chi_is_an_indicator() {
        assert_eq!(chi(3 >= 2), 1);
        assert_eq!(chi(1 >= 2), 0);
    }

    #[test]
    fn csv_layout() {
        let rows = vec![DeltaSideRow { identity: "ghs".into(), parameters: "i=1 j=0".into(), passed: true }];
        assert_eq!(to_csv(&rows), "identity,parameters,result\nghs,i=1 j=0,pass\n");
    }
}
