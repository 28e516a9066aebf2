//! End-to-end verification runs with machine-readable reports.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::delta_side::{DeltaSide, Flavor};
use crate::macdonald::{oracle::run_oracles, Macdonald};
use crate::omp::{
    self, delete, enumerate_omp, eta, eta_inv, insert_one, omp_qenum_with, phi_with, qseries_to_symfun,
    standardize, theta, xi, xi_inv, Omp, Restriction, Stat,
};
use crate::paths::{enumerate_pld_with_content, parse_steps, pld_polynomial_with, PldPath};
use crate::qt::{binom2, qbinom, IntPoly, QtRational};
use crate::symfunc::{Basis, Partition, SymFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where a check failed and the two disagreeing values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub parameters: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub wall_time_ms: u128,
    #[serde(skip)]
    sort_key: Vec<u32>,
}

impl CheckReport {
    fn new(id: &str, params: &[(&str, u32)], witness: Option<Witness>) -> Self {
        let parameters = params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
        Self {
            id: id.to_string(),
            parameters,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            wall_time_ms: 0,
            sort_key: params.iter().map(|p| p.1).collect(),
        }
    }

    fn raw(id: &str, parameters: String, witness: Option<Witness>) -> Self {
        let sort_key = parameters
            .split(' ')
            .filter_map(|kv| kv.split_once('=').and_then(|(_, v)| v.parse().ok()))
            .collect();
        Self {
            id: id.to_string(),
            parameters,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            wall_time_ms: 0,
            sort_key,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn witness(location: impl Into<String>, expected: impl ToString, found: impl ToString) -> Option<Witness> {
    Some(Witness { location: location.into(), expected: expected.to_string(), found: found.to_string() })
}

/// `None` when equal, otherwise the first monomial whose coefficients differ.
pub fn symfun_witness(expected: &SymFun, found: &SymFun) -> Option<Witness> {
    let (a, b) = (expected.to_basis(Basis::M), found.to_basis(Basis::M));
    let keys: BTreeSet<Partition> = a.terms().chain(b.terms()).map(|(l, _)| l.clone()).collect();
    keys.into_iter().find_map(|lam| {
        let (x, y) = (a.coeff(&lam), b.coeff(&lam));
        (x != y).then(|| Witness { location: format!("m{:?}", lam.parts()), expected: x.to_string(), found: y.to_string() })
    })
}

/// The statistic implementations used by the combinatorial checks; swap one
/// out to test that the suite notices.
#[derive(Clone, Copy)]
pub struct StatFns {
    pub inv: fn(&Omp) -> u32,
    pub dinv: fn(&Omp) -> u32,
    pub maj: fn(&Omp) -> u32,
    pub path_area: fn(&PldPath) -> u32,
    pub path_dinv: fn(&PldPath) -> u32,
}

impl Default for StatFns {
    fn default() -> Self {
        Self { inv: omp::inv, dinv: omp::dinv, maj: omp::maj, path_area: PldPath::area, path_dinv: PldPath::dinv }
    }
}

impl StatFns {
    pub fn omp(&self, stat: Stat) -> fn(&Omp) -> u32 {
        match stat {
            Stat::Inv => self.inv,
            Stat::Dinv => self.dinv,
            Stat::Maj => self.maj,
        }
    }
}

type EnumKey = (usize, usize, usize, Stat, Restriction);

/// Runs the checks against one set of Macdonald tables and statistics.
pub struct Verifier {
    delta: DeltaSide,
    stats: StatFns,
    enums: Mutex<HashMap<EnumKey, SymFun>>,
    plds: Mutex<HashMap<(usize, usize, usize), (SymFun, SymFun)>>,
}

fn qpow(e: i64) -> IntPoly {
    IntPoly::monomial(1, u32::try_from(e).expect("nonnegative exponent"), 0)
}

fn scale(f: &SymFun, p: &IntPoly) -> SymFun {
    f.scale(&QtRational::from_poly(p.clone()))
}

fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut r = f();
    r.wall_time_ms = start.elapsed().as_millis();
    r
}

impl Verifier {
    pub fn new(max_degree: u32) -> Self {
        Self::with_parts(Macdonald::new(max_degree), StatFns::default())
    }

    pub fn with_parts(mac: Macdonald, stats: StatFns) -> Self {
        Self {
            delta: DeltaSide::with_macdonald(mac),
            stats,
            enums: Mutex::new(HashMap::new()),
            plds: Mutex::new(HashMap::new()),
        }
    }

    pub fn delta_side(&self) -> &DeltaSide {
        &self.delta
    }

    /// `sum q^stat x^pi` over `OP(m, n)^k` with the restriction; zero for
    /// negative arguments.
    pub fn enumerator(&self, m: i64, n: i64, k: i64, stat: Stat, r: Restriction) -> SymFun {
        if m < 0 || n < 0 || k < 0 {
            return SymFun::zero(Basis::M, n.max(0) as u32);
        }
        let key = (m as usize, n as usize, k as usize, stat, r);
        if let Some(f) = self.enums.lock().unwrap().get(&key) {
            return f.clone();
        }
        let f = self.stats.omp(stat);
        let series = omp_qenum_with(key.0, key.1, key.2, r, &|p| f(p));
        let value = qseries_to_symfun(&series, n as u32);
        self.enums.lock().unwrap().insert(key, value.clone());
        value
    }

    /// The `t = 0` and `q = 0` slices of the path enumerator of `PLD(m, n)^{*k}`.
    pub fn pld_slices(&self, m: usize, n: usize, k: usize) -> (SymFun, SymFun) {
        if let Some(v) = self.plds.lock().unwrap().get(&(m, n, k)) {
            return v.clone();
        }
        let (fd, fa) = (self.stats.path_dinv, self.stats.path_area);
        let series = pld_polynomial_with(m, n, k, n, |p| (fd(p), fa(p)));
        let (mut t0, mut q0) = (SymFun::zero(Basis::M, n as u32), SymFun::zero(Basis::M, n as u32));
        for (&(d, a), f) in &series {
            if a == 0 {
                t0 = t0.add(&scale(f, &IntPoly::monomial(1, d, 0)));
            }
            if d == 0 {
                q0 = q0.add(&scale(f, &IntPoly::monomial(1, 0, a)));
            }
        }
        self.plds.lock().unwrap().insert((m, n, k), (t0.clone(), q0.clone()));
        (t0, q0)
    }

    fn cpoly(&self, n: u32, k: u32, m: u32, flavor: Flavor) -> Result<SymFun, String> {
        self.delta.cpoly(n, k, m, flavor).map(|c| c.value).map_err(|e| e.to_string())
    }

    /// Both specializations of the main theorem for one `(m, n, k)`, plus the
    /// cross-check of the `q = 0` case through the `q <-> t` swap.
    pub fn main_theorem(&self, m: u32, n: u32, k: u32) -> Vec<CheckReport> {
        let params = [("m", m), ("n", n), ("k", k)];
        let (t0, q0) = self.pld_slices(m as usize, n as usize, k as usize);
        let mut out = Vec::new();
        for (id, flavor, comb) in [("main_theorem_t0", Flavor::QSide, &t0), ("main_theorem_q0", Flavor::TSide, &q0)] {
            out.push(timed(|| {
                let w = match self.cpoly(n, n - k, m, flavor) {
                    Ok(c) => symfun_witness(&c, comb),
                    Err(e) => witness("delta side", "a value", e),
                };
                CheckReport::new(id, &params, w)
            }));
        }
        out.push(timed(|| {
            let w = symfun_witness(&t0.swap_qt(), &q0).or_else(|| {
                match (self.cpoly(n, n - k, m, Flavor::QSide), self.cpoly(n, n - k, m, Flavor::TSide)) {
                    (Ok(a), Ok(b)) => symfun_witness(&a.swap_qt(), &b),
                    (Err(e), _) | (_, Err(e)) => witness("delta side", "a value", e),
                }
            });
            CheckReport::new("main_theorem_qt_swap", &params, w)
        }));
        out
    }

    pub fn verify_main_theorem(&self, max_total: u32) -> Vec<CheckReport> {
        let mut jobs = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..n {
                    jobs.push((m, n, k));
                }
            }
        }
        let mut out: Vec<CheckReport> = jobs.par_iter().flat_map_iter(|&(m, n, k)| self.main_theorem(m, n, k)).collect();
        sort_reports(&mut out);
        out
    }

    /// The paths of area 0 (resp. dinv 0) against the R-restricted dinv
    /// (resp. maj) enumerators through `xi` (resp. `eta`).
    pub fn path_partition_checks(&self, max_total: u32) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..n {
                    let (t0, q0) = self.pld_slices(m as usize, n as usize, k as usize);
                    let (m_, n_, kk) = (m as i64, n as i64, (n - k) as i64);
                    let params = [("m", m), ("n", n), ("k", k)];
                    let dinv_r = self.enumerator(m_, n_, kk, Stat::Dinv, Restriction::R);
                    out.push(CheckReport::new("xi_enumerator", &params, symfun_witness(&dinv_r, &t0)));
                    let maj_r = self.enumerator(m_, n_, kk, Stat::Maj, Restriction::R).swap_qt();
                    out.push(CheckReport::new("eta_enumerator", &params, symfun_witness(&maj_r, &q0)));
                }
            }
        }
        out
    }

    /// `xi` and `eta` are inverse to `xi_inv` and `eta_inv`, land in `OP^R`
    /// and carry dinv to dinv, area to maj.
    pub fn roundtrip_checks(&self, max_total: u32) -> Vec<CheckReport> {
        let mut jobs = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..n {
                    jobs.push((m, n, k));
                }
            }
        }
        let mut out: Vec<CheckReport> = jobs
            .par_iter()
            .flat_map_iter(|&(m, n, k)| {
                let params = [("m", m), ("n", n), ("k", k)];
                let (mut wx, mut we) = (None, None);
                for lam in Partition::all(n) {
                    for p in enumerate_pld_with_content(m as usize, k as usize, lam.parts()) {
                        if wx.is_none() && p.area() == 0 {
                            wx = self.xi_case(&p, m as usize, (n - k) as usize);
                        }
                        if we.is_none() && p.dinv() == 0 {
                            we = self.eta_case(&p, m as usize, (n - k) as usize);
                        }
                    }
                }
                [CheckReport::new("xi_roundtrip", &params, wx), CheckReport::new("eta_roundtrip", &params, we)]
            })
            .collect();
        sort_reports(&mut out);
        out
    }

    fn xi_case(&self, p: &PldPath, m: usize, k: usize) -> Option<Witness> {
        let pi = match xi(p) {
            Ok(pi) => pi,
            Err(e) => return witness(p.to_string(), "an image", e),
        };
        if !Restriction::R.admits(&pi) || pi.zeros() != m || pi.k() != k || p.diagonal_touches() != m + k + 1 {
            return witness(p.to_string(), format!("a partition in OP^R({m}, n)^{k}"), &pi);
        }
        if (self.stats.dinv)(&pi) != (self.stats.path_dinv)(p) {
            return witness(p.to_string(), (self.stats.path_dinv)(p), (self.stats.dinv)(&pi));
        }
        match xi_inv(&pi) {
            Ok(back) if &back == p => None,
            Ok(back) => witness(pi.to_string(), p, back),
            Err(e) => witness(pi.to_string(), p, e),
        }
    }

    fn eta_case(&self, p: &PldPath, m: usize, k: usize) -> Option<Witness> {
        let pi = match eta(p) {
            Ok(pi) => pi,
            Err(e) => return witness(p.to_string(), "an image", e),
        };
        if !Restriction::R.admits(&pi) || pi.zeros() != m || pi.k() != k {
            return witness(p.to_string(), format!("a partition in OP^R({m}, n)^{k}"), &pi);
        }
        if (self.stats.maj)(&pi) != (self.stats.path_area)(p) {
            return witness(p.to_string(), (self.stats.path_area)(p), (self.stats.maj)(&pi));
        }
        match eta_inv(&pi) {
            Ok(back) if &back == p => None,
            Ok(back) => witness(pi.to_string(), p, back),
            Err(e) => witness(pi.to_string(), p, e),
        }
    }

    /// The inv, dinv and maj enumerators over `OP^R(m, n)^k` coincide.
    pub fn equidistribution(&self, max_total: u32) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..=n {
                    let e = |s| self.enumerator(m as i64, n as i64, k as i64, s, Restriction::R);
                    let (i, d, j) = (e(Stat::Inv), e(Stat::Dinv), e(Stat::Maj));
                    let w = symfun_witness(&i, &d).or_else(|| symfun_witness(&i, &j));
                    out.push(CheckReport::new("cor_equidistribution", &[("m", m), ("n", n), ("k", k)], w));
                }
            }
        }
        out
    }

    /// `q^m` times the R-restricted dinv enumerator equals the L-restricted one.
    pub fn open_problem_identity(&self, max_total: u32) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..=n {
                    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
                    let r = scale(&self.enumerator(mi, ni, ki, Stat::Dinv, Restriction::R), &qpow(mi));
                    let l = self.enumerator(mi, ni, ki, Stat::Dinv, Restriction::L);
                    out.push(CheckReport::new("open_problem_identity", &[("m", m), ("n", n), ("k", k)], symfun_witness(&r, &l)));
                }
            }
        }
        out
    }

    /// `OPi^L(m, n)^k = q^m C_{n,k}^{(m)}` and `OPd^R(m, n)^k = C_{n,k}^{(m)}` at `t = 0`.
    pub fn enumerator_theorems(&self, max_total: u32) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 1..=n {
                    let (mi, ni, ki) = (m as i64, n as i64, k as i64);
                    let params = [("m", m), ("n", n), ("k", k)];
                    let c = self.cpoly(n, k, m, Flavor::QSide);
                    let check = |lhs: SymFun, factor: IntPoly| match &c {
                        Ok(c) => symfun_witness(&scale(c, &factor), &lhs),
                        Err(e) => witness("delta side", "a value", e),
                    };
                    out.push(CheckReport::new(
                        "thm_opl_inv",
                        &params,
                        check(self.enumerator(mi, ni, ki, Stat::Inv, Restriction::L), qpow(mi)),
                    ));
                    out.push(CheckReport::new(
                        "thm_opr_dinv",
                        &params,
                        check(self.enumerator(mi, ni, ki, Stat::Dinv, Restriction::R), IntPoly::one()),
                    ));
                }
            }
        }
        out
    }

    fn opl_pair(&self, a: i64, n: i64, k: i64) -> SymFun {
        self.enumerator(a, n, k, Stat::Inv, Restriction::L).add(&self.enumerator(a, n, k + 1, Stat::Inv, Restriction::L))
    }

    /// Right-hand side of the skewing recursion for the L-restricted inv enumerator.
    pub fn opl_inv_rhs(&self, m: i64, n: i64, k: i64, j: i64) -> SymFun {
        let mut rhs = SymFun::zero(Basis::M, (n - j) as u32);
        for s in 0..=k {
            let c = &qpow(binom2(j - s)) * &qbinom(m, j - s);
            if c.is_zero() {
                continue;
            }
            let first = self.enumerator(m + s, n - j, k - s, Stat::Inv, Restriction::L);
            rhs = rhs.add(&scale(&first, &(&c * &qbinom(m + s, s))));
            let c2 = &(&c * &qpow(m)) * &qbinom(m + s - 1, s - 1);
            if c2.is_zero() {
                continue;
            }
            for r in 1..=m + s {
                rhs = rhs.add(&scale(&self.opl_pair(m + s - r, n - j, k - s), &c2));
            }
        }
        rhs
    }

    /// Right-hand side of the skewing recursion for the R-restricted dinv enumerator.
    pub fn opr_dinv_rhs(&self, m: i64, n: i64, k: i64, j: i64) -> SymFun {
        let mut rhs = SymFun::zero(Basis::M, (n - j) as u32);
        for s in 0..=k {
            let c = &qpow(binom2(j - s)) * &qbinom(m, j - s);
            if c.is_zero() {
                continue;
            }
            let first = self.enumerator(m + s, n - j, k - s, Stat::Dinv, Restriction::R);
            rhs = rhs.add(&scale(&first, &(&(&c * &qbinom(m + s, s)) * &qpow(s))));
            let c2 = &c * &qbinom(m + s - 1, s - 1);
            if c2.is_zero() {
                continue;
            }
            for r in 1..=m + s {
                rhs = rhs.add(&scale(&self.opl_pair(m + s - r, n - j, k - s), &c2));
            }
        }
        rhs
    }

    /// Both skewing recursions for `1 <= j < n <= max_n`, `1 <= k <= n`, `m <= max_m`.
    pub fn recursions(&self, max_n: u32, max_m: u32) -> Vec<CheckReport> {
        let mut out = Vec::new();
        for n in 2..=max_n {
            for m in 0..=max_m {
                for k in 1..=n {
                    for j in 1..n {
                        let (mi, ni, ki, ji) = (m as i64, n as i64, k as i64, j as i64);
                        let params = [("m", m), ("n", n), ("k", k), ("j", j)];
                        out.push(timed(|| {
                            let lhs = self.enumerator(mi, ni, ki, Stat::Inv, Restriction::L).skew_h(j);
                            CheckReport::new("lemma_opl_inv", &params, symfun_witness(&self.opl_inv_rhs(mi, ni, ki, ji), &lhs))
                        }));
                        out.push(timed(|| {
                            let lhs = self.enumerator(mi, ni, ki, Stat::Dinv, Restriction::R).skew_h(j);
                            CheckReport::new("lemma_opr_dinv", &params, symfun_witness(&self.opr_dinv_rhs(mi, ni, ki, ji), &lhs))
                        }));
                    }
                }
            }
        }
        out
    }

    /// `phi` and `theta` are type-preserving bijections carrying dinv and
    /// maj to inv, and respect the restrictions.
    pub fn bijections(&self, max_total: u32) -> Vec<CheckReport> {
        let mut jobs = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..=n {
                    jobs.push((m, n, k));
                }
            }
        }
        let mut out: Vec<CheckReport> = jobs.par_iter().flat_map_iter(|&(m, n, k)| self.bijection_case(m, n, k)).collect();
        sort_reports(&mut out);
        out
    }

    fn bijection_case(&self, m: u32, n: u32, k: u32) -> Vec<CheckReport> {
        let params = [("m", m), ("n", n), ("k", k)];
        let objs = enumerate_omp(m as usize, n as usize, k as usize, Restriction::None, false);
        if objs.is_empty() {
            return Vec::new();
        }
        let dinv = self.stats.dinv;
        let maps: [(&str, Box<dyn Fn(&Omp) -> Result<Omp, String>>, fn(&Omp) -> u32); 2] = [
            ("phi", Box::new(move |p| phi_with(p, &|x| dinv(x)).map_err(|e| e.to_string())), self.stats.dinv),
            ("theta", Box::new(|p| Ok(theta(p))), self.stats.maj),
        ];
        let mut out = Vec::new();
        for (name, map, source_stat) in maps {
            let start = Instant::now();
            let images: Vec<Omp> = match objs.iter().map(|p| map(p).map_err(|e| (p, e))).collect() {
                Ok(v) => v,
                Err((p, e)) => {
                    out.push(CheckReport::new(&format!("{name}_bijection"), &params, witness(format!("{name}({p})"), "an image", e)));
                    continue;
                }
            };
            let mut w = None;
            let distinct: BTreeSet<&Omp> = images.iter().collect();
            if distinct.len() != objs.len() {
                w = witness("image size", objs.len(), distinct.len());
            }
            for (p, img) in objs.iter().zip(&images) {
                if w.is_some() {
                    break;
                }
                if img.content() != p.content() || img.zeros() != p.zeros() || img.num_blocks() != p.num_blocks() {
                    w = witness(format!("{name}({p}) type"), p, img);
                } else if (self.stats.inv)(img) != source_stat(p) {
                    w = witness(format!("inv({name}({p})) = inv({img})"), source_stat(p), (self.stats.inv)(img));
                }
            }
            let mut r = CheckReport::new(&format!("{name}_bijection"), &params, w);
            r.wall_time_ms = start.elapsed().as_millis();
            out.push(r);

            let restrictions: &[Restriction] = if name == "phi" { &[Restriction::R, Restriction::L] } else { &[Restriction::R] };
            for &res in restrictions {
                let w = objs
                    .iter()
                    .zip(&images)
                    .find(|(p, img)| res.admits(p) && !res.admits(img))
                    .and_then(|(p, img)| witness(format!("{name}({p})"), format!("a partition in OP^{}", res.name()), img));
                out.push(CheckReport::new(&format!("{name}_restriction_{}", res.name()), &params, w));
            }
        }
        out
    }

    /// Every deletion decomposes a partition into insertion data, and
    /// replaying the insertion step by step raises the statistic by exactly
    /// `c` and the block count by `b`.
    pub fn insertion_checks(&self, max_total: u32) -> Vec<CheckReport> {
        let mut jobs = Vec::new();
        for n in 1..=max_total {
            for m in 0..=max_total - n {
                for k in 0..=n {
                    for stat in Stat::ALL {
                        jobs.push((m, n, k, stat));
                    }
                }
            }
        }
        let mut out: Vec<CheckReport> = jobs
            .par_iter()
            .filter_map(|&(m, n, k, stat)| {
                let objs = enumerate_omp(m as usize, n as usize, k as usize, Restriction::None, true);
                if objs.is_empty() {
                    return None;
                }
                let f = self.stats.omp(stat);
                let w = objs.iter().find_map(|p| insertion_case(p, stat, f));
                Some(CheckReport::new(&format!("insertion_{}", stat.name()), &[("m", m), ("n", n), ("k", k)], w))
            })
            .collect();
        sort_reports(&mut out);
        out
    }

    /// The statistics and maps on the worked examples.
    pub fn worked_examples(&self) -> Vec<CheckReport> {
        let s = &self.stats;
        let p = |x: &str| x.parse::<Omp>().expect("valid example");
        let mut out = Vec::new();
        let mut eq = |id: &str, what: &str, expected: String, found: String| {
            let w = (expected != found).then(|| Witness { location: what.into(), expected, found });
            out.push(CheckReport::new(id, &[], w));
        };
        let a = p("10|1|320|21");
        eq("example_inv", "inv(10|1|320|21)", "4".into(), (s.inv)(&a).to_string());
        eq("example_dinv", "dinv(10|1|320|21)", "7".into(), (s.dinv)(&a).to_string());
        eq("example_maj", "maj(10|1|320|21)", "7".into(), (s.maj)(&a).to_string());
        let fig1 = PldPath::new(parse_steps("NNEENNNEENNNEEEE").unwrap(), vec![1, 3, 0, 4, 6, 0, 2, 6], [4, 7]).unwrap();
        eq("example_path_area", "area(Figure 1)", "7".into(), (s.path_area)(&fig1).to_string());
        eq("example_path_dinv", "dinv(Figure 1)", "3".into(), (s.path_dinv)(&fig1).to_string());
        let fig2 = PldPath::new(parse_steps("NNEENNNEEENNEENE").unwrap(), vec![2, 3, 0, 1, 4, 0, 5, 0], [2, 4, 5, 7]).unwrap();
        let img = xi(&fig2).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        eq("example_xi", "xi(Figure 2)", "0|50|410|32".into(), img);
        eq("example_xi_dinv", "dinv(Figure 2)", (s.path_dinv)(&fig2).to_string(), (s.dinv)(&p("0|50|410|32")).to_string());
        let fig3 = PldPath::new(parse_steps("NNNENNENNNEEEEEE").unwrap(), vec![2, 4, 5, 0, 6, 0, 1, 3], [2, 5, 7, 8]).unwrap();
        let img = eta(&fig3).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        eq("example_eta", "eta(Figure 3)", "310|60|5|42".into(), img);
        eq("example_eta_area_maj", "area(Figure 3) vs maj(310|60|5|42)", (s.path_area)(&fig3).to_string(), (s.maj)(&p("310|60|5|42")).to_string());
        eq("example_eta_area", "area(Figure 3)", "7".into(), (s.path_area)(&fig3).to_string());
        let src = p("0|3|20|1|310|32");
        let dinv = s.dinv;
        eq("example_phi", "phi(0|3|20|1|310|32)", "310|3|20|1|30|2".into(), phi_with(&src, &|x| dinv(x)).map_or_else(|e| e.to_string(), |x| x.to_string()));
        eq("example_phi_dinv", "dinv(0|3|20|1|310|32)", "14".into(), (s.dinv)(&src).to_string());
        eq("example_phi_inv", "inv(310|3|20|1|30|2)", "14".into(), (s.inv)(&p("310|3|20|1|30|2")).to_string());
        let st = p("10|2|410|21");
        eq("example_standardize_dinv", "standardize(10|2|410|21, dinv)", "10|5|620|43".into(), standardize(&st, Stat::Dinv).to_string());
        eq("example_standardize_maj", "standardize(10|2|410|21, maj)", "10|4|620|53".into(), standardize(&st, Stat::Maj).to_string());
        out
    }

    pub fn oracle_checks(&self, max_n: u32) -> Vec<CheckReport> {
        run_oracles(self.delta.macdonald(), max_n)
            .into_iter()
            .map(|e| {
                let w = e.witness.map(|found| Witness { location: format!("size {}", e.size), expected: "identity holds".into(), found });
                CheckReport::new(&e.identity, &[("n", e.size)], w)
            })
            .collect()
    }

    pub fn delta_side_checks(&self, max_n: u32) -> Vec<CheckReport> {
        self.delta
            .run_suite(max_n)
            .into_iter()
            .map(|row| {
                let w = (!row.passed).then(|| Witness {
                    location: row.parameters.clone(),
                    expected: "identity holds".into(),
                    found: "identity fails".into(),
                });
                CheckReport::raw(&row.identity, row.parameters, w)
            })
            .collect()
    }

    /// Every suite, with the bijection and recursion sweeps capped at total size 5.
    pub fn verify_all(&self, max_total: u32) -> Vec<CheckReport> {
        let small = max_total.min(5);
        let mut out = Vec::new();
        out.extend(self.worked_examples());
        out.extend(self.oracle_checks(max_total));
        out.extend(self.delta_side_checks(max_total));
        out.extend(self.equidistribution(max_total));
        out.extend(self.open_problem_identity(max_total));
        out.extend(self.enumerator_theorems(max_total));
        out.extend(self.recursions(small, 2));
        out.extend(self.bijections(small));
        out.extend(self.insertion_checks(small));
        out.extend(self.roundtrip_checks(max_total));
        out.extend(self.path_partition_checks(max_total));
        out.extend(self.verify_main_theorem(max_total));
        sort_reports(&mut out);
        out
    }
}

fn insertion_case(p: &Omp, stat: Stat, f: fn(&Omp) -> u32) -> Option<Witness> {
    let l = p.max_letter();
    let decomps = delete(p, l, stat);
    if decomps.is_empty() {
        return witness(format!("delete {l} from {p} ({stat})"), "a decomposition", "none");
    }
    for (base, data) in decomps {
        let mut order = data.clone();
        // processing order: larger c first; ties as in the insertion rules
        order.sort_by_key(|&(c, b)| {
            let shifted = if stat == Stat::Maj && !b { c + 1 } else { c };
            let tie = match stat {
                Stat::Maj => i64::from(!b),
                _ => i64::from(b),
            };
            (std::cmp::Reverse(shifted), tie)
        });
        let mut cur = base.clone();
        for (c, b) in order {
            let next = match insert_one(&cur, l, (c, b), stat) {
                Ok(x) => x,
                Err(e) => return witness(format!("insert {l} into {cur} with ({c}, {b})"), "success", e),
            };
            let rise = i64::from(f(&next)) - i64::from(f(&cur));
            let grew = next.num_blocks() as i64 - cur.num_blocks() as i64;
            if rise != i64::from(c) || grew != i64::from(b) {
                return witness(format!("insert {l} into {cur} ({stat})"), format!("+{c}, +{}", u8::from(b)), format!("+{rise}, +{grew}"));
            }
            cur = next;
        }
        if &cur != p {
            return witness(format!("reinsert into {base}"), p, cur);
        }
    }
    None
}

pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (&a.id, &a.sort_key, &a.parameters).cmp(&(&b.id, &b.sort_key, &b.parameters)));
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

pub fn verify_main_theorem(max_total: u32) -> Vec<CheckReport> {
    Verifier::new(max_total).verify_main_theorem(max_total)
}

pub fn verify_all(max_total: u32) -> Vec<CheckReport> {
    Verifier::new(max_total).verify_all(max_total)
}

/// Pretty JSON; wall times are included only on request so that the
/// default output is reproducible.
pub fn to_json(reports: &[CheckReport], timing: bool) -> String {
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("serializable");
            if timing {
                v["wall_time_ms"] = serde_json::Value::from(r.wall_time_ms as u64);
            }
            v
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("serializable")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv(reports: &[CheckReport], timing: bool) -> String {
    let mut out = String::from("id,parameters,status,location,expected,found");
    if timing {
        out.push_str(",wall_time_ms");
    }
    out.push('\n');
    for r in reports {
        let (loc, exp, found) = match &r.witness {
            Some(w) => (w.location.as_str(), w.expected.as_str(), w.found.as_str()),
            None => ("", "", ""),
        };
        let status = if r.passed() { "pass" } else { "fail" };
        write!(out, "{},{},{status},{},{},{}", csv_field(&r.id), csv_field(&r.parameters), csv_field(loc), csv_field(exp), csv_field(found))
            .unwrap();
        if timing {
            write!(out, ",{}", r.wall_time_ms).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_main_theorem_instances() {
        let v = Verifier::new(3);
        for r in v.main_theorem(0, 1, 0).into_iter().chain(v.main_theorem(1, 2, 0)) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn worked_examples_pass() {
        for r in Verifier::new(1).worked_examples() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn witness_names_first_difference() {
        let a = SymFun::m(&Partition::new(vec![2, 1]).unwrap(), 3).unwrap();
        let b = a.scale(&QtRational::from_int(2));
        let w = symfun_witness(&a, &b).unwrap();
        assert_eq!((w.location.as_str(), w.expected.as_str(), w.found.as_str()), ("m[2, 1]", "1", "2"));
        assert!(symfun_witness(&a, &a.to_basis(Basis::S)).is_none());
    }

    #[test]
    fn report_formats() {
        let ok = CheckReport::new("x", &[("m", 1), ("n", 2)], None);
        let bad = CheckReport::new("y", &[], witness("here", "1", "a,b"));
        let csv = to_csv(&[ok.clone(), bad.clone()], false);
        assert_eq!(csv, "id,parameters,status,location,expected,found\nx,m=1 n=2,pass,,,\ny,,fail,here,1,\"a,b\"\n");
        let json = to_json(&[ok], false);
        assert!(json.contains("\"status\": \"pass\"") && !json.contains("wall_time"));
    }
}
