//! Integer polynomials in the two formal variables `q` and `t`.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(deg_q, deg_t)`.
pub type Exp = (u32, u32);

/// Sort key of the canonical (graded) term order: total degree first, then
/// higher powers of `q` before lower ones.
fn canonical_key(e: &Exp) -> (u32, Reverse<u32>) {
    (e.0 + e.1, Reverse(e.0))
}

/// Compares two exponents in the canonical term order.
pub fn canonical_cmp(a: &Exp, b: &Exp) -> Ordering {
    canonical_key(a).cmp(&canonical_key(b))
}

/// An element of `Z[q, t]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, deg_q: u32, deg_t: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_q, deg_t), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(deg_q, deg_t, coefficient)` triples, summing repeats.
    pub fn from_terms<I, T>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, c) in iter {
            p.add_term((a, b), c.into());
        }
        p
    }

    pub(crate) fn from_map(mut terms: BTreeMap<Exp, BigInt>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub(crate) fn map(&self) -> &BTreeMap<Exp, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == (0, 0))
    }

    /// The constant term as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_constant() {
            Some(self.coeff(0, 0))
        } else {
            None
        }
    }

    pub fn coeff(&self, deg_q: u32, deg_t: u32) -> BigInt {
        self.terms.get(&(deg_q, deg_t)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(Exp, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        v
    }

    /// First term in canonical order; its coefficient fixes the sign convention
    /// of denominators.
    pub fn leading(&self) -> Option<(Exp, &BigInt)> {
        self.terms
            .iter()
            .min_by(|a, b| canonical_cmp(a.0, b.0))
            .map(|(e, c)| (*e, c))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0)
    }

    /// Smallest exponents of `q` and `t` occurring (the monomial content).
    pub fn min_exponents(&self) -> Exp {
        let a = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (a, b)
    }

    /// Divides by `q^a t^b`; the caller guarantees divisibility.
    pub fn shift_down(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 - a, e.1 - b), c.clone()))
                .collect(),
        }
    }

    pub fn shift_up(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 + a, e.1 + b), c.clone()))
                .collect(),
        }
    }

    /// gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; asserts exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let (qt, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*e, qt)
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q -> q^k` and `t -> t^k`.
    pub fn power_subst(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 * k, e.1 * k), c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect(),
        }
    }

    /// Keeps only the terms with `deg_t = 0` (the value at `t = 0`).
    pub fn at_t_zero(&self) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .filter(|(e, _)| e.1 == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        )
    }

    /// Keeps only the terms with `deg_q = 0` (the value at `q = 0`).
    pub fn at_q_zero(&self) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .filter(|(e, _)| e.0 == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        )
    }

    /// Value at `q = 1, t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact division. Returns `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = other.as_constant() {
            let mut out = BTreeMap::new();
            for (e, x) in &self.terms {
                let (qt, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                out.insert(*e, qt);
            }
            return Some(Self { terms: out });
        }
        // Lexicographic division with `q` as the leading variable.
        let lead = |p: &IntPoly| -> (Exp, BigInt) {
            let (e, c) = p.terms.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let (le, lc) = lead(other);
        if self.degree_q() < other.degree_q() || self.degree_t() < other.degree_t() {
            return None;
        }
        let max_q = self.degree_q() - other.degree_q();
        let max_t = self.degree_t() - other.degree_t();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (re, rc) = lead(&rem);
            if re.0 < le.0 || re.1 < le.1 {
                return None;
            }
            let (c, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let e = (re.0 - le.0, re.1 - le.1);
            if e.0 > max_q || e.1 > max_t {
                return None;
            }
            for (oe, oc) in &other.terms {
                rem.add_term((oe.0 + e.0, oe.1 + e.1), -(oc * &c));
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Univariate polynomial in `t` when `q` does not occur, as dense coefficients.
    pub fn coeffs_in_t(&self) -> Option<Vec<BigInt>> {
        if self.terms.keys().any(|e| e.0 != 0) {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.degree_t() as usize + 1];
        for (e, c) in &self.terms {
            v[e.1 as usize] = c.clone();
        }
        Some(v)
    }

    pub fn coeffs_in_q(&self) -> Option<Vec<BigInt>> {
        self.swap_qt().coeffs_in_t()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_monomial(e: Exp) -> String {
    let var = |name: &str, d: u32| -> Option<String> {
        match d {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{d}")),
        }
    };
    [var("q", e.0), var("t", e.1)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *out.entry((a.0 + b.0, a.1 + b.1)).or_default() += x * y;
            }
        }
        IntPoly::from_map(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_canonical_order() {
        let p = IntPoly::from_terms([(1, 1, 1), (2, 0, 2), (0, 0, 1), (1, 0, 1)]);
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + q*t");
        let m = IntPoly::from_terms([(0, 0, 1), (1, 0, -1)]);
        assert_eq!(m.to_string(), "1 - q");
        assert_eq!((-&m).to_string(), "-1 + q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_terms([(0, 0, 1), (1, 0, -1)]);
        let b = IntPoly::from_terms([(0, 0, 1), (0, 1, -1), (2, 3, 5)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!((&p + &IntPoly::one()).div_exact(&a), None);
    }
}
