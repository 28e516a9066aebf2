use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::partition::Partition;
use super::tables::tables;
use super::Basis;
use crate::error::{Error, Result};
use crate::qt::{specialize, Accumulator, Assignment, QtRational};

/// A symmetric function of degree at most `bound`, stored in one basis.
///
/// Equality compares the functions themselves: the other operand is
/// converted to this basis first, and bounds are ignored.
#[derive(Clone)]
pub struct SymFun {
    basis: Basis,
    bound: u32,
    terms: BTreeMap<Partition, QtRational>,
}

impl SymFun {
    pub fn zero(basis: Basis, bound: u32) -> Self {
        Self { basis, bound, terms: BTreeMap::new() }
    }

    /// The constant function `c`.
    pub fn scalar(c: QtRational, bound: u32) -> Self {
        let mut f = Self::zero(Basis::S, bound);
        f.insert(Partition::empty(), c);
        f
    }

    pub fn one(bound: u32) -> Self {
        Self::scalar(QtRational::one(), bound)
    }

    pub fn from_terms<I>(basis: Basis, bound: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QtRational)>,
    {
        let mut f = Self::zero(basis, bound);
        for (lam, c) in terms {
            f.check_size(&lam)?;
            f.add_to(lam, &c);
        }
        Ok(f)
    }

    /// The basis element `b_lambda`.
    pub fn basis_elem(basis: Basis, lam: Partition, bound: u32) -> Result<Self> {
        Self::from_terms(basis, bound, [(lam, QtRational::one())])
    }

    pub fn e(k: u32, bound: u32) -> Result<Self> {
        Self::basis_elem(Basis::E, Partition::row(k), bound)
    }

    pub fn h(k: u32, bound: u32) -> Result<Self> {
        Self::basis_elem(Basis::H, Partition::row(k), bound)
    }

    pub fn p(k: u32, bound: u32) -> Result<Self> {
        Self::basis_elem(Basis::P, Partition::row(k), bound)
    }

    pub fn s(lam: &Partition, bound: u32) -> Result<Self> {
        Self::basis_elem(Basis::S, lam.clone(), bound)
    }

    pub fn m(lam: &Partition, bound: u32) -> Result<Self> {
        Self::basis_elem(Basis::M, lam.clone(), bound)
    }

    fn check_size(&self, lam: &Partition) -> Result<()> {
        if lam.size() > self.bound {
            Err(Error::DegreeOverflow { needed: lam.size() as usize, bound: self.bound as usize })
        } else {
            Ok(())
        }
    }

    fn insert(&mut self, lam: Partition, c: QtRational) {
        if !c.is_zero() {
            self.terms.insert(lam, c);
        }
    }

    fn add_to(&mut self, lam: Partition, c: &QtRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lam) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&lam);
                }
            }
            None => {
                self.terms.insert(lam, c.clone());
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Same function with another degree bound.
    pub fn with_bound(&self, bound: u32) -> Result<Self> {
        let mut f = self.clone();
        f.bound = bound;
        for lam in self.terms.keys() {
            f.check_size(lam)?;
        }
        Ok(f)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> QtRational {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree if all terms have the same size (zero counts as any).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// The part of degree exactly `n`.
    pub fn homogeneous(&self, n: u32) -> Self {
        Self {
            basis: self.basis,
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// The constant term.
    pub fn constant_term(&self) -> QtRational {
        self.coeff(&Partition::empty())
    }

    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &QtRational)>> = BTreeMap::new();
        for (lam, c) in &self.terms {
            by_degree.entry(lam.size()).or_default().push((lam, c));
        }
        let mut out = Self::zero(target, self.bound);
        for (n, items) in by_degree {
            if n == 0 {
                out.insert(Partition::empty(), items[0].1.clone());
                continue;
            }
            let t = tables(n);
            let (src, dst) = (self.basis.index(), target.index());
            // compose the two sparse maps into one rational row per input term
            let mut acc: Vec<Accumulator> = vec![Accumulator::new(); t.parts.len()];
            for (lam, c) in items {
                let i = t.index[lam];
                let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (k, x) in &t.to_p[src][i] {
                    for (j, y) in &t.from_p[dst][*k] {
                        *row.entry(*j).or_insert_with(|| BigRational::from_integer(0.into())) += x * y;
                    }
                }
                for (j, r) in row {
                    acc[j].add_scaled(c, &r);
                }
            }
            for (j, a) in acc.into_iter().enumerate() {
                out.insert(t.parts[j].clone(), a.finish());
            }
        }
        out
    }

    pub fn add(&self, other: &SymFun) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        out.bound = self.bound.max(other.bound);
        for (lam, c) in other.terms {
            out.add_to(lam, &c);
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &QtRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis, self.bound);
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.map_coeffs(|x| x.scale_int(&BigInt::from(k)))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&QtRational) -> QtRational) -> Self {
        let mut out = Self::zero(self.basis, self.bound);
        for (lam, c) in &self.terms {
            out.insert(lam.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(&QtRational) -> Result<QtRational>) -> Result<Self> {
        let mut out = Self::zero(self.basis, self.bound);
        for (lam, c) in &self.terms {
            out.insert(lam.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Exchanges `q` and `t` in every coefficient.
    pub fn swap_qt(&self) -> Self {
        self.map_coeffs(QtRational::swap_qt)
    }

    /// Substitutes in every coefficient.
    pub fn specialize(&self, at: &Assignment) -> Result<Self> {
        self.try_map_coeffs(|c| specialize(c, at))
    }

    /// The product; fails if a term would exceed the larger degree bound.
    pub fn mul(&self, other: &SymFun) -> Result<Self> {
        let bound = self.bound.max(other.bound);
        // e, h and p are multiplicative bases
        let basis = match self.basis {
            Basis::E | Basis::H | Basis::P => self.basis,
            _ => match other.basis {
                Basis::E | Basis::H | Basis::P => other.basis,
                _ => Basis::P,
            },
        };
        let a = self.to_basis(basis);
        let b = other.to_basis(basis);
        let mut acc: BTreeMap<Partition, Accumulator> = BTreeMap::new();
        for (l1, c1) in &a.terms {
            for (l2, c2) in &b.terms {
                if l1.size() + l2.size() > bound {
                    return Err(Error::DegreeOverflow {
                        needed: (l1.size() + l2.size()) as usize,
                        bound: bound as usize,
                    });
                }
                acc.entry(l1.union(l2)).or_default().add(&(c1 * c2));
            }
        }
        let mut out = Self::zero(basis, bound);
        for (lam, a) in acc {
            out.insert(lam, a.finish());
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(self.bound);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The involution with `omega(e_k) = h_k`.
    pub fn omega(&self) -> Self {
        let (basis, f) = match self.basis {
            Basis::E => (Basis::H, self.clone()),
            Basis::H => (Basis::E, self.clone()),
            Basis::S => {
                let mut out = Self::zero(Basis::S, self.bound);
                for (lam, c) in &self.terms {
                    out.insert(lam.conjugate(), c.clone());
                }
                return out;
            }
            Basis::P | Basis::M => {
                let g = self.to_basis(Basis::P);
                let mut out = Self::zero(Basis::P, self.bound);
                for (lam, c) in &g.terms {
                    let odd = (lam.size() as usize - lam.len()) % 2 == 1;
                    out.insert(lam.clone(), if odd { -c } else { c.clone() });
                }
                return out.to_basis(self.basis);
            }
        };
        Self { basis, bound: f.bound, terms: f.terms }
    }

    /// The Hall scalar product, for which the Schur basis is orthonormal.
    pub fn hall(&self, other: &SymFun) -> QtRational {
        // pair h against m when available, otherwise go through s
        let (a, b) = match (self.basis, other.basis) {
            (Basis::H, _) => (self.clone(), other.to_basis(Basis::M)),
            (Basis::M, _) => (self.clone(), other.to_basis(Basis::H)),
            (_, Basis::H) => (self.to_basis(Basis::M), other.clone()),
            (_, Basis::M) => (self.to_basis(Basis::H), other.clone()),
            _ => (self.to_basis(Basis::S), other.to_basis(Basis::S)),
        };
        let mut acc = Accumulator::new();
        for (lam, c) in &a.terms {
            if let Some(d) = b.terms.get(lam) {
                acc.add(&(c * d));
            }
        }
        acc.finish()
    }

    /// `h_j^perp`, the adjoint of multiplication by `h_j`, computed on the
    /// Schur basis by removing horizontal strips.
    pub fn skew_h(&self, j: u32) -> Self {
        let f = self.to_basis(Basis::S);
        let mut acc: BTreeMap<Partition, Accumulator> = BTreeMap::new();
        for (lam, c) in &f.terms {
            for nu in lam.remove_horizontal_strips(j) {
                acc.entry(nu).or_default().add(c);
            }
        }
        let mut out = Self::zero(Basis::S, self.bound);
        for (lam, a) in acc {
            out.insert(lam, a.finish());
        }
        out
    }

    /// `e_j^perp = omega h_j^perp omega`.
    pub fn skew_e(&self, j: u32) -> Self {
        self.omega().skew_h(j).omega()
    }
}

impl PartialEq for SymFun {
    fn eq(&self, other: &Self) -> bool {
        if other.basis == self.basis {
            self.terms == other.terms
        } else {
            self.terms == other.to_basis(self.basis).terms
        }
    }
}

impl Eq for SymFun {}

/// Terms `(c)*b[l1,l2,..]` joined by ` + `; a unit coefficient is omitted
/// and the constant term is `(c)`.
impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = lam.parts().iter().map(u32::to_string).collect();
            if lam.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}[{}]", self.basis, parts.join(","))?;
            } else {
                write!(f, "({c})*{}[{}]", self.basis, parts.join(","))?;
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) form; the degree bound is the
/// largest degree present.
impl FromStr for SymFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SymFun::zero(Basis::M, 0));
        }
        let mut pieces = Vec::new();
        let (mut depth, mut start) = (0i32, 0usize);
        let bytes = s.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' | b'[' => depth += 1,
                b')' | b']' => depth -= 1,
                b'+' if depth == 0 => {
                    pieces.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&s[start..]);
        let mut basis = None;
        let mut terms = Vec::new();
        for piece in pieces {
            let piece = piece.trim();
            let bad = || Error::Parse(format!("cannot read term {piece:?}"));
            let (coeff, mono) = if let Some(rest) = piece.strip_prefix('(') {
                let close = matching_paren(rest).ok_or_else(bad)?;
                let c: QtRational = rest[..close].parse()?;
                let tail = rest[close + 1..].trim();
                match tail.strip_prefix('*') {
                    Some(m) => (c, Some(m.trim())),
                    None if tail.is_empty() => (c, None),
                    None => return Err(bad()),
                }
            } else {
                (QtRational::one(), Some(piece))
            };
            let lam = match mono {
                None => Partition::empty(),
                Some(m) => {
                    let open = m.find('[').ok_or_else(bad)?;
                    let b: Basis = m[..open].trim().parse()?;
                    if basis.is_some_and(|x| x != b) {
                        return Err(Error::Parse(format!("mixed bases in {s:?}")));
                    }
                    basis = Some(b);
                    m[open..].parse()?
                }
            };
            terms.push((lam, coeff));
        }
        let bound = terms.iter().map(|(l, _)| l.size()).max().unwrap_or(0);
        SymFun::from_terms(basis.unwrap_or(Basis::M), bound, terms)
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
