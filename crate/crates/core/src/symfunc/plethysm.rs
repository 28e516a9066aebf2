use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::partition::Partition;
use super::symfun::SymFun;
use super::Basis;
use crate::error::{Error, Result};
use crate::qt::{q_analogue, Accumulator, IntPoly, QtRational};

/// One summand `c(q, t) * eps^e * X^x` of an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTerm {
    pub coeff: QtRational,
    pub eps: bool,
    pub has_x: bool,
}

/// A plethystic alphabet: a finite sum of scalar multiples of `1`, `X`,
/// `eps` and `eps X`, where `p_k[c] = c(q^k, t^k)` and `p_k[eps] = (-1)^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    terms: Vec<AlphaTerm>,
}

/// Named alphabets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphabetSpec {
    X,
    /// `X / ((1 - q)(1 - t))`
    XOverM,
    XOverOneMinusQ,
    XOverOneMinusT,
    /// `(1 - q)(1 - t) B_mu`
    MB(Partition),
    /// `[n]_q`
    QInt(u32),
    EpsX,
    MinusX,
    Sum(Box<AlphabetSpec>, Box<AlphabetSpec>),
    Difference(Box<AlphabetSpec>, Box<AlphabetSpec>),
}

pub fn make_alphabet(spec: &AlphabetSpec) -> Result<Alphabet> {
    Ok(match spec {
        AlphabetSpec::X => Alphabet::x(),
        AlphabetSpec::XOverM => Alphabet::x_over_m(),
        AlphabetSpec::XOverOneMinusQ => Alphabet::scaled_x(QtRational::new(IntPoly::one(), one_minus(IntPoly::q()))),
        AlphabetSpec::XOverOneMinusT => Alphabet::scaled_x(QtRational::new(IntPoly::one(), one_minus(IntPoly::t()))),
        AlphabetSpec::MB(mu) => Alphabet::m_b(mu)?,
        AlphabetSpec::QInt(n) => Alphabet::scalar(QtRational::from_poly(q_analogue(*n))),
        AlphabetSpec::EpsX => Alphabet::eps_x(),
        AlphabetSpec::MinusX => Alphabet::x().neg(),
        AlphabetSpec::Sum(a, b) => make_alphabet(a)?.plus(&make_alphabet(b)?),
        AlphabetSpec::Difference(a, b) => make_alphabet(a)?.minus(&make_alphabet(b)?),
    })
}

fn one_minus(p: IntPoly) -> IntPoly {
    &IntPoly::one() - &p
}

/// `M = (1 - q)(1 - t)`
pub fn m_poly() -> IntPoly {
    &one_minus(IntPoly::q()) * &one_minus(IntPoly::t())
}

/// `B_mu = sum over cells of q^coarm t^coleg`.
pub fn b_poly(mu: &Partition) -> IntPoly {
    IntPoly::from_terms(mu.cells().map(|c| (mu.coarm(c), mu.coleg(c), 1)))
}

impl Alphabet {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn x() -> Self {
        Self::scaled_x(QtRational::one())
    }

    pub fn scaled_x(c: QtRational) -> Self {
        Self { terms: vec![AlphaTerm { coeff: c, eps: false, has_x: true }] }
    }

    /// An X-free alphabet.
    pub fn scalar(c: QtRational) -> Self {
        Self { terms: vec![AlphaTerm { coeff: c, eps: false, has_x: false }] }
    }

    pub fn x_over_m() -> Self {
        Self::scaled_x(QtRational::new(IntPoly::one(), m_poly()))
    }

    pub fn eps_x() -> Self {
        Self { terms: vec![AlphaTerm { coeff: QtRational::one(), eps: true, has_x: true }] }
    }

    /// `M B_mu`; the empty partition is rejected.
    pub fn m_b(mu: &Partition) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Self::scalar(QtRational::from_poly(&m_poly() * &b_poly(mu))))
    }

    pub fn terms(&self) -> &[AlphaTerm] {
        &self.terms
    }

    pub fn has_x(&self) -> bool {
        self.terms.iter().any(|t| t.has_x)
    }

    pub fn plus(&self, other: &Alphabet) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| AlphaTerm { coeff: -&t.coeff, ..t.clone() })
                .collect(),
        }
    }

    pub fn minus(&self, other: &Alphabet) -> Self {
        self.plus(&other.neg())
    }

    /// The product of two alphabets, e.g. `eps * X` or `X * c`.
    pub fn times(&self, other: &Alphabet) -> Result<Self> {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                if a.has_x && b.has_x {
                    return Err(Error::Precondition("alphabet product would be quadratic in X".into()));
                }
                terms.push(AlphaTerm {
                    coeff: &a.coeff * &b.coeff,
                    eps: a.eps ^ b.eps,
                    has_x: a.has_x || b.has_x,
                });
            }
        }
        Ok(Self { terms })
    }

    /// `self[X := inner]`.
    pub fn compose(&self, inner: &Alphabet) -> Self {
        let mut terms = Vec::new();
        for a in &self.terms {
            if !a.has_x {
                terms.push(a.clone());
                continue;
            }
            for b in &inner.terms {
                terms.push(AlphaTerm { coeff: &a.coeff * &b.coeff, eps: a.eps ^ b.eps, has_x: b.has_x });
            }
        }
        Self { terms }
    }

    /// `p_k[A] = scalar + x_coeff * p_k`.
    pub fn power_eval(&self, k: u32) -> (QtRational, QtRational) {
        let mut scalar = Accumulator::new();
        let mut xc = Accumulator::new();
        for t in &self.terms {
            let mut c = t.coeff.power_subst(k);
            if t.eps && k % 2 == 1 {
                c = -c;
            }
            if t.has_x {
                xc.add(&c);
            } else {
                scalar.add(&c);
            }
        }
        (scalar.finish(), xc.finish())
    }
}

/// `f[A]`, expanded in the power basis.
pub fn plethysm(f: &SymFun, a: &Alphabet) -> SymFun {
    let f = f.to_basis(Basis::P);
    let max_part = f.terms().map(|(l, _)| l.part(0)).max().unwrap_or(0);
    let evals: Vec<(QtRational, QtRational)> = (0..=max_part).map(|k| a.power_eval(k.max(1))).collect();
    let mut acc: BTreeMap<Partition, Accumulator> = BTreeMap::new();
    for (lam, c) in f.terms() {
        // (a_k + b_k p_k)^m, expanded binomially, one part size at a time
        let mut partial: Vec<(Vec<u32>, QtRational)> = vec![(Vec::new(), c.clone())];
        for (k, &m) in lam.multiplicities().iter().enumerate().skip(1) {
            if m == 0 {
                continue;
            }
            let (ak, bk) = &evals[k];
            let mut next = Vec::new();
            let mut binom = BigInt::one();
            for j in 0..=m {
                let w = ak.pow(m - j) * bk.pow(j);
                if !w.is_zero() {
                    let w = w.scale_int(&binom);
                    for (parts, coef) in &partial {
                        let mut p = parts.clone();
                        p.extend(std::iter::repeat_n(k as u32, j as usize));
                        next.push((p, coef * &w));
                    }
                }
                binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
            }
            partial = next;
        }
        for (parts, coef) in partial {
            acc.entry(Partition::from_parts_unsorted(parts)).or_default().add(&coef);
        }
    }
    SymFun::from_terms(Basis::P, f.bound(), acc.into_iter().map(|(l, a)| (l, a.finish())))
        .expect("plethysm by these alphabets never raises the degree")
}

/// `f[A]` for an X-free alphabet.
pub fn plethysm_scalar(f: &SymFun, a: &Alphabet) -> Result<QtRational> {
    if a.has_x() {
        return Err(Error::Precondition("alphabet depends on X".into()));
    }
    Ok(plethysm(f, a).constant_term())
}
