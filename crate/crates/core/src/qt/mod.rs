//! Exact arithmetic in `Z[q, t]` and `Q(q, t)`, q-analogues and specializations.

mod accum;
mod gcd;
mod parse;
mod poly;
mod rational;

pub use accum::Accumulator;
pub use gcd::gcd;
pub use poly::{canonical_cmp, Exp, IntPoly};
pub use rational::QtRational;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^(n-1)`, and `0` for `n = 0`.
pub fn q_analogue(n: u32) -> IntPoly {
    IntPoly::from_terms((0..n).map(|i| (i, 0, 1)))
}

/// `[n]_q!`
pub fn q_factorial(n: u32) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, i| &acc * &q_analogue(i))
}

/// The Gaussian binomial `[n choose k]_q`, zero when `n < k`.
pub fn q_binomial(n: i64, k: i64) -> Result<IntPoly> {
    if k < 0 {
        return Err(Error::NegativeBinomialIndex(k));
    }
    Ok(qbinom(n, k))
}

/// Gaussian binomial extended by zero to every integer pair: `0` whenever
/// `k < 0` or `n < k`. This is the convention the Delta-side formulas use
/// for their boundary terms.
pub fn qbinom(n: i64, k: i64) -> IntPoly {
    if k < 0 || n < k {
        return IntPoly::zero();
    }
    // Pascal recurrence row by row: [n,k] = [n-1,k-1] + q^k [n-1,k].
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    let mut row: Vec<IntPoly> = vec![IntPoly::one()];
    for i in 1..=n {
        let mut next = vec![IntPoly::zero(); (i + 1).min(k + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut v = IntPoly::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < row.len() && j < i {
                v += &row[j].shift_up(j as u32, 0);
            }
            *slot = v;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Same as [`qbinom`] but in the variable `t`.
pub fn tbinom(n: i64, k: i64) -> IntPoly {
    qbinom(n, k).swap_qt()
}

/// `C(n, 2)` for a possibly negative `n` (as used in exponents `q^C(n,2)`).
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// What a variable is replaced by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Const(BigRational),
    Q,
    T,
}

impl Subst {
    pub fn int(c: i64) -> Self {
        Subst::Const(BigRational::from_integer(c.into()))
    }
}

/// Simultaneous substitution for `q` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub q: Subst,
    pub t: Subst,
}

impl Assignment {
    pub fn identity() -> Self {
        Self { q: Subst::Q, t: Subst::T }
    }

    pub fn swap() -> Self {
        Self { q: Subst::T, t: Subst::Q }
    }

    pub fn q_zero() -> Self {
        Self { q: Subst::int(0), t: Subst::T }
    }

    pub fn t_zero() -> Self {
        Self { q: Subst::Q, t: Subst::int(0) }
    }

    /// `q -> t`
    pub fn q_to_t() -> Self {
        Self { q: Subst::T, t: Subst::T }
    }

    /// `t -> q`
    pub fn t_to_q() -> Self {
        Self { q: Subst::Q, t: Subst::Q }
    }

    pub fn q_const(c: BigRational) -> Self {
        Self { q: Subst::Const(c), t: Subst::T }
    }

    pub fn t_const(c: BigRational) -> Self {
        Self { q: Subst::Q, t: Subst::Const(c) }
    }

    /// Applies the substitution to a polynomial, returning `num / den` with
    /// an integer denominator.
    fn apply_poly(&self, p: &IntPoly) -> (IntPoly, BigInt) {
        let den_of = |s: &Subst| match s {
            Subst::Const(r) => r.denom().clone(),
            _ => BigInt::one(),
        };
        let (dq, dt) = (den_of(&self.q), den_of(&self.t));
        let (gq, gt) = (p.degree_q(), p.degree_t());
        let mut out = IntPoly::zero();
        for ((a, b), c) in p.map() {
            let mut coeff = c.clone();
            let mut exp = (0u32, 0u32);
            for (s, e, d, top) in [(&self.q, *a, &dq, gq), (&self.t, *b, &dt, gt)] {
                match s {
                    Subst::Const(r) => {
                        coeff *= num_traits::pow(r.numer().clone(), e as usize);
                        coeff *= num_traits::pow(d.clone(), (top - e) as usize);
                    }
                    Subst::Q => exp.0 += e,
                    Subst::T => exp.1 += e,
                }
            }
            out.add_term(exp, coeff);
        }
        let mut den = BigInt::one();
        if let Subst::Const(_) = self.q {
            den *= num_traits::pow(dq.clone(), gq as usize);
        }
        if let Subst::Const(_) = self.t {
            den *= num_traits::pow(dt.clone(), gt as usize);
        }
        (out, den)
    }
}

/// Substitutes and renormalises. Fails when the denominator becomes zero.
pub fn specialize(f: &QtRational, at: &Assignment) -> Result<QtRational> {
    if *at == Assignment::identity() {
        return Ok(f.clone());
    }
    if *at == Assignment::swap() {
        return Ok(f.swap_qt());
    }
    let (n, nd) = at.apply_poly(f.numer());
    let (d, dd) = at.apply_poly(f.denom());
    if d.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    // f = (n / nd) / (d / dd)
    let num = n.scale(&dd);
    let den = d.scale(&nd);
    Ok(QtRational::new(num, den))
}

/// Substitution on a polynomial; never fails.
pub fn specialize_poly(p: &IntPoly, at: &Assignment) -> QtRational {
    let (n, d) = at.apply_poly(p);
    QtRational::new(n, IntPoly::constant(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, u32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn q_analogue_values() {
        assert!(q_analogue(0).is_zero());
        assert_eq!(q_analogue(1), IntPoly::one());
        assert_eq!(q_analogue(3), poly(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)]));
    }

    #[test]
    fn q_binomial_values() {
        assert!(q_binomial(2, 5).unwrap().is_zero());
        for n in 0..6 {
            assert!(q_binomial(n, 0).unwrap().is_one());
        }
        // (4,2) from the q-factorials: [4]![2]!^-1[2]!^-1
        let expected = q_factorial(4)
            .div_exact(&(&q_factorial(2) * &q_factorial(2)))
            .unwrap();
        assert_eq!(expected, poly(&[(0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 1), (4, 0, 1)]));
        assert_eq!(q_binomial(4, 2).unwrap(), expected);
        assert_eq!(q_binomial(3, -1), Err(Error::NegativeBinomialIndex(-1)));
        assert!(qbinom(-1, -1).is_zero());
    }

    #[test]
    fn pascal_and_evaluation_at_one() {
        for n in 1..=12i64 {
            for k in 1..=n {
                let lhs = qbinom(n, k);
                let rhs = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift_up(k as u32, 0);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
            for k in 0..=n {
                let mut c = BigInt::one();
                for i in 0..k {
                    c = c * BigInt::from(n - i) / BigInt::from(i + 1);
                }
                assert_eq!(qbinom(n, k).eval_one(), c);
            }
        }
    }

    #[test]
    fn specialize_examples() {
        let one_minus_t = poly(&[(0, 0, 1), (0, 1, -1)]);
        let f = QtRational::new(IntPoly::one(), one_minus_t);
        assert!(specialize(&f, &Assignment::t_zero()).unwrap().is_one());

        let three = QtRational::from_poly(q_analogue(3));
        assert_eq!(
            specialize(&three, &Assignment::q_to_t()).unwrap(),
            QtRational::from_poly(poly(&[(0, 0, 1), (0, 1, 1), (0, 2, 1)]))
        );

        let g = QtRational::new(poly(&[(2, 1, 1)]), poly(&[(0, 0, 1), (1, 0, -1)]));
        assert!(specialize(&g, &Assignment::t_zero()).unwrap().is_zero());

        let h = QtRational::new(IntPoly::one(), poly(&[(1, 0, 1)]));
        assert_eq!(specialize(&h, &Assignment::q_zero()), Err(Error::DenominatorVanishes));

        // q = 1/2 in (1 + q)/(1 - t) gives (3/2)/(1 - t)
        let k = QtRational::new(poly(&[(0, 0, 1), (1, 0, 1)]), poly(&[(0, 0, 1), (0, 1, -1)]));
        let half = BigRational::new(1.into(), 2.into());
        let v = specialize(&k, &Assignment::q_const(half)).unwrap();
        assert_eq!(
            v,
            QtRational::new(IntPoly::constant(3), poly(&[(0, 0, 2), (0, 1, -2)]))
        );
    }
}
