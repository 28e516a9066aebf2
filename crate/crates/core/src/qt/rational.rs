use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::IntPoly;

/// An element of `Q(q, t)` kept as a reduced fraction of integer polynomials.
///
/// The denominator is never zero, the fraction is fully reduced and the
/// canonical leading coefficient of the denominator is positive, so
/// structural equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtRational {
    num: IntPoly,
    den: IntPoly,
}

impl Default for QtRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QtRational {
    pub fn zero() -> Self {
        Self { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    pub fn q() -> Self {
        Self::from_poly(IntPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(IntPoly::t())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self { num: p, den: IntPoly::one() }
    }

    /// Builds `num / den` and reduces it. Panics on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduce(num, den)
    }

    /// Like [`QtRational::new`] but reports a zero denominator.
    pub fn try_new(num: IntPoly, den: IntPoly) -> Option<Self> {
        (!den.is_zero()).then(|| Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else if let Some(c) = den.as_constant() {
            let g = num.content().gcd(&c);
            (num.div_scalar_exact(&g), IntPoly::constant(c / g))
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let flip = den.leading().is_some_and(|(_, c)| c.is_negative());
        if flip {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` when the value lies in `Z[q, t]`.
    pub fn as_poly(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::reduce(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// `q -> q^k, t -> t^k`; the plethystic action of `p_k` on a scalar.
    pub fn power_subst(&self, k: u32) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.power_subst(k));
        }
        Self::reduce(self.num.power_subst(k), self.den.power_subst(k))
    }

    pub fn swap_qt(&self) -> Self {
        Self::reduce(self.num.swap_qt(), self.den.swap_qt())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.mul_ratio(&BigRational::from_integer(c.clone()))
    }

    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        if r.is_one() {
            return self.clone();
        }
        // num/den is reduced and a/b is reduced, so only integers can cancel.
        let (a, b) = (r.numer(), r.denom());
        let g1 = a.gcd(&self.den.content());
        let g2 = b.gcd(&self.num.content());
        let num = self.num.div_scalar_exact(&g2).scale(&(a / &g1));
        let den = self.den.div_scalar_exact(&g1).scale(&(b / &g2));
        Self::reduce_trusted(num, den)
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        if self.den.is_one() {
            return Self::from_poly(&self.num * p);
        }
        Self::reduce(&self.num * p, self.den.clone())
    }
}

impl fmt::Display for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<IntPoly> for QtRational {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QtRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn add_impl(a: &QtRational, b: &QtRational, negate_b: bool) -> QtRational {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return QtRational { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return QtRational::from_poly(&a.num + &bn);
    }
    if a.den == b.den {
        return QtRational::reduce(&a.num + &bn, a.den.clone());
    }
    // Henrici: only the gcd of the denominators can cancel.
    let g = gcd(&a.den, &b.den);
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bn * &a.den);
        if num.is_zero() {
            return QtRational::zero();
        }
        return QtRational::reduce_trusted(num, &a.den * &b.den);
    }
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return QtRational::zero();
    }
    let g2 = gcd(&num, &g);
    let (num, gq) = if g2.is_one() {
        (num, g)
    } else {
        (num.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap())
    };
    QtRational::reduce_trusted(num, &(&ad * &bd) * &gq)
}

impl QtRational {
    /// Finishes a fraction already known to be reduced up to sign.
    fn reduce_trusted(num: IntPoly, den: IntPoly) -> Self {
        let flip = den.leading().is_some_and(|(_, c)| c.is_negative());
        let out = if flip { Self { num: -num, den: -den } } else { Self { num, den } };
        debug_assert!(out.den.as_constant().is_none() || out.den.is_one() || {
            let c = out.den.as_constant().unwrap();
            out.num.content().gcd(&c).is_one()
        });
        out
    }
}

fn mul_impl(a: &QtRational, b: &QtRational) -> QtRational {
    if a.is_zero() || b.is_zero() {
        return QtRational::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return QtRational::from_poly(&a.num * &b.num);
    }
    // Cross-cancel, then the product of reduced parts is reduced.
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let an = a.num.div_exact(&g1).unwrap();
    let bd = b.den.div_exact(&g1).unwrap();
    let bn = b.num.div_exact(&g2).unwrap();
    let ad = a.den.div_exact(&g2).unwrap();
    QtRational::reduce_trusted(&an * &bn, &ad * &bd)
}

impl Add<&QtRational> for &QtRational {
    type Output = QtRational;
    fn add(self, rhs: &QtRational) -> QtRational {
        add_impl(self, rhs, false)
    }
}

impl Sub<&QtRational> for &QtRational {
    type Output = QtRational;
    fn sub(self, rhs: &QtRational) -> QtRational {
        add_impl(self, rhs, true)
    }
}

impl Mul<&QtRational> for &QtRational {
    type Output = QtRational;
    fn mul(self, rhs: &QtRational) -> QtRational {
        mul_impl(self, rhs)
    }
}

impl Div<&QtRational> for &QtRational {
    type Output = QtRational;
    fn div(self, rhs: &QtRational) -> QtRational {
        mul_impl(self, &rhs.recip())
    }
}

impl Neg for &QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        QtRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        -&self
    }
}

impl AddAssign<&QtRational> for QtRational {
    fn add_assign(&mut self, rhs: &QtRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QtRational> for QtRational {
    fn sub_assign(&mut self, rhs: &QtRational) {
        *self = &*self - rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QtRational> for QtRational {
            type Output = QtRational;
            fn $m(self, rhs: QtRational) -> QtRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QtRational> for QtRational {
            type Output = QtRational;
            fn $m(self, rhs: &QtRational) -> QtRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<QtRational> for &QtRational {
            type Output = QtRational;
            fn $m(self, rhs: QtRational) -> QtRational {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QtRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for QtRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(p: IntPoly) -> QtRational {
        QtRational::from_poly(&IntPoly::one() - &p)
    }

    #[test]
    fn reduces_and_normalises_sign() {
        let m = one_minus(IntPoly::q()).numer() * one_minus(IntPoly::t()).numer();
        let r = QtRational::new(m.clone(), (-&m).clone() * IntPoly::constant(2));
        assert_eq!(r, QtRational::from_ratio(&BigRational::new((-1).into(), 2.into())));
        let x = QtRational::new(IntPoly::one(), -&(&IntPoly::one() - &IntPoly::q()));
        assert!(x.denom().leading().unwrap().1.is_positive());
    }

    #[test]
    fn field_operations() {
        let a = one_minus(IntPoly::q()).recip();
        let b = one_minus(IntPoly::t()).recip();
        let s = &a + &b;
        let back = &(&s - &b) - &a;
        assert!(back.is_zero());
        let p = &a * &b;
        assert_eq!(&p / &a, b);
        // 1/(1-q) - q/(1-q) = 1
        let c = &a - &(&QtRational::q() * &a);
        assert!(c.is_one());
    }
}
