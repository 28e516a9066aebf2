use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntPoly, QtRational};

/// Sums many rational functions, batching terms that share a denominator so
/// that polynomial gcds are only taken once per distinct denominator.
#[derive(Default, Clone)]
pub struct Accumulator {
    groups: HashMap<IntPoly, (IntPoly, BigInt)>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: &QtRational) {
        self.add_parts(c, &BigInt::one(), &BigInt::one());
    }

    /// Adds `c * r`.
    pub fn add_scaled(&mut self, c: &QtRational, r: &BigRational) {
        if r.is_zero() {
            return;
        }
        self.add_parts(c, r.numer(), r.denom());
    }

    pub fn add_int_scaled(&mut self, c: &QtRational, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        self.add_parts(c, k, &BigInt::one());
    }

    fn add_parts(&mut self, c: &QtRational, a: &BigInt, b: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .groups
            .entry(c.denom().clone())
            .or_insert_with(|| (IntPoly::zero(), BigInt::one()));
        let (num, l) = entry;
        let new_l = l.lcm(b);
        if new_l != *l {
            *num = num.scale(&(&new_l / &*l));
            *l = new_l;
        }
        let factor = a * (&*l / b);
        *num += &c.numer().scale(&factor);
    }

    pub fn finish(self) -> QtRational {
        let mut parts: Vec<(IntPoly, (IntPoly, BigInt))> = self.groups.into_iter().collect();
        // deterministic summation order
        parts.sort_by_key(|x| x.0.to_string());
        let mut total = QtRational::zero();
        for (den, (num, l)) in parts {
            if num.is_zero() {
                continue;
            }
            let den = if l.is_one() { den } else { den.scale(&l) };
            total = &total + &QtRational::new(num, den);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_plain_summation() {
        let a: QtRational = "1/(1 - q)".parse().unwrap();
        let b: QtRational = "q/(1 - q)".parse().unwrap();
        let c: QtRational = "t^2/(1 - q*t)".parse().unwrap();
        let mut acc = Accumulator::new();
        acc.add(&a);
        acc.add_scaled(&b, &BigRational::new((-1).into(), 1.into()));
        acc.add_scaled(&c, &BigRational::new(1.into(), 3.into()));
        acc.add_int_scaled(&c, &BigInt::from(2));
        let expect = &(&a - &b) + &c.mul_ratio(&BigRational::new(7.into(), 3.into()));
        assert_eq!(acc.finish(), expect);
    }
}
