//! Exact integer helpers shared by the counting and moment code.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// A nonnegative count computed without any floating-point step.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(pub BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: Self) -> Self {
        ExactCount(self.0 + rhs.0)
    }
}

impl Mul for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: Self) -> Self {
        ExactCount(self.0 * rhs.0)
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, x| acc * x)
}

/// Product `lo * (lo+1) * ... * hi`, or 1 when the range is empty.
pub fn rising(lo: u64, hi: u64) -> BigUint {
    (lo..=hi).fold(BigUint::one(), |acc, x| acc * x)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // Multiplicative form keeps every intermediate value an integer.
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(7, 2), BigUint::from(21u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        // C(C(6,3), 7) is the k = 3 brute-force candidate count.
        assert_eq!(binomial(20, 7), BigUint::from(77520u32));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(7), BigUint::from(5040u32));
        assert_eq!(rising(19, 21), BigUint::from(19u32 * 20 * 21));
        assert_eq!(rising(5, 4), BigUint::one());
    }
}
