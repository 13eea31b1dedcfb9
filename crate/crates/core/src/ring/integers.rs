use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng as RandRng;

use super::{sample_i64, Reducedness, Ring, RingError};

/// The integers with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Integers {
    pub fn new() -> Self {
        Integers
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    fn elements(&self) -> Option<Vec<BigInt>> {
        None
    }

    // ℤ is an integral domain.
    fn reducedness(&self) -> Reducedness<BigInt> {
        Reducedness::Verified
    }

    fn is_non_zerodivisor(&self, x: &BigInt) -> bool {
        !x.is_zero()
    }

    fn render(&self, x: &BigInt) -> String {
        x.to_string()
    }

    fn parse_element(&self, text: &str) -> Result<BigInt, RingError> {
        let t = text.trim();
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RingError::Parse { ring: self.name(), input: text.to_string() });
        }
        BigInt::from_str(t).map_err(|_| RingError::Parse { ring: self.name(), input: text.to_string() })
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, bound: u64) -> BigInt {
        BigInt::from(sample_i64(rng, bound))
    }

    fn name(&self) -> String {
        "Z".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let z = Integers::new();
        assert_eq!(z.add(&BigInt::from(2), &BigInt::from(3)), BigInt::from(5));
        assert_eq!(z.mul(&BigInt::from(-2), &BigInt::from(3)), BigInt::from(-6));
        assert_eq!(z.reducedness(), Reducedness::Verified);
    }

    #[test]
    fn zerodivisors() {
        let z = Integers::new();
        assert!(!z.is_non_zerodivisor(&BigInt::from(0)));
        assert!(z.is_non_zerodivisor(&BigInt::from(-3)));
    }

    #[test]
    fn parse_rejects_garbage() {
        let z = Integers::new();
        assert_eq!(z.parse_element(" -42 ").unwrap(), BigInt::from(-42));
        assert!(z.parse_element("4x").is_err());
        assert!(z.parse_element("+4").is_err());
        assert!(z.parse_element("-").is_err());
    }
}
