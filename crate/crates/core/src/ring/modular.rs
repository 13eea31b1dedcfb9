use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_integer::Integer;
use rand::Rng as RandRng;

use super::{Reducedness, Ring, RingError};
use crate::arith::first_nilpotent_residue;

/// ℤ/nℤ with residues `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModRing {
    modulus: u64,
    nilpotent: Option<u64>,
}

impl ModRing {
    /// ℤ/nℤ for squarefree `n ≥ 2`. Non-squarefree moduli are refused with
    /// the smallest nonzero nilpotent as witness.
    pub fn new(modulus: u64) -> Result<Self, RingError> {
        let ring = Self::allow_non_reduced(modulus)?;
        match ring.nilpotent {
            Some(witness) => Err(RingError::NotReduced { modulus, witness }),
            None => Ok(ring),
        }
    }

    /// ℤ/nℤ for any `n ≥ 2`; the reducedness status records a witness when
    /// `n` is not squarefree.
    pub fn allow_non_reduced(modulus: u64) -> Result<Self, RingError> {
        if modulus < 2 {
            return Err(RingError::ModulusTooSmall(modulus));
        }
        Ok(ModRing { modulus, nilpotent: first_nilpotent_residue(modulus) })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce(&self, x: u128) -> u64 {
        (x % self.modulus as u128) as u64
    }
}

impl Ring for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 + *b as u128)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 * *b as u128)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn cardinality(&self) -> Option<usize> {
        usize::try_from(self.modulus).ok()
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.modulus).collect())
    }

    fn reducedness(&self) -> Reducedness<u64> {
        match self.nilpotent {
            Some(witness) => Reducedness::KnownFalse { witness },
            None => Reducedness::Verified,
        }
    }

    // In a finite commutative ring the non-zerodivisors are the units.
    fn is_non_zerodivisor(&self, x: &u64) -> bool {
        x.gcd(&self.modulus) == 1
    }

    fn render(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse_element(&self, text: &str) -> Result<u64, RingError> {
        let t = text.trim();
        let err = || RingError::Parse { ring: self.name(), input: text.to_string() };
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let v: u64 = t.parse().map_err(|_| err())?;
        if v < self.modulus {
            Ok(v)
        } else {
            Err(err())
        }
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, _bound: u64) -> u64 {
        rng.gen_range(0..self.modulus)
    }

    fn name(&self) -> String {
        format!("Z/{}Z", self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_squarefree;
    use num_bigint::BigUint;

    #[test]
    fn z6_arithmetic() {
        let r = ModRing::new(6).unwrap();
        assert_eq!(r.mul(&2, &3), 0);
        assert_eq!(r.neg(&2), 4);
        assert_eq!(r.neg(&0), 0);
        assert_eq!(r.add(&5, &4), 3);
        assert_eq!(r.reducedness(), Reducedness::Verified);
    }

    #[test]
    fn rejects_small_and_nonreduced_moduli() {
        assert_eq!(ModRing::new(1), Err(RingError::ModulusTooSmall(1)));
        assert_eq!(ModRing::new(0), Err(RingError::ModulusTooSmall(0)));
        assert_eq!(ModRing::new(4), Err(RingError::NotReduced { modulus: 4, witness: 2 }));
        let r4 = ModRing::allow_non_reduced(4).unwrap();
        assert_eq!(r4.reducedness(), Reducedness::KnownFalse { witness: 2 });
    }

    #[test]
    fn reducedness_iff_squarefree_up_to_1000() {
        for n in 2u64..=1000 {
            let r = ModRing::allow_non_reduced(n).unwrap();
            assert_eq!(r.reducedness() == Reducedness::Verified, is_squarefree(&BigUint::from(n)), "n = {n}");
        }
    }

    #[test]
    fn units_are_non_zerodivisors() {
        let r = ModRing::new(6).unwrap();
        let units: Vec<u64> = (0..6).filter(|x| r.is_non_zerodivisor(x)).collect();
        assert_eq!(units, [1, 5]);
    }

    #[test]
    fn parse_bounds() {
        let r = ModRing::new(6).unwrap();
        assert_eq!(r.parse_element("5"), Ok(5));
        assert!(r.parse_element("6").is_err());
        assert!(r.parse_element("-1").is_err());
    }
}
