use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng as RandRng;

use super::{Reducedness, Ring, RingError};

/// The direct product `A × B` with componentwise operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRing<A, B> {
    left: A,
    right: B,
}

impl<A: Ring, B: Ring> ProductRing<A, B> {
    pub fn new(left: A, right: B) -> Self {
        ProductRing { left, right }
    }

    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }
}

/// Splits `(a,b)` at the comma that sits at parenthesis depth one.
fn split_pair(text: &str) -> Option<(&str, &str)> {
    let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

impl<A: Ring, B: Ring> Ring for ProductRing<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.neg(&a.0), self.right.neg(&a.1))
    }

    fn cardinality(&self) -> Option<usize> {
        self.left.cardinality()?.checked_mul(self.right.cardinality()?)
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let ls = self.left.elements()?;
        let rs = self.right.elements()?;
        let mut out = Vec::with_capacity(ls.len() * rs.len());
        for l in &ls {
            for r in &rs {
                out.push((l.clone(), r.clone()));
            }
        }
        Some(out)
    }

    fn reducedness(&self) -> Reducedness<Self::Elem> {
        match (self.left.reducedness(), self.right.reducedness()) {
            (Reducedness::KnownFalse { witness }, _) => {
                Reducedness::KnownFalse { witness: (witness, self.right.zero()) }
            }
            (_, Reducedness::KnownFalse { witness }) => {
                Reducedness::KnownFalse { witness: (self.left.zero(), witness) }
            }
            (Reducedness::Verified, Reducedness::Verified) => Reducedness::Verified,
            _ => Reducedness::Asserted,
        }
    }

    fn is_non_zerodivisor(&self, x: &Self::Elem) -> bool {
        self.left.is_non_zerodivisor(&x.0) && self.right.is_non_zerodivisor(&x.1)
    }

    fn render(&self, x: &Self::Elem) -> String {
        format!("({},{})", self.left.render(&x.0), self.right.render(&x.1))
    }

    fn parse_element(&self, text: &str) -> Result<Self::Elem, RingError> {
        let err = || RingError::Parse { ring: self.name(), input: text.to_string() };
        let (l, r) = split_pair(text).ok_or_else(err)?;
        Ok((self.left.parse_element(l)?, self.right.parse_element(r)?))
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem {
        (self.left.sample(rng, bound), self.right.sample(rng, bound))
    }

    fn name(&self) -> String {
        format!("{}x{}", self.left.name(), self.right.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ModRing};
    use num_bigint::BigInt;

    fn zz(a: i64, b: i64) -> (BigInt, BigInt) {
        (BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn componentwise() {
        let r = ProductRing::new(Integers, Integers);
        assert_eq!(r.mul(&zz(2, 0), &zz(0, 3)), zz(0, 0));
        assert_eq!(r.mul(&zz(1, 0), &zz(1, 0)), zz(1, 0));
        assert_eq!(r.reducedness(), Reducedness::Verified);
        assert!(!r.is_non_zerodivisor(&zz(1, 0)));
        assert!(r.is_non_zerodivisor(&zz(-1, 7)));
    }

    #[test]
    fn finite_product() {
        let m = ModRing::new(6).unwrap();
        let r = ProductRing::new(m.clone(), m);
        assert_eq!(r.one(), (1, 1));
        assert_eq!(r.cardinality(), Some(36));
        assert_eq!(r.elements().unwrap()[7], (1, 1));
    }

    #[test]
    fn nonreduced_factor_gives_witness() {
        let r = ProductRing::new(ModRing::new(3).unwrap(), ModRing::allow_non_reduced(9).unwrap());
        assert_eq!(r.reducedness(), Reducedness::KnownFalse { witness: (0, 3) });
    }

    #[test]
    fn nested_render_parse() {
        let inner = ProductRing::new(ModRing::new(2).unwrap(), ModRing::new(3).unwrap());
        let r = ProductRing::new(inner, Integers);
        let x = ((1, 2), BigInt::from(-5));
        let text = r.render(&x);
        assert_eq!(text, "((1,2),-5)");
        assert_eq!(r.parse_element(&text).unwrap(), x);
        assert!(r.parse_element("(1,2").is_err());
    }
}
