//! Fracpairs: ordered pairs `p/q` of ring elements used as fractions, with no
//! restriction on the denominator.
//!
//! The operations are purely structural; nothing here cancels or normalizes.
//! Normal forms live in [`crate::equivalence`].

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use crate::ring::{Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FracpairError {
    #[error("fracpairs over different rings: {0} and {1}")]
    MixedRings(String, String),
    #[error("fracpair text {0:?} has no '/'")]
    MissingSlash(String),
    #[error(transparent)]
    Element(#[from] RingError),
}

/// `num/den` over `ring`. `den = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fracpair<R: Ring> {
    ring: R,
    num: R::Elem,
    den: R::Elem,
}

impl<R: Ring> Fracpair<R> {
    pub fn new(ring: &R, num: R::Elem, den: R::Elem) -> Self {
        Fracpair { ring: ring.clone(), num, den }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn num(&self) -> &R::Elem {
        &self.num
    }

    pub fn den(&self) -> &R::Elem {
        &self.den
    }

    pub fn into_parts(self) -> (R::Elem, R::Elem) {
        (self.num, self.den)
    }

    /// `0 = 0/1`
    pub fn zero(ring: &R) -> Self {
        Self::new(ring, ring.zero(), ring.one())
    }

    /// `1 = 1/1`
    pub fn one(ring: &R) -> Self {
        Self::new(ring, ring.one(), ring.one())
    }

    /// `⊥ = 1/0`
    pub fn bottom(ring: &R) -> Self {
        Self::new(ring, ring.one(), ring.zero())
    }

    fn same_ring(&self, other: &Self) -> Result<(), FracpairError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(FracpairError::MixedRings(self.ring.name(), other.ring.name()))
        }
    }

    /// `x/y + u/v = (x·v + u·y)/(y·v)`
    pub fn add(&self, other: &Self) -> Result<Self, FracpairError> {
        self.same_ring(other)?;
        let r = &self.ring;
        let num = r.add(&r.mul(&self.num, &other.den), &r.mul(&other.num, &self.den));
        Ok(Self::new(r, num, r.mul(&self.den, &other.den)))
    }

    /// `x/y · u/v = (x·u)/(y·v)`
    pub fn mul(&self, other: &Self) -> Result<Self, FracpairError> {
        self.same_ring(other)?;
        let r = &self.ring;
        Ok(Self::new(r, r.mul(&self.num, &other.num), r.mul(&self.den, &other.den)))
    }

    /// `−(x/y) = (−x)/y`
    pub fn neg(&self) -> Self {
        Self::new(&self.ring, self.ring.neg(&self.num), self.den.clone())
    }

    /// `(x/y)⁻¹ = (y·y)/(x·y)`; a zero factor in the denominator survives.
    pub fn inv(&self) -> Self {
        let r = &self.ring;
        Self::new(r, r.mul(&self.den, &self.den), r.mul(&self.num, &self.den))
    }

    pub fn has_zero_den(&self) -> bool {
        self.ring.is_zero(&self.den)
    }

    /// Parses `p/q` in the ring's element grammar, whitespace allowed around
    /// the slash. The slash is looked up outside parentheses.
    pub fn parse(ring: &R, text: &str) -> Result<Self, FracpairError> {
        let mut depth = 0i32;
        let mut slash = None;
        for (i, c) in text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    slash = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = slash.ok_or_else(|| FracpairError::MissingSlash(text.to_string()))?;
        let num = ring.parse_element(&text[..i])?;
        let den = ring.parse_element(&text[i + 1..])?;
        Ok(Self::new(ring, num, den))
    }

    pub fn render(&self) -> String {
        format!("{}/{}", self.ring.render(&self.num), self.ring.render(&self.den))
    }
}

impl<R: Ring> fmt::Display for Fracpair<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{DualIntRing, Integers, ModRing, ProductRing};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(n: i64, d: i64) -> Fracpair<Integers> {
        Fracpair::new(&Integers, BigInt::from(n), BigInt::from(d))
    }

    fn m6(n: u64, d: u64) -> Fracpair<ModRing> {
        Fracpair::new(&ModRing::new(6).unwrap(), n, d)
    }

    #[test]
    fn table_three_over_z6() {
        assert_eq!(m6(1, 2).add(&m6(1, 3)).unwrap(), m6(5, 0));
        assert_eq!(m6(1, 2).mul(&m6(1, 3)).unwrap(), m6(1, 0));
        assert_eq!(m6(1, 2).neg(), m6(5, 2));
        assert_eq!(m6(4, 1).inv(), m6(1, 4));
    }

    #[test]
    fn table_three_over_integers() {
        assert_eq!(z(1, 2).add(&z(1, 2)).unwrap(), z(4, 4));
        assert_eq!(z(2, 3).mul(&z(5, 7)).unwrap(), z(10, 21));
        assert_eq!(z(7, 9).add(&Fracpair::zero(&Integers)).unwrap(), z(7, 9));
        assert_eq!(z(0, 1).neg(), z(0, 1));
        assert_eq!(z(0, 1).inv(), z(1, 0));
        assert_eq!(z(1, 1).inv(), z(1, 1));
    }

    #[test]
    fn constants() {
        assert_eq!(Fracpair::zero(&Integers), z(0, 1));
        assert_eq!(Fracpair::one(&Integers), z(1, 1));
        assert_eq!(Fracpair::bottom(&Integers), z(1, 0));
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = Fracpair::one(&ModRing::new(6).unwrap());
        let b = Fracpair::one(&ModRing::new(5).unwrap());
        assert_eq!(a.add(&b), Err(FracpairError::MixedRings("Z/6Z".into(), "Z/5Z".into())));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(Fracpair::parse(&Integers, " -3 / 4").unwrap(), z(-3, 4));
        assert_eq!(z(-3, 0).to_string(), "-3/0");
        assert!(matches!(Fracpair::parse(&Integers, "34"), Err(FracpairError::MissingSlash(_))));
        assert!(Fracpair::parse(&ModRing::new(6).unwrap(), "7/1").is_err());
        let p = ProductRing::new(ModRing::new(2).unwrap(), ModRing::new(3).unwrap());
        let f = Fracpair::parse(&p, "(1,2)/(0,1)").unwrap();
        assert_eq!(f.num(), &(1, 2));
        assert_eq!(f.render(), "(1,2)/(0,1)");
        let d = Fracpair::parse(&DualIntRing, "2X+1 / X").unwrap();
        assert_eq!(d.render(), "2X+1/X");
    }

    fn small() -> impl Strategy<Value = Fracpair<Integers>> {
        (-50i64..50, -50i64..50).prop_map(|(n, d)| z(n, d))
    }

    proptest! {
        #[test]
        fn structural_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.neg().neg(), a.clone());
            prop_assert!(a.add(&Fracpair::bottom(&Integers)).unwrap().has_zero_den());
        }

        #[test]
        fn inverse_keeps_zero_denominators(n in -50i64..50) {
            prop_assert!(z(n, 0).inv().has_zero_den());
        }

        #[test]
        fn bottom_absorbs_denominators_mod_n(n in 2u64..30, p in 0u64..30, q in 0u64..30) {
            let r = ModRing::allow_non_reduced(n).unwrap();
            let a = Fracpair::new(&r, p % n, q % n);
            prop_assert!(a.add(&Fracpair::bottom(&r)).unwrap().has_zero_den());
        }

        #[test]
        fn render_parse_round_trip(a in small()) {
            prop_assert_eq!(Fracpair::parse(&Integers, &a.render()).unwrap(), a);
        }
    }
}
