use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng as RandRng;

use super::{sample_i64, Reducedness, Ring, RingError};

/// `a·X + b` in ℤ[X]/(X²).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualInt {
    pub x: BigInt,
    pub c: BigInt,
}

impl DualInt {
    pub fn new(x: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        DualInt { x: x.into(), c: c.into() }
    }
}

/// ℤ[X]/(X²): integer polynomials with `X·X = 0`. Not reduced (`X` is a
/// nonzero nilpotent).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DualIntRing;

impl DualIntRing {
    pub fn new() -> Self {
        DualIntRing
    }

    pub fn indeterminate(&self) -> DualInt {
        DualInt::new(1, 0)
    }
}

impl Ring for DualIntRing {
    type Elem = DualInt;

    fn zero(&self) -> DualInt {
        DualInt::new(0, 0)
    }

    fn one(&self) -> DualInt {
        DualInt::new(0, 1)
    }

    fn add(&self, a: &DualInt, b: &DualInt) -> DualInt {
        DualInt { x: &a.x + &b.x, c: &a.c + &b.c }
    }

    // (nX+m)(pX+q) = (nq+mp)X + mq
    fn mul(&self, a: &DualInt, b: &DualInt) -> DualInt {
        DualInt { x: &a.x * &b.c + &a.c * &b.x, c: &a.c * &b.c }
    }

    fn neg(&self, a: &DualInt) -> DualInt {
        DualInt { x: -&a.x, c: -&a.c }
    }

    fn cardinality(&self) -> Option<usize> {
        None
    }

    fn elements(&self) -> Option<Vec<DualInt>> {
        None
    }

    fn reducedness(&self) -> Reducedness<DualInt> {
        Reducedness::KnownFalse { witness: self.indeterminate() }
    }

    // nX+m with m ≠ 0 cancels; with m = 0 it is killed by X.
    fn is_non_zerodivisor(&self, a: &DualInt) -> bool {
        !a.c.is_zero()
    }

    fn render(&self, a: &DualInt) -> String {
        let coeff = |k: &BigInt| {
            if k.is_one() {
                String::new()
            } else if *k == -BigInt::one() {
                "-".to_string()
            } else {
                k.to_string()
            }
        };
        match (a.x.is_zero(), a.c.is_zero()) {
            (true, _) => a.c.to_string(),
            (false, true) => format!("{}X", coeff(&a.x)),
            (false, false) => {
                let sign = if a.c.is_negative() { '-' } else { '+' };
                format!("{}X{}{}", coeff(&a.x), sign, a.c.abs())
            }
        }
    }

    fn parse_element(&self, text: &str) -> Result<DualInt, RingError> {
        let err = || RingError::Parse { ring: self.name(), input: text.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms: Vec<&str> = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut out = self.zero();
        for term in terms {
            let body = term.strip_prefix('+').unwrap_or(term);
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, body),
            };
            let (is_x, digits) = match body.strip_suffix('X') {
                Some(d) => (true, d),
                None => (false, body),
            };
            let mut k = if digits.is_empty() {
                if !is_x {
                    return Err(err());
                }
                BigInt::one()
            } else {
                if !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                BigInt::from_str(digits).map_err(|_| err())?
            };
            if neg {
                k = -k;
            }
            if is_x {
                out.x += k;
            } else {
                out.c += k;
            }
        }
        Ok(out)
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, bound: u64) -> DualInt {
        DualInt::new(sample_i64(rng, bound), sample_i64(rng, bound))
    }

    fn name(&self) -> String {
        "Z[X]/(X^2)".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: i64, c: i64) -> DualInt {
        DualInt::new(x, c)
    }

    #[test]
    fn multiplication_drops_square() {
        let r = DualIntRing;
        assert_eq!(r.mul(&d(1, 0), &d(1, 0)), r.zero());
        assert_eq!(r.mul(&d(2, 1), &d(3, 1)), d(5, 1));
        assert_eq!(r.add(&d(1, 1), &d(-1, 0)), r.one());
    }

    #[test]
    fn not_reduced() {
        let r = DualIntRing;
        match r.reducedness() {
            Reducedness::KnownFalse { witness } => {
                assert_ne!(witness, r.zero());
                assert_eq!(r.mul(&witness, &witness), r.zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rendering() {
        let r = DualIntRing;
        let cases = [
            (d(5, 1), "5X+1"),
            (d(0, 1), "1"),
            (d(1, 0), "X"),
            (d(-1, 0), "-X"),
            (d(2, -3), "2X-3"),
            (d(-1, 4), "-X+4"),
            (d(0, 0), "0"),
        ];
        for (v, text) in cases {
            assert_eq!(r.render(&v), text);
            assert_eq!(r.parse_element(text).unwrap(), v);
        }
        assert_eq!(r.parse_element(" 3 + 2X ").unwrap(), d(2, 3));
        assert!(r.parse_element("2Y").is_err());
        assert!(r.parse_element("").is_err());
        assert!(r.parse_element("+").is_err());
    }
}
