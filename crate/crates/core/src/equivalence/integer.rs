//! Normal forms for fracpairs over ℤ.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize, is_squarefree, radical};
use crate::fracpair::Fracpair;
use crate::ring::Integers;

/// A canonical representative of a cc-class over ℤ.
///
/// Exactly one of: `0/d` with `d ≥ 1` squarefree; `1/0`; `n/1`; or `n/d`
/// with `d ≥ 2`, `n ≠ 0` and no prime `f` with `f² | d` and `f | n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CcNormalForm {
    num: BigInt,
    den: BigInt,
}

/// A canonical representative of an rf-class over ℤ: `1/0`, `0/1`, or
/// `n/d` with `d ≥ 1` and `gcd(n, d) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RfNormalForm {
    num: BigInt,
    den: BigInt,
}

macro_rules! normal_form_common {
    ($t:ty) => {
        impl $t {
            pub fn num(&self) -> &BigInt {
                &self.num
            }

            pub fn den(&self) -> &BigInt {
                &self.den
            }

            pub fn to_fracpair(&self) -> Fracpair<Integers> {
                Fracpair::new(&Integers, self.num.clone(), self.den.clone())
            }

            pub fn render(&self) -> String {
                format!("{}/{}", self.num, self.den)
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}/{}", self.num, self.den)
            }
        }
    };
}

normal_form_common!(CcNormalForm);
normal_form_common!(RfNormalForm);

impl RfNormalForm {
    /// Wraps `num/den` if it is already rf-canonical.
    pub fn from_parts(num: BigInt, den: BigInt) -> Option<Self> {
        is_rf_canonical(&num, &den).then_some(RfNormalForm { num, den })
    }
}

impl CcNormalForm {
    /// Wraps `num/den` if it is already cc-canonical.
    pub fn from_parts(num: BigInt, den: BigInt) -> Option<Self> {
        is_cc_canonical(&num, &den).then_some(CcNormalForm { num, den })
    }
}

fn bottom_parts() -> (BigInt, BigInt) {
    (BigInt::one(), BigInt::zero())
}

fn magnitude(k: &BigInt) -> BigUint {
    k.magnitude().clone()
}

pub fn cc_normalize_int(a: &Fracpair<Integers>) -> CcNormalForm {
    cc_normalize_parts(a.num().clone(), a.den().clone())
}

pub fn cc_normalize_parts(num: BigInt, den: BigInt) -> CcNormalForm {
    cc_normalize_ordered(num, den, |_| {})
}

/// `permute` reorders the candidate primes before the
/// cancellation loop runs; the result must not depend on it.
pub(crate) fn cc_normalize_ordered(
    mut num: BigInt,
    mut den: BigInt,
    permute: impl FnOnce(&mut Vec<(BigUint, u32)>),
) -> CcNormalForm {
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if den.is_zero() {
        let (num, den) = bottom_parts();
        return CcNormalForm { num, den };
    }
    if num.is_zero() {
        return CcNormalForm { num, den: radical(&den) };
    }
    // a prime with f | num and f² | den divides gcd(num, den)
    let mut factors = factorize(&magnitude(&num.gcd(&den)));
    permute(&mut factors);
    for (f, _) in factors {
        let f = BigInt::from_biguint(Sign::Plus, f);
        let square = &f * &f;
        while den.is_multiple_of(&square) && num.is_multiple_of(&f) {
            num /= &f;
            den /= &f;
        }
    }
    CcNormalForm { num, den }
}

pub fn is_cc_canonical(num: &BigInt, den: &BigInt) -> bool {
    if den.is_negative() {
        return false;
    }
    if num.is_zero() {
        return !den.is_zero() && is_squarefree(&magnitude(den));
    }
    if den.is_zero() {
        return num.is_one();
    }
    if den.is_one() {
        return true;
    }
    factorize(&magnitude(&num.gcd(den))).into_iter().all(|(f, _)| {
        let f = BigInt::from_biguint(Sign::Plus, f);
        !den.is_multiple_of(&(&f * &f))
    })
}

pub fn rf_normalize_int(a: &Fracpair<Integers>) -> RfNormalForm {
    rf_normalize_parts(a.num().clone(), a.den().clone())
}

pub fn rf_normalize_parts(num: BigInt, den: BigInt) -> RfNormalForm {
    if den.is_zero() {
        let (num, den) = bottom_parts();
        return RfNormalForm { num, den };
    }
    if num.is_zero() {
        return RfNormalForm { num: BigInt::zero(), den: BigInt::one() };
    }
    let g = num.gcd(&den);
    let (mut num, mut den) = (num / &g, den / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    RfNormalForm { num, den }
}

pub fn is_rf_canonical(num: &BigInt, den: &BigInt) -> bool {
    if den.is_zero() {
        return num.is_one();
    }
    if num.is_zero() {
        return den.is_one();
    }
    den.is_positive() && num.gcd(den).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn b(k: i64) -> BigInt {
        BigInt::from(k)
    }

    fn cc(n: i64, d: i64) -> (i64, i64) {
        let f = cc_normalize_parts(b(n), b(d));
        (f.num.try_into().unwrap(), f.den.try_into().unwrap())
    }

    fn rf(n: i64, d: i64) -> (i64, i64) {
        let f = rf_normalize_parts(b(n), b(d));
        (f.num.try_into().unwrap(), f.den.try_into().unwrap())
    }

    #[test]
    fn cc_examples() {
        assert_eq!(cc(4, 12), (2, 6));
        assert_eq!(cc(7, 0), (1, 0));
        assert_eq!(cc(0, -12), (0, 6));
        assert_eq!(cc(2, 2), (2, 2));
        assert_eq!(cc(12, 16), (3, 4));
        assert_eq!(cc(-3, -9), (1, 3));
        assert_eq!(cc(5, -1), (-5, 1));
        assert_eq!(cc(1, 4), (1, 4));
        assert_eq!(cc(8, 8), (2, 2));
        assert_eq!(cc(0, 0), (1, 0));
    }

    #[test]
    fn rf_examples() {
        assert_eq!(rf(4, 6), (2, 3));
        assert_eq!(rf(2, 2), (1, 1));
        assert_eq!(rf(5, 0), (1, 0));
        assert_eq!(rf(0, 7), (0, 1));
        assert_eq!(rf(4, 12), (1, 3));
        assert_eq!(rf(3, -6), (-1, 2));
    }

    #[test]
    fn canonical_predicates() {
        assert!(is_cc_canonical(&b(2), &b(6)));
        assert!(!is_cc_canonical(&b(4), &b(12)));
        assert!(!is_cc_canonical(&b(0), &b(12)));
        assert!(!is_cc_canonical(&b(0), &b(0)));
        assert!(!is_cc_canonical(&b(3), &b(0)));
        assert!(!is_cc_canonical(&b(1), &b(-2)));
        assert!(is_cc_canonical(&b(-9), &b(1)));
        assert!(is_cc_canonical(&b(3), &b(4)));
        assert!(is_rf_canonical(&b(-2), &b(3)));
        assert!(!is_rf_canonical(&b(2), &b(4)));
        assert!(!is_rf_canonical(&b(0), &b(3)));
        assert!(CcNormalForm::from_parts(b(4), b(12)).is_none());
        assert_eq!(RfNormalForm::from_parts(b(1), b(0)).unwrap().to_string(), "1/0");
    }

    /// Cancels by scanning candidate divisors directly, without factoring.
    fn cc_oracle(mut n: i64, mut d: i64) -> (i64, i64) {
        if d < 0 {
            n = -n;
            d = -d;
        }
        if d == 0 {
            return (1, 0);
        }
        if n == 0 {
            let mut rad = 1;
            for p in 2..=d {
                if d % p == 0 && (2..p).all(|q| p % q != 0) {
                    rad *= p;
                }
            }
            return (0, rad);
        }
        loop {
            let f = (2..=d).find(|&f| d % (f * f) == 0 && n % f == 0 && (2..f).all(|q| f % q != 0));
            match f {
                Some(f) => {
                    n /= f;
                    d /= f;
                }
                None => return (n, d),
            }
        }
    }

    #[test]
    fn agrees_with_divisor_scan() {
        for n in -40..=40 {
            for d in -60..=60 {
                assert_eq!(cc(n, d), cc_oracle(n, d), "{n}/{d}");
            }
        }
    }

    #[test]
    fn prime_order_does_not_matter() {
        let cases = [(2 * 3 * 5 * 7, 4 * 9 * 25 * 49 * 11), (8 * 27, 16 * 81), (-12, 72 * 5), (30, 900)];
        for (n, d) in cases {
            let plain = cc_normalize_parts(b(n), b(d));
            let rev = cc_normalize_ordered(b(n), b(d), |f| f.reverse());
            let rot = cc_normalize_ordered(b(n), b(d), |f| {
                if !f.is_empty() {
                    f.rotate_left(1)
                }
            });
            assert_eq!(plain, rev);
            assert_eq!(plain, rot);
        }
    }

    proptest! {
        #[test]
        fn cc_sound_and_idempotent(x in -3000i64..3000, y in -3000i64..3000, z in -3000i64..3000) {
            let lhs = cc_normalize_parts(b(x) * b(z), b(y) * b(z) * b(z));
            let rhs = cc_normalize_parts(b(x), b(y) * b(z));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(is_cc_canonical(&lhs.num, &lhs.den));
            prop_assert_eq!(cc_normalize_parts(lhs.num.clone(), lhs.den.clone()), lhs);
        }

        #[test]
        fn order_independent(n in -100_000i64..100_000, d in -100_000i64..100_000, seed in any::<u64>()) {
            let shuffled = cc_normalize_ordered(b(n), b(d), |f| {
                let len = f.len();
                if len > 1 {
                    let mut s = seed;
                    for i in (1..len).rev() {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        f.swap(i, (s >> 33) as usize % (i + 1));
                    }
                }
            });
            prop_assert_eq!(shuffled, cc_normalize_parts(b(n), b(d)));
        }

        #[test]
        fn zero_denominator_is_preserved(n in -10_000i64..10_000, d in -10_000i64..10_000) {
            prop_assert_eq!(cc(n, d).1 == 0, d == 0);
        }

        #[test]
        fn eq00_instances(x in -2000i64..2000, y in -2000i64..2000, z in -2000i64..2000) {
            prop_assert_eq!(cc_normalize_parts(b(x), b(x) * b(x)), cc_normalize_parts(b(1), b(x)));
            prop_assert_eq!(cc_normalize_parts(b(x) * b(z), b(z) * b(z)), cc_normalize_parts(b(x), b(z)));
            prop_assert_eq!(cc_normalize_parts(b(x), -b(y)), cc_normalize_parts(-b(x), b(y)));
        }

        #[test]
        fn rf_canonical_and_idempotent(n in -100_000i64..100_000, d in -100_000i64..100_000) {
            let f = rf_normalize_parts(b(n), b(d));
            prop_assert!(is_rf_canonical(&f.num, &f.den));
            prop_assert_eq!(rf_normalize_parts(f.num.clone(), f.den.clone()), f);
        }

        #[test]
        fn rf_refines_cc(x in -500i64..500, y in -500i64..500, z in -500i64..500) {
            // pairs known to be cc-equal: the two sides of a CC instance
            let a = (b(x) * b(z), b(y) * b(z) * b(z));
            let c = (b(x), b(y) * b(z));
            prop_assert_eq!(rf_normalize_parts(a.0, a.1), rf_normalize_parts(c.0, c.1));
        }

        #[test]
        fn cc_equal_forms_are_rf_equal(n in -300i64..300, d in -300i64..300, m in -300i64..300, e in -300i64..300) {
            if cc(n, d) == cc(m, e) {
                prop_assert_eq!(rf(n, d), rf(m, e));
            }
        }

        #[test]
        fn quasi_cardinality(x in -5000i64..5000, y in -5000i64..5000, z in -5000i64..5000) {
            let lhs = Fracpair::new(&Integers, b(x), b(y)).add(&Fracpair::new(&Integers, b(z), b(y))).unwrap();
            prop_assert_eq!(cc_normalize_int(&lhs), cc_normalize_parts(b(x) + b(z), b(y)));
        }
    }

    #[test]
    fn radical_denominators_for_zero() {
        let dens = [1, 2, 4, 8, 12, 18, 36, 1000];
        let rads: Vec<i64> = dens.iter().map(|&d| cc(0, d).1).collect();
        assert_eq!(rads, vec![1, 2, 2, 2, 6, 6, 6, 10]);
    }
}
