//! cc-equivalence and rf-equivalence of fracpairs.
//!
//! Over ℤ both relations are decided through canonical forms. Over a finite
//! ring cc-equivalence is computed as a partition; two further oracles give
//! necessary conditions (cross-multiplication) and separation certificates
//! (localization at a saturated subset).

use alloc::string::String;

use crate::fracpair::Fracpair;
use crate::ring::{
    localization_equiv, saturated_mult_subsets, Integers, ModRing, ProductRing, Ring, RingError, SaturatedSubset,
};

mod integer;
mod partition;

pub use integer::{
    cc_normalize_int, cc_normalize_parts, is_cc_canonical, is_rf_canonical, rf_normalize_int, rf_normalize_parts,
    CcNormalForm, RfNormalForm,
};
pub use partition::{cc_partition, cc_partition_unchecked, EquivalencePartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivError {
    #[error("{0} is infinite")]
    Infinite(String),
    #[error("{ring} is not reduced: {witness} squares to 0")]
    NotReduced { ring: String, witness: String },
    #[error("fracpairs over different rings: {0} and {1}")]
    MixedRings(String, String),
    #[error("{0} is not an element of the ring")]
    ForeignElement(String),
    #[error("denominator {0} is a zero divisor")]
    ZeroDivisorDenominator(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Rings whose cc-equivalence can be decided here.
pub trait CcDecidable: Ring {
    fn decide_cc(&self, a: &Fracpair<Self>, b: &Fracpair<Self>) -> Result<bool, EquivError>;
}

impl CcDecidable for Integers {
    fn decide_cc(&self, a: &Fracpair<Self>, b: &Fracpair<Self>) -> Result<bool, EquivError> {
        Ok(cc_normalize_int(a) == cc_normalize_int(b))
    }
}

impl CcDecidable for ModRing {
    fn decide_cc(&self, a: &Fracpair<Self>, b: &Fracpair<Self>) -> Result<bool, EquivError> {
        cc_partition(self)?.same_class(a, b)
    }
}

impl<A: Ring, B: Ring> CcDecidable for ProductRing<A, B> {
    fn decide_cc(&self, a: &Fracpair<Self>, b: &Fracpair<Self>) -> Result<bool, EquivError> {
        cc_partition(self)?.same_class(a, b)
    }
}

fn same_ring<R: Ring>(a: &Fracpair<R>, b: &Fracpair<R>) -> Result<(), EquivError> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(EquivError::MixedRings(a.ring().name(), b.ring().name()))
    }
}

/// `a =cc b`. A finite ring builds its partition on every call; use
/// [`EquivalencePartition::same_class`] for repeated queries.
pub fn cc_equal<R: CcDecidable>(a: &Fracpair<R>, b: &Fracpair<R>) -> Result<bool, EquivError> {
    same_ring(a, b)?;
    a.ring().decide_cc(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossMult {
    /// The necessary condition holds; `a =cc b` may or may not.
    Consistent,
    /// `a ≠cc b` is proved.
    Inconsistent,
}

/// With `a = p/q` and `q` a non-zerodivisor, `p/q =cc r/s` forces `s` to be
/// a non-zerodivisor and `p·s = q·r`.
pub fn cross_mult_check<R: Ring>(a: &Fracpair<R>, b: &Fracpair<R>) -> Result<CrossMult, EquivError> {
    same_ring(a, b)?;
    let r = a.ring();
    if !r.is_non_zerodivisor(a.den()) {
        return Err(EquivError::ZeroDivisorDenominator(r.render(a.den())));
    }
    let holds = r.is_non_zerodivisor(b.den()) && r.mul(a.num(), b.den()) == r.mul(a.den(), b.num());
    Ok(if holds { CrossMult::Consistent } else { CrossMult::Inconsistent })
}

/// Looks for a saturated multiplicative subset `S` containing both
/// denominators in which `a` and `b` are not equivalent in `S⁻¹R`; such an
/// `S` proves `a ≠cc b`. Subsets are tried smallest first.
pub fn separation_by_localization<R: Ring>(
    a: &Fracpair<R>,
    b: &Fracpair<R>,
) -> Result<Option<SaturatedSubset<R::Elem>>, EquivError> {
    same_ring(a, b)?;
    let r = a.ring();
    let pa = (a.num().clone(), a.den().clone());
    let pb = (b.num().clone(), b.den().clone());
    for s in saturated_mult_subsets(r)? {
        if s.contains(a.den()) && s.contains(b.den()) && !localization_equiv(r, &s, &pa, &pb)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    fn m6(n: u64, d: u64) -> Fracpair<ModRing> {
        Fracpair::new(&ModRing::new(6).unwrap(), n, d)
    }

    fn z(n: i64, d: i64) -> Fracpair<Integers> {
        Fracpair::new(&Integers, BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cc_equal_examples() {
        assert!(cc_equal(&m6(5, 4), &m6(1, 2)).unwrap());
        assert!(!cc_equal(&m6(1, 1), &m6(2, 2)).unwrap());
        assert!(cc_equal(&z(3, 2), &z(3, 2)).unwrap());
        assert!(cc_equal(&z(4, 12), &z(2, 6)).unwrap());
        assert!(!cc_equal(&z(1, 1), &z(2, 2)).unwrap());
        let five = Fracpair::one(&ModRing::new(5).unwrap());
        assert!(matches!(cc_equal(&m6(1, 1), &five), Err(EquivError::MixedRings(..))));
        let z4 = ModRing::allow_non_reduced(4).unwrap();
        assert!(matches!(cc_equal(&Fracpair::one(&z4), &Fracpair::zero(&z4)), Err(EquivError::NotReduced { .. })));
    }

    #[test]
    fn cross_multiplication() {
        assert_eq!(cross_mult_check(&z(1, 1), &z(2, 2)).unwrap(), CrossMult::Consistent);
        assert_eq!(cross_mult_check(&z(1, 2), &z(1, 3)).unwrap(), CrossMult::Inconsistent);
        assert_eq!(cross_mult_check(&z(2, 4), &z(1, 2)).unwrap(), CrossMult::Consistent);
        assert_eq!(cross_mult_check(&z(1, 2), &z(1, 0)).unwrap(), CrossMult::Inconsistent);
        assert!(matches!(cross_mult_check(&z(1, 0), &z(1, 2)), Err(EquivError::ZeroDivisorDenominator(_))));
        assert!(cross_mult_check(&m6(1, 2), &m6(1, 1)).is_err());
        assert_eq!(cross_mult_check(&m6(1, 5), &m6(5, 1)).unwrap(), CrossMult::Consistent);
    }

    #[test]
    fn cross_multiplication_is_necessary_on_z6() {
        let r = ModRing::new(6).unwrap();
        let p = cc_partition(&r).unwrap();
        for q in [1u64, 5] {
            for a_num in 0..6 {
                let a = m6(a_num, q);
                for c in 0..p.class_count() {
                    for b in p.members(c) {
                        if p.same_class(&a, &b).unwrap() {
                            assert_eq!(cross_mult_check(&a, &b).unwrap(), CrossMult::Consistent);
                        }
                    }
                }
            }
        }
    }

    fn cert(a: Fracpair<ModRing>, b: Fracpair<ModRing>) -> Option<String> {
        let s = separation_by_localization(&a, &b).unwrap();
        s.map(|s| s.render(a.ring()))
    }

    #[test]
    fn separation_examples() {
        assert_eq!(cert(m6(0, 3), m6(1, 3)).as_deref(), Some("{1,3,5}"));
        assert_eq!(cert(m6(0, 2), m6(1, 2)).as_deref(), Some("{1,2,4,5}"));
        assert_eq!(cert(m6(1, 2), m6(2, 2)).as_deref(), Some("{1,2,4,5}"));
        assert_eq!(cert(m6(0, 2), m6(2, 2)).as_deref(), Some("{1,2,4,5}"));
        assert_eq!(cert(m6(1, 1), m6(2, 2)), None);
        assert_eq!(cert(m6(2, 1), m6(5, 1)).as_deref(), Some("{1,5}"));
    }

    #[test]
    fn separation_never_contradicts_partition() {
        let r = ModRing::new(6).unwrap();
        let p = cc_partition(&r).unwrap();
        let all: Vec<_> = (0..6).flat_map(|n| (0..6).map(move |d| m6(n, d))).collect();
        for a in &all {
            for b in &all {
                if separation_by_localization(a, b).unwrap().is_some() {
                    assert!(!p.same_class(a, b).unwrap(), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn error_messages() {
        let e = EquivError::NotReduced { ring: "Z/4Z".into(), witness: "2".into() };
        assert_eq!(e.to_string(), "Z/4Z is not reduced: 2 squares to 0");
    }
}
