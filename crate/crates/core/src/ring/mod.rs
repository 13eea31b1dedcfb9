//! Reduced commutative rings and the ring-level constructions the cancellation
//! equivalences rely on.
//!
//! A [`Ring`] is a value describing a carrier and its operations; elements are
//! plain values owned by the caller. Finite rings enumerate their carrier in a
//! fixed order (residues `0..n`, products lexicographically) and that order is
//! what "smallest" means wherever representatives are chosen.

mod dual;
mod integers;
mod modular;
mod product;
mod props;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use rand::Rng as RandRng;

pub use dual::{DualInt, DualIntRing};
pub use integers::Integers;
pub use modular::ModRing;
pub use product::ProductRing;
pub use props::{
    bmcr_report, check_cr_axioms, check_eqnn, check_reduced, localization_equiv, non_zerodivisors, satisfies_bmcr,
    saturated_mult_subsets, BmcrVerdict, EqnnReport, RingCarrier, SaturatedSubset, DEFAULT_BOUND,
};

/// Whether `x·x = 0 ⇒ x = 0` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reducedness<E> {
    /// Checked over the whole (finite) carrier, or true by construction.
    Verified,
    /// Fails; `witness` is nonzero with `witness·witness = 0`.
    KnownFalse { witness: E },
    /// Claimed without mechanical verification.
    Asserted,
}

impl<E> Reducedness<E> {
    pub fn holds(&self) -> bool {
        !matches!(self, Reducedness::KnownFalse { .. })
    }

    pub fn map<F, T>(self, f: F) -> Reducedness<T>
    where
        F: FnOnce(E) -> T,
    {
        match self {
            Reducedness::Verified => Reducedness::Verified,
            Reducedness::Asserted => Reducedness::Asserted,
            Reducedness::KnownFalse { witness } => Reducedness::KnownFalse { witness: f(witness) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("Z/{modulus}Z is not reduced: {witness}*{witness} = 0")]
    NotReduced { modulus: u64, witness: u64 },
    #[error("operation needs a finite ring, {0} is infinite")]
    Infinite(String),
    #[error("cannot parse {input:?} as an element of {ring}")]
    Parse { ring: String, input: String },
    #[error("{0} is not a saturated multiplicative subset")]
    NotSaturated(String),
    #[error("denominator {0} lies outside the multiplicative subset")]
    DenominatorOutside(String),
}

/// A commutative ring with unit.
///
/// Implementations must satisfy the commutative ring axioms; the property
/// suite in [`check_cr_axioms`] checks them exhaustively on finite instances
/// and by sampling otherwise.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Number of elements, `None` for infinite carriers.
    fn cardinality(&self) -> Option<usize>;

    /// The whole carrier in canonical order, `None` for infinite carriers.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    fn reducedness(&self) -> Reducedness<Self::Elem>;

    /// `x·y = 0 ⇒ y = 0` for all `y`. Decided structurally per instance;
    /// [`non_zerodivisors`] recomputes the same set by exhaustive scan.
    fn is_non_zerodivisor(&self, x: &Self::Elem) -> bool;

    fn render(&self, x: &Self::Elem) -> String;

    fn parse_element(&self, text: &str) -> Result<Self::Elem, RingError>;

    /// A random element; integer coordinates are drawn with magnitude at most
    /// `bound`, and 0, 1 and −1 are forced with a fixed frequency.
    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, bound: u64) -> Self::Elem;

    /// Short human-readable name such as `Z/6Z`.
    fn name(&self) -> String;
}

/// Integer draw with the special values 0, 1 and −1 forced one time in four.
pub(crate) fn sample_i64<G: RandRng + ?Sized>(rng: &mut G, bound: u64) -> i64 {
    let bound = bound.min(i64::MAX as u64) as i64;
    if rng.gen_ratio(1, 4) {
        [0, 1, -1][rng.gen_range(0..3)]
    } else {
        rng.gen_range(-bound..=bound)
    }
}
