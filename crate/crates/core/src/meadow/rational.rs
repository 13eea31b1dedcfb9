//! Exact rationals with a totalized inverse: `ℚ⊥` (`0⁻¹ = ⊥`) and `ℚ₀`
//! (`0⁻¹ = 0`).

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::equivalence::RfNormalForm;
use crate::fracpair::Fracpair;
use crate::ring::Integers;

/// An element of `ℚ⊥`. Rational payloads are kept in lowest terms with a
/// positive denominator; arithmetic never produces anything else.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    Bottom,
    Rat(BigRational),
}

/// An element of `ℚ₀`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q0Rational(pub BigRational);

fn render_ratio(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtRational::Rat(BigRational::one())
    }

    pub fn from_integer(k: impl Into<BigInt>) -> Self {
        ExtRational::Rat(BigRational::from_integer(k.into()))
    }

    /// `n/d` reduced, or `⊥` when `d = 0`.
    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        let d = d.into();
        if d.is_zero() {
            ExtRational::Bottom
        } else {
            ExtRational::Rat(BigRational::new(n.into(), d))
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, ExtRational::Bottom)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Bottom => None,
            ExtRational::Rat(q) => Some(q),
        }
    }

    /// The rf-canonical fracpair denoting this value.
    pub fn to_rf_form(&self) -> RfNormalForm {
        let (n, d) = match self {
            ExtRational::Bottom => (BigInt::one(), BigInt::zero()),
            ExtRational::Rat(q) => (q.numer().clone(), q.denom().clone()),
        };
        RfNormalForm::from_parts(n, d).expect("reduced rationals are rf-canonical")
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Bottom => f.write_str("⊥"),
            ExtRational::Rat(q) => f.write_str(&render_ratio(q)),
        }
    }
}

impl Q0Rational {
    pub fn zero() -> Self {
        Q0Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Q0Rational(BigRational::one())
    }

    /// `n/d` reduced, or `0` when `d = 0`.
    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        let d = d.into();
        if d.is_zero() {
            Q0Rational::zero()
        } else {
            Q0Rational(BigRational::new(n.into(), d))
        }
    }
}

impl fmt::Display for Q0Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ratio(&self.0))
    }
}

pub fn qbot_add(a: &ExtRational, b: &ExtRational) -> ExtRational {
    match (a, b) {
        (ExtRational::Rat(x), ExtRational::Rat(y)) => ExtRational::Rat(x + y),
        _ => ExtRational::Bottom,
    }
}

pub fn qbot_mul(a: &ExtRational, b: &ExtRational) -> ExtRational {
    match (a, b) {
        (ExtRational::Rat(x), ExtRational::Rat(y)) => ExtRational::Rat(x * y),
        _ => ExtRational::Bottom,
    }
}

pub fn qbot_neg(a: &ExtRational) -> ExtRational {
    match a {
        ExtRational::Bottom => ExtRational::Bottom,
        ExtRational::Rat(x) => ExtRational::Rat(-x),
    }
}

pub fn qbot_inv(a: &ExtRational) -> ExtRational {
    match a {
        ExtRational::Rat(x) if !x.is_zero() => ExtRational::Rat(x.recip()),
        _ => ExtRational::Bottom,
    }
}

pub fn q0_add(a: &Q0Rational, b: &Q0Rational) -> Q0Rational {
    Q0Rational(&a.0 + &b.0)
}

pub fn q0_mul(a: &Q0Rational, b: &Q0Rational) -> Q0Rational {
    Q0Rational(&a.0 * &b.0)
}

pub fn q0_neg(a: &Q0Rational) -> Q0Rational {
    Q0Rational(-&a.0)
}

pub fn q0_inv(a: &Q0Rational) -> Q0Rational {
    if a.0.is_zero() {
        Q0Rational::zero()
    } else {
        Q0Rational(a.0.recip())
    }
}

/// `n/m ↦ n·m⁻¹` from cc-fractions over ℤ into `ℚ⊥`.
pub fn hom_fcm_to_qbot(a: &Fracpair<Integers>) -> ExtRational {
    qbot_mul(&ExtRational::from_integer(a.num().clone()), &qbot_inv(&ExtRational::from_integer(a.den().clone())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalDomain {
    Q0,
    QBot,
}

/// Whether the stored value is the value of a canonical term: an integer
/// numeral, `n·m⁻¹` with `m > 1` and `gcd(n, m) = 1`, or (in `ℚ⊥` only) `⊥`.
/// Values built by `BigRational::new_raw` may fail.
pub fn q_canonical_form_check(v: &ExtRational, domain: RationalDomain) -> bool {
    match v {
        ExtRational::Bottom => domain == RationalDomain::QBot,
        ExtRational::Rat(q) => ratio_is_canonical(q),
    }
}

pub fn ratio_is_canonical(q: &BigRational) -> bool {
    let (n, m) = (q.numer(), q.denom());
    if m.is_one() {
        return true;
    }
    m > &BigInt::one() && !n.is_zero() && n.gcd(m).is_one()
}

impl Q0Rational {
    pub fn is_canonical(&self) -> bool {
        ratio_is_canonical(&self.0)
    }
}
