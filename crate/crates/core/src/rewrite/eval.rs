use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::term::Term;
use crate::equivalence::CcNormalForm;
use crate::meadow::{ExtRational, MeadowModel};
use crate::ring::Ring;

/// Evaluates a meadow-dialect term in a model.
pub fn eval_in<M: MeadowModel>(model: &M, t: &Term) -> M::Elem {
    match t {
        Term::Zero => model.zero(),
        Term::One => model.one(),
        Term::Bottom => model.bottom(),
        Term::Neg(a) => model.neg(&eval_in(model, a)),
        Term::Inv(a) => model.inv(&eval_in(model, a)),
        Term::Add(a, b) => model.add(&eval_in(model, a), &eval_in(model, b)),
        Term::Mul(a, b) => model.mul(&eval_in(model, a), &eval_in(model, b)),
    }
}

/// Evaluates a ring-dialect term in a ring. `None` if `⊥` or `⁻¹` occurs.
pub fn eval_in_ring<R: Ring>(ring: &R, t: &Term) -> Option<R::Elem> {
    Some(match t {
        Term::Zero => ring.zero(),
        Term::One => ring.one(),
        Term::Bottom | Term::Inv(_) => return None,
        Term::Neg(a) => ring.neg(&eval_in_ring(ring, a)?),
        Term::Add(a, b) => ring.add(&eval_in_ring(ring, a)?, &eval_in_ring(ring, b)?),
        Term::Mul(a, b) => ring.mul(&eval_in_ring(ring, a)?, &eval_in_ring(ring, b)?),
    })
}

/// The canonical term of a rational: a numeral, or `n·m⁻¹` / `(−n)·m⁻¹`
/// with `n`, `m` positive numerals, `m > 1` and `gcd(n, m) = 1`.
pub fn rational_term(q: &BigRational) -> Term {
    if q.denom().is_one() {
        return Term::numeral(q.numer());
    }
    let n = Term::numeral(&q.numer().abs());
    let n = if q.numer().is_negative() { Term::neg(n) } else { n };
    Term::mul(n, Term::inv(Term::numeral(q.denom())))
}

/// Canonical term of an element of `ℚ⊥`.
pub fn ext_rational_term(v: &ExtRational) -> Term {
    match v {
        ExtRational::Bottom => Term::Bottom,
        ExtRational::Rat(q) => rational_term(q),
    }
}

/// `n·m⁻¹` with numerals `n`, `m`.
pub fn fracpair_term(num: &BigInt, den: &BigInt) -> Term {
    Term::mul(Term::numeral(num), Term::inv(Term::numeral(den)))
}

pub fn cc_form_term(f: &CcNormalForm) -> Term {
    fracpair_term(f.num(), f.den())
}
