use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::rational::*;
use super::MeadowModel;
use crate::equivalence::{cc_normalize_int, cc_normalize_parts, CcNormalForm, EquivalencePartition};
use crate::fracpair::Fracpair;
use crate::ring::{Integers, Ring};

/// Default magnitude bound for sampled numerators and denominators.
pub const SAMPLE_BOUND: u64 = 1_000_000;

/// One draw in eight each is forced to `0`, `1`, `-1` and (when available)
/// `⊥`; the rest are `n/d` with `|n| ≤ bound` and `1 ≤ d ≤ bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Draw {
    Zero,
    One,
    MinusOne,
    Bottom,
    Ratio(i64, i64),
}

fn draw(rng: &mut ChaCha8Rng, bound: u64, with_bottom: bool) -> Draw {
    let b = bound.clamp(1, i64::MAX as u64) as i64;
    match rng.gen_range(0..8) {
        0 => Draw::Zero,
        1 => Draw::One,
        2 => Draw::MinusOne,
        3 if with_bottom => Draw::Bottom,
        _ => Draw::Ratio(rng.gen_range(-b..=b), rng.gen_range(1..=b)),
    }
}

/// `ℚ⊥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QBot {
    pub bound: u64,
}

impl Default for QBot {
    fn default() -> Self {
        QBot { bound: SAMPLE_BOUND }
    }
}

impl MeadowModel for QBot {
    type Elem = ExtRational;

    fn zero(&self) -> ExtRational {
        ExtRational::zero()
    }
    fn one(&self) -> ExtRational {
        ExtRational::one()
    }
    fn bottom(&self) -> ExtRational {
        ExtRational::Bottom
    }
    fn add(&self, a: &ExtRational, b: &ExtRational) -> ExtRational {
        qbot_add(a, b)
    }
    fn mul(&self, a: &ExtRational, b: &ExtRational) -> ExtRational {
        qbot_mul(a, b)
    }
    fn neg(&self, a: &ExtRational) -> ExtRational {
        qbot_neg(a)
    }
    fn inv(&self, a: &ExtRational) -> ExtRational {
        qbot_inv(a)
    }
    fn elements(&self) -> Option<Vec<ExtRational>> {
        None
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> ExtRational {
        match draw(rng, self.bound, true) {
            Draw::Zero => ExtRational::zero(),
            Draw::One => ExtRational::one(),
            Draw::MinusOne => ExtRational::from_integer(-1),
            Draw::Bottom => ExtRational::Bottom,
            Draw::Ratio(n, d) => ExtRational::ratio(n, d),
        }
    }
    fn render(&self, a: &ExtRational) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "Q_bot".into()
    }
}

/// `ℚ₀` read as a `Σcm`-structure by interpreting `⊥` as `0`. It is not a
/// common meadow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Q0Cm {
    pub bound: u64,
}

impl Default for Q0Cm {
    fn default() -> Self {
        Q0Cm { bound: SAMPLE_BOUND }
    }
}

impl MeadowModel for Q0Cm {
    type Elem = Q0Rational;

    fn zero(&self) -> Q0Rational {
        Q0Rational::zero()
    }
    fn one(&self) -> Q0Rational {
        Q0Rational::one()
    }
    fn bottom(&self) -> Q0Rational {
        Q0Rational::zero()
    }
    fn add(&self, a: &Q0Rational, b: &Q0Rational) -> Q0Rational {
        q0_add(a, b)
    }
    fn mul(&self, a: &Q0Rational, b: &Q0Rational) -> Q0Rational {
        q0_mul(a, b)
    }
    fn neg(&self, a: &Q0Rational) -> Q0Rational {
        q0_neg(a)
    }
    fn inv(&self, a: &Q0Rational) -> Q0Rational {
        q0_inv(a)
    }
    fn elements(&self) -> Option<Vec<Q0Rational>> {
        None
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> Q0Rational {
        match draw(rng, self.bound, false) {
            Draw::Zero | Draw::Bottom => Q0Rational::zero(),
            Draw::One => Q0Rational::one(),
            Draw::MinusOne => Q0Rational(BigRational::from_integer(BigInt::from(-1))),
            Draw::Ratio(n, d) => Q0Rational::ratio(n, d),
        }
    }
    fn render(&self, a: &Q0Rational) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "Q0".into()
    }
}

/// Cayley tables of a finite model, indexed by carrier position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTables {
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub inv: Vec<usize>,
}

/// Cancellation meadow of a finite reduced ring: the cc-classes with
/// operations computed on representatives.
#[derive(Clone, Debug)]
pub struct FcmFinite<R: Ring> {
    partition: EquivalencePartition<R>,
    tables: CayleyTables,
    zero: usize,
    one: usize,
}

impl<R: Ring> FcmFinite<R> {
    pub fn new(partition: EquivalencePartition<R>) -> Self {
        let k = partition.class_count();
        let rep = |c: usize| partition.representative(c);
        let class = |f: &Fracpair<R>| partition.class_of(f).expect("operations stay in the ring");
        let binary = |op: fn(&Fracpair<R>, &Fracpair<R>) -> Fracpair<R>| -> Vec<Vec<usize>> {
            (0..k).map(|a| (0..k).map(|b| class(&op(&rep(a), &rep(b)))).collect()).collect()
        };
        let add = binary(|a, b| a.add(b).expect("same ring"));
        let mul = binary(|a, b| a.mul(b).expect("same ring"));
        let neg = (0..k).map(|a| class(&rep(a).neg())).collect();
        let inv = (0..k).map(|a| class(&rep(a).inv())).collect();
        let labels =
            (0..k).map(|c| if c == partition.bottom_class() { "⊥".to_string() } else { rep(c).render() }).collect();
        let r = partition.ring();
        let zero = class(&Fracpair::zero(r));
        let one = class(&Fracpair::one(r));
        FcmFinite { tables: CayleyTables { labels, add, mul, neg, inv }, partition, zero, one }
    }

    pub fn partition(&self) -> &EquivalencePartition<R> {
        &self.partition
    }

    pub fn tables(&self) -> &CayleyTables {
        &self.tables
    }

    pub fn class_of(&self, a: &Fracpair<R>) -> Option<usize> {
        self.partition.class_of(a).ok()
    }
}

impl<R: Ring> MeadowModel for FcmFinite<R> {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn bottom(&self) -> usize {
        self.partition.bottom_class()
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.tables.add[*a][*b]
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.tables.mul[*a][*b]
    }
    fn neg(&self, a: &usize) -> usize {
        self.tables.neg[*a]
    }
    fn inv(&self, a: &usize) -> usize {
        self.tables.inv[*a]
    }
    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.partition.class_count()).collect())
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(0..self.partition.class_count())
    }
    fn render(&self, a: &usize) -> String {
        self.tables.labels[*a].clone()
    }
    fn name(&self) -> String {
        alloc::format!("Fcm({})", self.partition.ring().name())
    }
}

/// Cancellation meadow of ℤ on cc-canonical fracpairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FcmInt {
    pub bound: u64,
}

impl Default for FcmInt {
    fn default() -> Self {
        FcmInt { bound: SAMPLE_BOUND }
    }
}

fn lift(
    op: impl Fn(&Fracpair<Integers>, &Fracpair<Integers>) -> Fracpair<Integers>,
) -> impl Fn(&CcNormalForm, &CcNormalForm) -> CcNormalForm {
    move |a, b| cc_normalize_int(&op(&a.to_fracpair(), &b.to_fracpair()))
}

impl MeadowModel for FcmInt {
    type Elem = CcNormalForm;

    fn zero(&self) -> CcNormalForm {
        cc_normalize_parts(0.into(), 1.into())
    }
    fn one(&self) -> CcNormalForm {
        cc_normalize_parts(1.into(), 1.into())
    }
    fn bottom(&self) -> CcNormalForm {
        cc_normalize_parts(1.into(), 0.into())
    }
    fn add(&self, a: &CcNormalForm, b: &CcNormalForm) -> CcNormalForm {
        lift(|x, y| x.add(y).expect("both over ℤ"))(a, b)
    }
    fn mul(&self, a: &CcNormalForm, b: &CcNormalForm) -> CcNormalForm {
        lift(|x, y| x.mul(y).expect("both over ℤ"))(a, b)
    }
    fn neg(&self, a: &CcNormalForm) -> CcNormalForm {
        cc_normalize_int(&a.to_fracpair().neg())
    }
    fn inv(&self, a: &CcNormalForm) -> CcNormalForm {
        cc_normalize_int(&a.to_fracpair().inv())
    }
    fn elements(&self) -> Option<Vec<CcNormalForm>> {
        None
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> CcNormalForm {
        let (n, d) = match draw(rng, self.bound, true) {
            Draw::Zero => (0, 1),
            Draw::One => (1, 1),
            Draw::MinusOne => (-1, 1),
            Draw::Bottom => (1, 0),
            // denominators of either sign, so that sign normalization is exercised
            Draw::Ratio(n, d) => (n, if rng.gen_bool(0.5) { d } else { -d }),
        };
        cc_normalize_parts(n.into(), d.into())
    }
    fn render(&self, a: &CcNormalForm) -> String {
        if a.den() == &BigInt::from(0) {
            "⊥".into()
        } else {
            a.render()
        }
    }
    fn name(&self) -> String {
        "Fcm(Z)".into()
    }
}
