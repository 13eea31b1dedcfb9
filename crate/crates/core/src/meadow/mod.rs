//! Common meadows: `ℚ⊥`, `ℚ₀`, the cancellation meadows of finite rings
//! and of ℤ, and the axiom and identity suites checked on them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;

use crate::suite::Carrier;

mod models;
mod rational;
mod suites;

pub use models::{CayleyTables, FcmFinite, FcmInt, Q0Cm, QBot, SAMPLE_BOUND};
pub use rational::{
    hom_fcm_to_qbot, q0_add, q0_inv, q0_mul, q0_neg, q_canonical_form_check, qbot_add, qbot_inv, qbot_mul, qbot_neg,
    ratio_is_canonical, ExtRational, Q0Rational, RationalDomain,
};
pub use suites::{
    check_congruence, hom_premises_report, involutive_suite, md_axiom_suite, md_identity_suite, zero_part_ring_suite,
    MD_AXIOM_IDS,
};

/// A structure over `{0, 1, ⊥, −, ⁻¹, +, ·}` with total operations.
pub trait MeadowModel {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn bottom(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// The carrier when finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    /// `0`, `1`, `−1` and `⊥`, without repeats.
    fn specials(&self) -> Vec<Self::Elem> {
        let mut out: Vec<Self::Elem> = Vec::new();
        for x in [self.zero(), self.one(), self.neg(&self.one()), self.bottom()] {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
}

/// Adapts a model to the law checker.
pub struct ModelCarrier<'a, M> {
    pub model: &'a M,
}

impl<M: MeadowModel> Carrier for ModelCarrier<'_, M> {
    type Elem = M::Elem;

    fn elements(&self) -> Option<Vec<M::Elem>> {
        self.model.elements()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> M::Elem {
        self.model.sample(rng)
    }

    fn render(&self, x: &M::Elem) -> String {
        self.model.render(x)
    }

    fn label(&self) -> String {
        self.model.name()
    }

    fn specials(&self) -> Vec<M::Elem> {
        self.model.specials()
    }
}
