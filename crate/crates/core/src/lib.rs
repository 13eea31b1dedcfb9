//! Fracpairs, cancellation equivalences and common meadows over commutative
//! rings, with a ground rewriting engine for integer terms.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod equivalence;
pub mod fracpair;
pub mod meadow;
pub mod rewrite;
pub mod ring;
pub mod suite;

pub use fracpair::{Fracpair, FracpairError};
pub use rewrite::{Dialect, Term};
pub use ring::{DualInt, DualIntRing, Integers, ModRing, ProductRing, Reducedness, Ring, RingError};
pub use suite::{Counterexample, Law, Mode, Outcome, Sampling, Status, SuiteReport};
