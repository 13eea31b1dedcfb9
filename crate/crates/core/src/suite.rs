//! Model checking of equational laws over a carrier.
//!
//! A law is a function from a variable assignment to the two sides of an
//! equation. Finite carriers are checked on every assignment when the tuple
//! count stays under [`Sampling::exhaustive_limit`]; otherwise a seeded
//! random sample is drawn. The same seed always yields the same report.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Something laws can be evaluated over.
pub trait Carrier {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// The finite carrier, or `None` when it must be sampled.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn render(&self, x: &Self::Elem) -> String;
    fn label(&self) -> String;

    /// Values every tuple of which is checked before random sampling starts.
    fn specials(&self) -> Vec<Self::Elem> {
        Vec::new()
    }
}

/// Two sides of an instance, or `None` when a conditional law's premise is
/// false for the assignment.
pub type Instance<E> = Option<(E, E)>;

pub struct Law<C: Carrier> {
    /// Stable identifier used in machine-readable reports.
    pub id: &'static str,
    pub statement: &'static str,
    pub vars: &'static [&'static str],
    pub check: fn(&C, &[C::Elem]) -> Instance<C::Elem>,
}

impl<C: Carrier> Clone for Law<C> {
    fn clone(&self) -> Self {
        Law { id: self.id, statement: self.statement, vars: self.vars, check: self.check }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
    pub exhaustive_limit: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { samples: 10_000, seed: 0, exhaustive_limit: 1 << 22 }
    }
}

impl Sampling {
    pub fn with_seed(seed: u64) -> Self {
        Sampling { seed, ..Sampling::default() }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random {
        seed: u64,
    },
    /// Decided without enumerating assignments.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Vec<(String, String)>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (var, val)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{var}={val}")?;
        }
        if !self.detail.is_empty() {
            if !self.assignment.is_empty() {
                f.write_str(": ")?;
            }
            f.write_str(&self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub mode: Mode,
    pub tuples: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub target: String,
    pub seed: Option<u64>,
    pub outcomes: Vec<Outcome>,
}

impl SuiteReport {
    pub fn new(suite: &str, target: String) -> Self {
        SuiteReport { suite: suite.into(), target, seed: None, outcomes: Vec::new() }
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }

    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.status == Status::Pass).count()
    }

    pub fn outcome(&self, id: &str) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }

    pub fn push(&mut self, outcome: Outcome) {
        if let Mode::Random { seed } = outcome.mode {
            self.seed.get_or_insert(seed);
        }
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        for o in other.outcomes {
            self.push(o);
        }
    }
}

pub fn run_laws<C: Carrier>(carrier: &C, suite: &str, laws: &[Law<C>], sampling: &Sampling) -> SuiteReport {
    let mut report = SuiteReport::new(suite, carrier.label());
    let elements = carrier.elements();
    for (index, law) in laws.iter().enumerate() {
        report.push(run_law(carrier, law, elements.as_deref(), sampling, index as u64));
    }
    report
}

fn tuple_count(n: usize, arity: usize) -> Option<u64> {
    (n as u64).checked_pow(arity as u32)
}

pub fn run_law<C: Carrier>(
    carrier: &C,
    law: &Law<C>,
    elements: Option<&[C::Elem]>,
    sampling: &Sampling,
    stream: u64,
) -> Outcome {
    let arity = law.vars.len();
    let mut outcome = Outcome {
        id: law.id.into(),
        statement: law.statement.into(),
        status: Status::Pass,
        mode: Mode::Exhaustive,
        tuples: 0,
        counterexample: None,
    };
    let mut args: Vec<C::Elem> = Vec::with_capacity(arity);
    let record = |args: &[C::Elem], outcome: &mut Outcome| -> bool {
        outcome.tuples += 1;
        if let Some((lhs, rhs)) = (law.check)(carrier, args) {
            if lhs != rhs {
                outcome.status = Status::Fail;
                outcome.counterexample = Some(Counterexample {
                    assignment: law.vars.iter().zip(args).map(|(v, a)| ((*v).into(), carrier.render(a))).collect(),
                    detail: format!("lhs = {}, rhs = {}", carrier.render(&lhs), carrier.render(&rhs)),
                });
                return false;
            }
        }
        true
    };

    let exhaustive =
        elements.filter(|els| tuple_count(els.len(), arity).is_some_and(|t| t <= sampling.exhaustive_limit));
    if let Some(els) = exhaustive {
        if arity == 0 {
            record(&[], &mut outcome);
            return outcome;
        }
        let n = els.len();
        let mut idx = alloc::vec![0usize; arity];
        loop {
            args.clear();
            args.extend(idx.iter().map(|&i| els[i].clone()));
            if !record(&args, &mut outcome) {
                return outcome;
            }
            let mut k = arity;
            loop {
                if k == 0 {
                    return outcome;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < n {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    let seed = sampling.seed;
    outcome.mode = Mode::Random { seed };
    let specials = carrier.specials();
    if !specials.is_empty() && arity > 0 {
        let mut idx = alloc::vec![0usize; arity];
        'grid: loop {
            args.clear();
            args.extend(idx.iter().map(|&i| specials[i].clone()));
            if !record(&args, &mut outcome) {
                return outcome;
            }
            let mut k = arity;
            loop {
                if k == 0 {
                    break 'grid;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < specials.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let rounds = if arity == 0 { 1 } else { sampling.samples };
    for _ in 0..rounds {
        args.clear();
        for _ in 0..arity {
            args.push(carrier.sample(&mut rng));
        }
        if !record(&args, &mut outcome) {
            break;
        }
    }
    outcome
}
