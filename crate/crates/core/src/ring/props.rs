use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Reducedness, Ring, RingError};
use crate::suite::{run_laws, Carrier, Counterexample, Law, Mode, Outcome, Sampling, Status, SuiteReport};

/// A ring viewed as a law-checking carrier; integer coordinates are sampled
/// with magnitude at most `bound`.
pub struct RingCarrier<'a, R> {
    pub ring: &'a R,
    pub bound: u64,
}

impl<R: Ring> Carrier for RingCarrier<'_, R> {
    type Elem = R::Elem;

    fn elements(&self) -> Option<Vec<R::Elem>> {
        self.ring.elements()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> R::Elem {
        self.ring.sample(rng, self.bound)
    }

    fn render(&self, x: &R::Elem) -> String {
        self.ring.render(x)
    }

    fn label(&self) -> String {
        self.ring.name()
    }

    fn specials(&self) -> Vec<R::Elem> {
        let r = self.ring;
        let mut out = vec![r.zero(), r.one()];
        let m = r.neg(&r.one());
        if !out.contains(&m) {
            out.push(m);
        }
        out
    }
}

pub const DEFAULT_BOUND: u64 = 1_000_000;

fn cr_laws<'a, R: Ring>() -> Vec<Law<RingCarrier<'a, R>>> {
    vec![
        Law {
            id: "cr-add-assoc",
            statement: "(x+y)+z = x+(y+z)",
            vars: &["x", "y", "z"],
            check: |c, v| {
                let r = c.ring;
                Some((r.add(&r.add(&v[0], &v[1]), &v[2]), r.add(&v[0], &r.add(&v[1], &v[2]))))
            },
        },
        Law {
            id: "cr-add-comm",
            statement: "x+y = y+x",
            vars: &["x", "y"],
            check: |c, v| Some((c.ring.add(&v[0], &v[1]), c.ring.add(&v[1], &v[0]))),
        },
        Law {
            id: "cr-add-zero",
            statement: "x+0 = x",
            vars: &["x"],
            check: |c, v| Some((c.ring.add(&v[0], &c.ring.zero()), v[0].clone())),
        },
        Law {
            id: "cr-add-inverse",
            statement: "x+(-x) = 0",
            vars: &["x"],
            check: |c, v| Some((c.ring.add(&v[0], &c.ring.neg(&v[0])), c.ring.zero())),
        },
        Law {
            id: "cr-mul-assoc",
            statement: "(x*y)*z = x*(y*z)",
            vars: &["x", "y", "z"],
            check: |c, v| {
                let r = c.ring;
                Some((r.mul(&r.mul(&v[0], &v[1]), &v[2]), r.mul(&v[0], &r.mul(&v[1], &v[2]))))
            },
        },
        Law {
            id: "cr-mul-comm",
            statement: "x*y = y*x",
            vars: &["x", "y"],
            check: |c, v| Some((c.ring.mul(&v[0], &v[1]), c.ring.mul(&v[1], &v[0]))),
        },
        Law {
            id: "cr-mul-one",
            statement: "1*x = x",
            vars: &["x"],
            check: |c, v| Some((c.ring.mul(&c.ring.one(), &v[0]), v[0].clone())),
        },
        Law {
            id: "cr-distrib",
            statement: "x*(y+z) = (x*y)+(x*z)",
            vars: &["x", "y", "z"],
            check: |c, v| {
                let r = c.ring;
                Some((r.mul(&v[0], &r.add(&v[1], &v[2])), r.add(&r.mul(&v[0], &v[1]), &r.mul(&v[0], &v[2]))))
            },
        },
        Law {
            id: "cr-neg-zero",
            statement: "-0 = 0",
            vars: &[],
            check: |c, _| Some((c.ring.neg(&c.ring.zero()), c.ring.zero())),
        },
        Law {
            id: "cr-zero-mul",
            statement: "0*x = 0",
            vars: &["x"],
            check: |c, v| Some((c.ring.mul(&c.ring.zero(), &v[0]), c.ring.zero())),
        },
        Law {
            id: "cr-neg-neg",
            statement: "-(-x) = x",
            vars: &["x"],
            check: |c, v| Some((c.ring.neg(&c.ring.neg(&v[0])), v[0].clone())),
        },
        Law {
            id: "cr-neg-mul",
            statement: "-(x*y) = x*(-y)",
            vars: &["x", "y"],
            check: |c, v| {
                let r = c.ring;
                Some((r.neg(&r.mul(&v[0], &v[1])), r.mul(&v[0], &r.neg(&v[1]))))
            },
        },
    ]
}

/// The commutative ring axioms plus their familiar consequences
/// (`-0 = 0`, `0·x = 0`, `-(-x) = x`, `-(x·y) = x·(-y)`).
pub fn check_cr_axioms<R: Ring>(ring: &R, sampling: &Sampling) -> SuiteReport {
    let carrier = RingCarrier { ring, bound: DEFAULT_BOUND };
    run_laws(&carrier, "cr", &cr_laws(), sampling)
}

fn reduced_law<'a, R: Ring>() -> Law<RingCarrier<'a, R>> {
    Law {
        id: "reduced",
        statement: "x*x = 0 => x = 0",
        vars: &["x"],
        check: |c, v| c.ring.is_zero(&c.ring.mul(&v[0], &v[0])).then(|| (v[0].clone(), c.ring.zero())),
    }
}

/// Checks `x·x = 0 ⇒ x = 0`: exhaustively for finite rings, by sampling
/// plus the recorded reducedness status otherwise.
pub fn check_reduced<R: Ring>(ring: &R, sampling: &Sampling) -> SuiteReport {
    let carrier = RingCarrier { ring, bound: DEFAULT_BOUND };
    let law = reduced_law();
    let mut report = run_laws(&carrier, "reduced", core::slice::from_ref(&law), sampling);
    let outcome = &mut report.outcomes[0];
    if !ring.is_finite() {
        match ring.reducedness() {
            Reducedness::Verified => {}
            Reducedness::Asserted if outcome.status == Status::Pass => outcome.status = Status::Undetermined,
            Reducedness::Asserted => {}
            Reducedness::KnownFalse { witness } => {
                outcome.status = Status::Fail;
                outcome.mode = Mode::Structural;
                outcome.counterexample = Some(Counterexample {
                    assignment: vec![("x".into(), ring.render(&witness))],
                    detail: String::from("recorded nilpotent witness"),
                });
            }
        }
    }
    report
}

fn require_finite<R: Ring>(ring: &R) -> Result<Vec<R::Elem>, RingError> {
    ring.elements().ok_or_else(|| RingError::Infinite(ring.name()))
}

/// `n(R)` by exhaustive scan.
pub fn non_zerodivisors<R: Ring>(ring: &R) -> Result<Vec<R::Elem>, RingError> {
    let els = require_finite(ring)?;
    Ok(els.iter().filter(|x| els.iter().all(|y| !ring.is_zero(&ring.mul(x, y)) || ring.is_zero(y))).cloned().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqnnReport<E> {
    pub pairs: usize,
    pub counterexamples: Vec<(E, E)>,
}

impl<E> EqnnReport<E> {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// `p·q ∈ n(R) ⟺ p ∈ n(R) ∧ q ∈ n(R)` over all pairs.
pub fn check_eqnn<R: Ring>(ring: &R) -> Result<EqnnReport<R::Elem>, RingError> {
    let els = require_finite(ring)?;
    let nzd: BTreeSet<R::Elem> = non_zerodivisors(ring)?.into_iter().collect();
    let mut counterexamples = Vec::new();
    for p in &els {
        for q in &els {
            let lhs = nzd.contains(&ring.mul(p, q));
            let rhs = nzd.contains(p) && nzd.contains(q);
            if lhs != rhs {
                counterexamples.push((p.clone(), q.clone()));
            }
        }
    }
    Ok(EqnnReport { pairs: els.len() * els.len(), counterexamples })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BmcrVerdict<E> {
    /// Exhaustively verified on a finite carrier.
    Proved,
    /// `x ≠ 0` and `x·(y² + z² + 1) = 0`.
    Refuted { x: E, y: E, z: E },
    /// No counterexample among `samples` random triples.
    Undetermined { samples: usize },
}

fn bmcr_fails<R: Ring>(ring: &R, x: &R::Elem, y: &R::Elem, z: &R::Elem) -> bool {
    let s = ring.add(&ring.add(&ring.mul(y, y), &ring.mul(z, z)), &ring.one());
    !ring.is_zero(x) && ring.is_zero(&ring.mul(x, &s))
}

/// Decides `x·(y² + z² + 1) = 0 ⇒ x = 0`. Finite rings are searched
/// exhaustively in carrier order; infinite rings are sampled and can only be
/// refuted.
///
/// ℤ[X]/(X²) satisfies the property by a hand argument on the coefficients
/// of the product; sampling reports it as undetermined.
pub fn satisfies_bmcr<R: Ring>(ring: &R, sampling: &Sampling) -> BmcrVerdict<R::Elem> {
    if let Some(els) = ring.elements() {
        for x in &els {
            for y in &els {
                for z in &els {
                    if bmcr_fails(ring, x, y, z) {
                        return BmcrVerdict::Refuted { x: x.clone(), y: y.clone(), z: z.clone() };
                    }
                }
            }
        }
        return BmcrVerdict::Proved;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    for _ in 0..sampling.samples {
        let x = ring.sample(&mut rng, DEFAULT_BOUND);
        let y = ring.sample(&mut rng, DEFAULT_BOUND);
        let z = ring.sample(&mut rng, DEFAULT_BOUND);
        if bmcr_fails(ring, &x, &y, &z) {
            return BmcrVerdict::Refuted { x, y, z };
        }
    }
    BmcrVerdict::Undetermined { samples: sampling.samples }
}

/// Report form of [`satisfies_bmcr`].
pub fn bmcr_report<R: Ring>(ring: &R, sampling: &Sampling) -> SuiteReport {
    let mut report = SuiteReport::new("bmcr", ring.name());
    let finite = ring.is_finite();
    let verdict = satisfies_bmcr(ring, sampling);
    let (status, tuples, counterexample) = match verdict {
        BmcrVerdict::Proved => (Status::Pass, ring.cardinality().unwrap_or(0).pow(3) as u64, None),
        BmcrVerdict::Refuted { x, y, z } => (
            Status::Fail,
            0,
            Some(Counterexample {
                assignment: vec![
                    ("x".into(), ring.render(&x)),
                    ("y".into(), ring.render(&y)),
                    ("z".into(), ring.render(&z)),
                ],
                detail: String::from("x*(y*y+z*z+1) = 0 with x != 0"),
            }),
        ),
        BmcrVerdict::Undetermined { samples } => (Status::Undetermined, samples as u64, None),
    };
    report.push(Outcome {
        id: "bmcr".into(),
        statement: "x*(y*y+z*z+1) = 0 => x = 0".into(),
        status,
        mode: if finite { Mode::Exhaustive } else { Mode::Random { seed: sampling.seed } },
        tuples,
        counterexample,
    });
    report
}

/// A saturated multiplicative subset of a finite ring, elements kept in the
/// ring's carrier order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedSubset<E> {
    elements: Vec<E>,
}

impl<E: Clone + Ord> SaturatedSubset<E> {
    /// Validates `1 ∈ S`, multiplicative closure and saturation.
    pub fn new<R: Ring<Elem = E>>(ring: &R, members: &[E]) -> Result<Self, RingError> {
        let els = require_finite(ring)?;
        let set: BTreeSet<E> = members.iter().cloned().collect();
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&ring.mul(a, b))));
        let saturated = els.iter().all(|x| els.iter().all(|y| !set.contains(&ring.mul(x, y)) || set.contains(x)));
        let ordered: Vec<E> = els.into_iter().filter(|e| set.contains(e)).collect();
        if !set.contains(&ring.one()) || !closed || !saturated || ordered.len() != set.len() {
            let shown: Vec<String> = members.iter().map(|m| ring.render(m)).collect();
            return Err(RingError::NotSaturated(format!("{{{}}}", shown.join(","))));
        }
        Ok(SaturatedSubset { elements: ordered })
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.contains(x)
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn render<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        let shown: Vec<String> = self.elements.iter().map(|m| ring.render(m)).collect();
        format!("{{{}}}", shown.join(","))
    }
}

impl<E: fmt::Debug> SaturatedSubset<E> {
    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }
}

/// Smallest saturated multiplicative subset containing `gens`, as a
/// membership mask over carrier indices: everything dividing an element of
/// the monoid generated by `gens`.
fn saturated_closure(mul: &[Vec<usize>], one: usize, gens: &[usize]) -> Vec<bool> {
    let n = mul.len();
    let mut monoid = vec![false; n];
    let mut queue = VecDeque::new();
    monoid[one] = true;
    queue.push_back(one);
    while let Some(m) = queue.pop_front() {
        for &g in gens {
            let p = mul[m][g];
            if !monoid[p] {
                monoid[p] = true;
                queue.push_back(p);
            }
        }
    }
    (0..n).map(|x| (0..n).any(|y| monoid[mul[x][y]])).collect()
}

/// All saturated multiplicative subsets not containing 0, ordered by size
/// and then by carrier order.
pub fn saturated_mult_subsets<R: Ring>(ring: &R) -> Result<Vec<SaturatedSubset<R::Elem>>, RingError> {
    let els = require_finite(ring)?;
    let n = els.len();
    let index: BTreeMap<&R::Elem, usize> = els.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mul: Vec<Vec<usize>> = els.iter().map(|a| els.iter().map(|b| index[&ring.mul(a, b)]).collect()).collect();
    let one = index[&ring.one()];
    let zero = index[&ring.zero()];

    let mask_to_vec = |m: &[bool]| -> Vec<usize> { (0..n).filter(|&i| m[i]).collect() };
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut pending: Vec<Vec<usize>> = Vec::new();
    let base = saturated_closure(&mul, one, &[]);
    if !base[zero] {
        let v = mask_to_vec(&base);
        found.insert(v.clone());
        pending.push(v);
    }
    while let Some(set) = pending.pop() {
        for x in 0..n {
            if set.contains(&x) {
                continue;
            }
            let mut gens = set.clone();
            gens.push(x);
            let mask = saturated_closure(&mul, one, &gens);
            if mask[zero] {
                continue;
            }
            let v = mask_to_vec(&mask);
            if found.insert(v.clone()) {
                pending.push(v);
            }
        }
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets
        .into_iter()
        .map(|s| SaturatedSubset { elements: s.into_iter().map(|i| els[i].clone()).collect() })
        .collect())
}

/// `(p,q) ∼ (r,s)` in `S⁻¹R`: some `u ∈ S` has `u·(p·s − q·r) = 0`.
pub fn localization_equiv<R: Ring>(
    ring: &R,
    s: &SaturatedSubset<R::Elem>,
    a: &(R::Elem, R::Elem),
    b: &(R::Elem, R::Elem),
) -> Result<bool, RingError> {
    for den in [&a.1, &b.1] {
        if !s.contains(den) {
            return Err(RingError::DenominatorOutside(ring.render(den)));
        }
    }
    let diff = ring.sub(&ring.mul(&a.0, &b.1), &ring.mul(&a.1, &b.0));
    Ok(s.elements.iter().any(|u| ring.is_zero(&ring.mul(u, &diff))))
}
