use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rules::{root_matches, rule, RewriteRule};
use super::term::{eval_int, is_numeral, render_position, Dialect, Term};

/// Default step budget for one normalization.
pub const STEP_BUDGET: u64 = 1_000_000;

/// Which redex to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    LeftmostInnermost,
    RightmostInnermost,
    LeftmostOutermost,
    /// Uniform over every (position, rule) pair that applies.
    Random(u64),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::LeftmostInnermost => f.write_str("leftmost-innermost"),
            Strategy::RightmostInnermost => f.write_str("rightmost-innermost"),
            Strategy::LeftmostOutermost => f.write_str("leftmost-outermost"),
            Strategy::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl core::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "leftmost-innermost" | "li" => Ok(Strategy::LeftmostInnermost),
            "rightmost-innermost" | "ri" => Ok(Strategy::RightmostInnermost),
            "leftmost-outermost" | "lo" => Ok(Strategy::LeftmostOutermost),
            "random" => Ok(Strategy::Random(0)),
            _ => match s.strip_prefix("random:").map(str::parse) {
                Some(Ok(seed)) => Ok(Strategy::Random(seed)),
                _ => Err(alloc::format!(
                    "unknown strategy {s:?}; expected leftmost-innermost, rightmost-innermost, leftmost-outermost or random:<seed>"
                )),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("term uses \"bot\" or \"^-1\", which the integer rewrite system does not cover")]
    Dialect,
    #[error("no normal form within {0} steps")]
    BudgetExceeded(u64),
    #[error("normal form {0} is not a numeral")]
    NotNumeral(String),
    #[error("step {index} ({rule} at {position}) changes the integer value")]
    Unsound { index: usize, rule: &'static str, position: String },
}

/// One contraction: the rule, where it applied, and the whole term after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: &'static str,
    pub position: Vec<u8>,
    pub term: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub initial: Term,
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn final_term(&self) -> &Term {
        self.steps.last().map_or(&self.initial, |s| &s.term)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every step against its rule and position, and checks that the
    /// final term is irreducible.
    pub fn verify(&self) -> bool {
        let mut cur = &self.initial;
        for s in &self.steps {
            let Some(r) = rule(s.rule) else { return false };
            let contracted =
                cur.at(&s.position).and_then(|redex| r.apply(redex)).and_then(|c| cur.replace_at(&s.position, c));
            if contracted.as_ref() != Some(&s.term) {
                return false;
            }
            cur = &s.term;
        }
        first_redex(cur, Order::LeftFirst, true).is_none()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Order {
    LeftFirst,
    RightFirst,
}

fn first_redex(t: &Term, order: Order, innermost: bool) -> Option<(Vec<u8>, &'static RewriteRule)> {
    fn go(t: &Term, order: Order, innermost: bool, path: &mut Vec<u8>) -> Option<&'static RewriteRule> {
        if !innermost {
            if let Some(r) = root_matches(t).next() {
                return Some(r);
            }
        }
        let kids = t.children();
        let idx: Vec<u8> = match order {
            Order::LeftFirst => (1..=kids.len() as u8).collect(),
            Order::RightFirst => (1..=kids.len() as u8).rev().collect(),
        };
        for i in idx {
            path.push(i);
            if let Some(r) = go(kids[usize::from(i) - 1], order, innermost, path) {
                return Some(r);
            }
            path.pop();
        }
        if innermost {
            return root_matches(t).next();
        }
        None
    }
    let mut path = Vec::new();
    go(t, order, innermost, &mut path).map(|r| (path, r))
}

fn all_redexes(t: &Term) -> Vec<(Vec<u8>, &'static RewriteRule)> {
    let mut out = Vec::new();
    let mut stack: Vec<(&Term, Vec<u8>)> = alloc::vec![(t, Vec::new())];
    while let Some((u, path)) = stack.pop() {
        for r in root_matches(u) {
            out.push((path.clone(), r));
        }
        for (i, c) in u.children().into_iter().enumerate() {
            let mut p = path.clone();
            p.push(i as u8 + 1);
            stack.push((c, p));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.id.len().cmp(&b.1.id.len())).then(a.1.id.cmp(b.1.id)));
    out
}

fn choose(t: &Term, strategy: Strategy, rng: &mut ChaCha8Rng) -> Option<(Vec<u8>, &'static RewriteRule)> {
    match strategy {
        Strategy::LeftmostInnermost => first_redex(t, Order::LeftFirst, true),
        Strategy::RightmostInnermost => first_redex(t, Order::RightFirst, true),
        Strategy::LeftmostOutermost => first_redex(t, Order::LeftFirst, false),
        Strategy::Random(_) => {
            let mut all = all_redexes(t);
            if all.is_empty() {
                return None;
            }
            let k = rng.gen_range(0..all.len());
            Some(all.swap_remove(k))
        }
    }
}

fn contract(t: &Term, path: &[u8], r: &RewriteRule) -> (Term, Term, Term) {
    let redex = t.at(path).expect("redex position exists").clone();
    let contractum = r.apply(&redex).expect("rule matches its redex");
    let next = t.replace_at(path, contractum.clone()).expect("redex position exists");
    (redex, contractum, next)
}

/// Contracts one redex. A random strategy draws from its own seed.
pub fn rewrite_step(t: &Term, strategy: Strategy) -> Option<(Term, &'static str, Vec<u8>)> {
    let seed = if let Strategy::Random(s) = strategy { s } else { 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (path, r) = choose(t, strategy, &mut rng)?;
    let (_, _, next) = contract(t, &path, r);
    Some((next, r.id, path))
}

pub fn normalize(t: &Term, strategy: Strategy) -> Result<RewriteTrace, RewriteError> {
    normalize_with_budget(t, strategy, STEP_BUDGET)
}

/// Rewrites to a normal form, checking each step against the integer value
/// of its redex and requiring the result to be a numeral.
pub fn normalize_with_budget(t: &Term, strategy: Strategy, budget: u64) -> Result<RewriteTrace, RewriteError> {
    if !t.in_dialect(Dialect::Ring) {
        return Err(RewriteError::Dialect);
    }
    let seed = if let Strategy::Random(s) = strategy { s } else { 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps: Vec<RewriteStep> = Vec::new();
    let mut cur = t.clone();
    while let Some((path, r)) = choose(&cur, strategy, &mut rng) {
        if steps.len() as u64 >= budget {
            return Err(RewriteError::BudgetExceeded(budget));
        }
        let (redex, contractum, next) = contract(&cur, &path, r);
        if eval_int(&redex) != eval_int(&contractum) {
            return Err(RewriteError::Unsound { index: steps.len(), rule: r.id, position: render_position(&path) });
        }
        steps.push(RewriteStep { rule: r.id, position: path, term: next.clone() });
        cur = next;
    }
    if !is_numeral(&cur) {
        return Err(RewriteError::NotNumeral(cur.to_string()));
    }
    Ok(RewriteTrace { initial: t.clone(), steps })
}

/// Distinct normal forms reached by several strategies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceVerdict {
    pub strategies: Vec<Strategy>,
    /// One entry per strategy.
    pub results: Vec<Term>,
    /// Distinct entries of `results`, in first-seen order.
    pub normal_forms: Vec<Term>,
}

impl ConfluenceVerdict {
    pub fn is_unique(&self) -> bool {
        self.normal_forms.len() == 1
    }
}

/// The three fixed strategies followed by `k − 3` random ones seeded
/// `seed, seed + 1, …`.
pub fn probe_strategies(k: usize, seed: u64) -> Vec<Strategy> {
    let mut s = alloc::vec![Strategy::LeftmostInnermost, Strategy::RightmostInnermost, Strategy::LeftmostOutermost];
    s.truncate(k);
    for i in 0..k.saturating_sub(3) {
        s.push(Strategy::Random(seed.wrapping_add(i as u64)));
    }
    s
}

pub fn confluence_probe(t: &Term, k: usize, seed: u64) -> Result<ConfluenceVerdict, RewriteError> {
    confluence_probe_with_budget(t, k, seed, STEP_BUDGET)
}

pub fn confluence_probe_with_budget(
    t: &Term,
    k: usize,
    seed: u64,
    budget: u64,
) -> Result<ConfluenceVerdict, RewriteError> {
    let strategies = probe_strategies(k, seed);
    let mut results = Vec::with_capacity(strategies.len());
    let mut normal_forms: Vec<Term> = Vec::new();
    for &s in &strategies {
        let nf = normalize_with_budget(t, s, budget)?.final_term().clone();
        if !normal_forms.contains(&nf) {
            normal_forms.push(nf.clone());
        }
        results.push(nf);
    }
    Ok(ConfluenceVerdict { strategies, results, normal_forms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::parse;
    use num_bigint::BigInt;

    fn t(s: &str) -> Term {
        parse(s, Dialect::Ring).unwrap()
    }

    fn numeral(k: i64) -> Term {
        Term::numeral(&BigInt::from(k))
    }

    #[test]
    fn single_steps() {
        let li = Strategy::LeftmostInnermost;
        assert_eq!(rewrite_step(&t("1+(1+1)"), li), Some((t("(1+1)+1"), "r3", alloc::vec![])));
        assert_eq!(rewrite_step(&t("(-(1+1))+1"), li), Some((t("-1"), "r10", alloc::vec![])));
        let (next, id, pos) = rewrite_step(&t("(1+1)*(1+(-1))"), li).unwrap();
        assert_eq!((id, pos), ("r5", alloc::vec![2]));
        assert_eq!(next, t("(1+1)*0"));
        assert_eq!(rewrite_step(&numeral(7), li), None);
    }

    #[test]
    fn strategies_pick_different_redexes() {
        let term = t("(-0)*(-0)");
        assert_eq!(rewrite_step(&term, Strategy::LeftmostInnermost).unwrap().2, alloc::vec![1]);
        assert_eq!(rewrite_step(&term, Strategy::RightmostInnermost).unwrap().2, alloc::vec![2]);
        assert_eq!(rewrite_step(&term, Strategy::LeftmostOutermost).unwrap(), (t("(-(-0))*0"), "r14", alloc::vec![]));
    }

    #[test]
    fn normalization_examples() {
        let li = Strategy::LeftmostInnermost;
        assert_eq!(normalize(&t("(1+1)*(1+1)"), li).unwrap().final_term(), &numeral(4));
        assert_eq!(normalize(&t("(1+1)*(-(1+1))"), li).unwrap().final_term(), &numeral(-4));
        let zero = normalize(&Term::Zero, li).unwrap();
        assert!(zero.is_empty());
        assert_eq!(zero.final_term(), &Term::Zero);
        let tr = normalize(&t("1+(1+1)"), li).unwrap();
        assert_eq!(tr.len(), 1);
        assert_eq!(tr.steps[0].rule, "r3");
        assert!(tr.verify());
    }

    #[test]
    fn traces_replay() {
        for s in probe_strategies(5, 11) {
            let tr = normalize(&t("((1+1)*(1+1))+(-(1+1+1))*(1-1+1)"), s).unwrap();
            assert!(tr.verify(), "{s}");
            assert_eq!(tr.final_term(), &numeral(1));
        }
        let mut tr = normalize(&t("(1+1)*(1+1)"), Strategy::LeftmostInnermost).unwrap();
        tr.steps[0].rule = "r4";
        assert!(!tr.verify());
    }

    #[test]
    fn budget_and_dialect_errors() {
        let e = normalize_with_budget(&t("(1+1)*(1+1)"), Strategy::LeftmostInnermost, 2);
        assert_eq!(e, Err(RewriteError::BudgetExceeded(2)));
        let bot = parse("1+bot", Dialect::Meadow).unwrap();
        assert_eq!(normalize(&bot, Strategy::LeftmostInnermost), Err(RewriteError::Dialect));
    }

    #[test]
    fn probes() {
        let v = confluence_probe(&t("(1+1)+(-(1+1))"), 5, 0).unwrap();
        assert_eq!(v.strategies.len(), 5);
        assert_eq!(v.normal_forms, [Term::Zero]);
        let v = confluence_probe(&t("((1+1)*(1+1))+(-1)"), 5, 0).unwrap();
        assert_eq!(v.normal_forms, [numeral(3)]);
        for k in [-5, 0, 1, 6] {
            let v = confluence_probe(&numeral(k), 5, 3).unwrap();
            assert_eq!(v.normal_forms, [numeral(k)]);
        }
    }

    #[test]
    fn strategy_names() {
        for s in [
            Strategy::LeftmostInnermost,
            Strategy::RightmostInnermost,
            Strategy::LeftmostOutermost,
            Strategy::Random(9),
        ] {
            assert_eq!(s.to_string().parse::<Strategy>(), Ok(s));
        }
        assert_eq!("random".parse::<Strategy>(), Ok(Strategy::Random(0)));
        assert!("outermost".parse::<Strategy>().is_err());
    }
}
