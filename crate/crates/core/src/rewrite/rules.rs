use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::term::Term;

/// A linear pattern over `{0, 1, −, +, ·}` with numbered variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Var(u8),
    Zero,
    One,
    Neg(&'static Pattern),
    Add(&'static Pattern, &'static Pattern),
    Mul(&'static Pattern, &'static Pattern),
}

/// One oriented equation `lhs → rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub id: &'static str,
    pub lhs: Pattern,
    pub rhs: Pattern,
}

use Pattern::*;

const X: Pattern = Var(0);
const Y: Pattern = Var(1);
const Z: Pattern = Var(2);
const MINUS_ONE: Pattern = Neg(&One);

/// The integer rewrite system, in rule order.
pub static RULES: [RewriteRule; 15] = [
    RewriteRule { id: "r1", lhs: Neg(&Zero), rhs: Zero },
    RewriteRule { id: "r2", lhs: Neg(&Neg(&X)), rhs: X },
    RewriteRule { id: "r3", lhs: Add(&X, &Add(&Y, &Z)), rhs: Add(&Add(&X, &Y), &Z) },
    RewriteRule { id: "r4", lhs: Add(&X, &Zero), rhs: X },
    RewriteRule { id: "r5", lhs: Add(&One, &MINUS_ONE), rhs: Zero },
    RewriteRule { id: "r6", lhs: Add(&Add(&X, &One), &MINUS_ONE), rhs: X },
    RewriteRule { id: "r7", lhs: Add(&X, &Neg(&Add(&Y, &One))), rhs: Add(&Add(&X, &Neg(&Y)), &MINUS_ONE) },
    RewriteRule { id: "r8", lhs: Add(&Zero, &X), rhs: X },
    RewriteRule { id: "r9", lhs: Add(&MINUS_ONE, &One), rhs: Zero },
    RewriteRule { id: "r10", lhs: Add(&Neg(&Add(&X, &One)), &One), rhs: Neg(&X) },
    RewriteRule { id: "r11", lhs: Add(&Neg(&X), &Neg(&Y)), rhs: Neg(&Add(&X, &Y)) },
    RewriteRule { id: "r12", lhs: Mul(&X, &Zero), rhs: Zero },
    RewriteRule { id: "r13", lhs: Mul(&X, &One), rhs: X },
    RewriteRule { id: "r14", lhs: Mul(&X, &Neg(&Y)), rhs: Mul(&Neg(&X), &Y) },
    RewriteRule { id: "r15", lhs: Mul(&X, &Add(&Y, &Z)), rhs: Add(&Mul(&X, &Y), &Mul(&X, &Z)) },
];

pub fn rule(id: &str) -> Option<&'static RewriteRule> {
    RULES.iter().find(|r| r.id == id)
}

type Binding = [Option<Term>; 3];

fn matches(p: &Pattern, t: &Term, env: &mut Binding) -> bool {
    match (p, t) {
        (Var(i), _) => match &env[*i as usize] {
            Some(bound) => bound == t,
            None => {
                env[*i as usize] = Some(t.clone());
                true
            }
        },
        (Zero, Term::Zero) | (One, Term::One) => true,
        (Neg(p), Term::Neg(a)) => matches(p, a, env),
        (Add(p, q), Term::Add(a, b)) | (Mul(p, q), Term::Mul(a, b)) => matches(p, a, env) && matches(q, b, env),
        _ => false,
    }
}

fn instantiate(p: &Pattern, env: &Binding) -> Term {
    match p {
        Var(i) => env[*i as usize].clone().expect("right-hand variables occur on the left"),
        Zero => Term::Zero,
        One => Term::One,
        Neg(a) => Term::neg(instantiate(a, env)),
        Add(a, b) => Term::add(instantiate(a, env), instantiate(b, env)),
        Mul(a, b) => Term::mul(instantiate(a, env), instantiate(b, env)),
    }
}

impl RewriteRule {
    /// The contractum when `t` is an instance of the left-hand side.
    pub fn apply(&self, t: &Term) -> Option<Term> {
        let mut env: Binding = Default::default();
        matches(&self.lhs, t, &mut env).then(|| instantiate(&self.rhs, &env))
    }

    fn vars(p: &Pattern, out: &mut Vec<u8>) {
        match p {
            Var(i) => out.push(*i),
            Zero | One => {}
            Neg(a) => Self::vars(a, out),
            Add(a, b) | Mul(a, b) => {
                Self::vars(a, out);
                Self::vars(b, out);
            }
        }
    }

    pub fn lhs_vars(&self) -> Vec<u8> {
        let mut v = Vec::new();
        Self::vars(&self.lhs, &mut v);
        v
    }

    pub fn rhs_vars(&self) -> Vec<u8> {
        let mut v = Vec::new();
        Self::vars(&self.rhs, &mut v);
        v
    }
}

/// Rules whose left side matches `t` at its root, in rule order.
pub fn root_matches(t: &Term) -> impl Iterator<Item = &'static RewriteRule> + '_ {
    let head_fits = move |r: &&RewriteRule| {
        matches!((&r.lhs, t), (Neg(_), Term::Neg(_)) | (Add(..), Term::Add(..)) | (Mul(..), Term::Mul(..)))
    };
    RULES.iter().filter(head_fits).filter(move |r| r.apply(t).is_some())
}

fn write_pattern(p: &Pattern, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
    const NAMES: [&str; 3] = ["x", "y", "z"];
    match p {
        Var(i) => f.write_str(NAMES[*i as usize]),
        Zero => f.write_str("0"),
        One => f.write_str("1"),
        Neg(a) => {
            f.write_str("-")?;
            let wrap = !matches!(a, Var(_) | Zero | One);
            if wrap {
                f.write_str("(")?;
            }
            write_pattern(a, f, true)?;
            if wrap {
                f.write_str(")")?;
            }
            Ok(())
        }
        Add(a, b) | Mul(a, b) => {
            let op = if matches!(p, Add(..)) { "+" } else { "*" };
            if !top {
                f.write_str("(")?;
            }
            write_pattern(a, f, false)?;
            f.write_str(op)?;
            write_pattern(b, f, false)?;
            if !top {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pattern(self, f, true)
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.id, self.lhs, self.rhs)
    }
}

pub fn describe_rules() -> Vec<String> {
    RULES.iter().map(|r| alloc::format!("{r}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{eval_int, parse, Dialect};

    fn t(s: &str) -> Term {
        parse(s, Dialect::Ring).unwrap()
    }

    #[test]
    fn variables_are_conserved() {
        for r in RULES.iter() {
            let lhs = r.lhs_vars();
            assert!(r.rhs_vars().iter().all(|v| lhs.contains(v)), "{}", r.id);
            let mut sorted = lhs.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), lhs.len(), "{} is left-linear", r.id);
        }
    }

    #[test]
    fn rule_text() {
        assert_eq!(rule("r7").unwrap().to_string(), "r7: x+-(y+1) -> (x+-y)+-1");
        assert_eq!(rule("r15").unwrap().to_string(), "r15: x*(y+z) -> (x*y)+(x*z)");
        assert_eq!(rule("r1").unwrap().to_string(), "r1: -0 -> 0");
        assert_eq!(describe_rules().len(), 15);
        assert!(rule("r16").is_none());
    }

    #[test]
    fn examples() {
        assert_eq!(rule("r3").unwrap().apply(&t("1+(1+1)")), Some(t("(1+1)+1")));
        assert_eq!(rule("r10").unwrap().apply(&t("(-(1+1))+1")), Some(t("-1")));
        assert_eq!(rule("r5").unwrap().apply(&t("1+(-1)")), Some(t("0")));
        assert_eq!(rule("r14").unwrap().apply(&t("(1+1)*(-(1+1))")), Some(t("(-(1+1))*(1+1)")));
        assert_eq!(rule("r6").unwrap().apply(&t("1+1")), None);
        let ids: Vec<_> = root_matches(&t("0+(1+1)")).map(|r| r.id).collect();
        assert_eq!(ids, ["r3", "r8"]);
    }

    #[test]
    fn symmetric_variant_is_an_instance_of_r3() {
        // (-x)+(y+1) -> ((-x)+y)+1
        for (x, y) in [("1", "1"), ("1+1", "0"), ("(1+1)*(1+1)", "-1")] {
            let lhs = t(&alloc::format!("(-({x}))+(({y})+1)"));
            let want = t(&alloc::format!("((-({x}))+({y}))+1"));
            assert_eq!(rule("r3").unwrap().apply(&lhs), Some(want));
        }
    }

    #[test]
    fn every_rule_is_an_integer_identity() {
        let samples = ["0", "1", "-1", "1+1", "-(1+1+1)", "(1+1)*(1+1+1)"];
        for r in RULES.iter() {
            for x in samples {
                for y in samples {
                    for z in samples {
                        let env: Binding = [Some(t(x)), Some(t(y)), Some(t(z))];
                        let lhs = instantiate(&r.lhs, &env);
                        let rhs = instantiate(&r.rhs, &env);
                        assert_eq!(eval_int(&lhs), eval_int(&rhs), "{} at {x}, {y}, {z}", r.id);
                        assert_eq!(r.apply(&lhs), Some(rhs));
                    }
                }
            }
        }
    }
}
