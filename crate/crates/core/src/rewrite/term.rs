use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::{BigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};

/// Which signature a term may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dialect {
    /// `{0, 1, −, +, ·}`
    Ring,
    /// `{0, 1, ⊥, −, ⁻¹, +, ·}`
    Meadow,
}

/// A finite term. Subterms are shared, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term {
    Zero,
    One,
    Bottom,
    Neg(Arc<Term>),
    Inv(Arc<Term>),
    Add(Arc<Term>, Arc<Term>),
    Mul(Arc<Term>, Arc<Term>),
}

impl Term {
    pub fn neg(t: Term) -> Term {
        Term::Neg(Arc::new(t))
    }

    pub fn inv(t: Term) -> Term {
        Term::Inv(Arc::new(t))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Arc::new(a), Arc::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Arc::new(a), Arc::new(b))
    }

    /// The numeral denoting `k`: `0`, `(…(1+1)+…)+1`, or its negation.
    pub fn numeral(k: &BigInt) -> Term {
        let n = k.magnitude().to_u64().expect("numeral magnitude fits in memory");
        let pos = Self::positive_numeral(n);
        match k.sign() {
            Sign::Minus => Term::neg(pos),
            _ => pos,
        }
    }

    fn positive_numeral(n: u64) -> Term {
        if n == 0 {
            return Term::Zero;
        }
        let mut t = Term::One;
        for _ in 1..n {
            t = Term::add(t, Term::One);
        }
        t
    }

    /// Children in position order.
    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Zero | Term::One | Term::Bottom => Vec::new(),
            Term::Neg(a) | Term::Inv(a) => alloc::vec![&**a],
            Term::Add(a, b) | Term::Mul(a, b) => alloc::vec![&**a, &**b],
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        let mut stack = alloc::vec![self];
        let mut n = 0;
        while let Some(t) = stack.pop() {
            n += 1;
            stack.extend(t.children());
        }
        n
    }

    /// Whether the term avoids `⊥` and `⁻¹`.
    pub fn in_dialect(&self, dialect: Dialect) -> bool {
        if dialect == Dialect::Meadow {
            return true;
        }
        let mut stack = alloc::vec![self];
        while let Some(t) = stack.pop() {
            if matches!(t, Term::Bottom | Term::Inv(_)) {
                return false;
            }
            stack.extend(t.children());
        }
        true
    }

    /// The subterm at a 1-based child path.
    pub fn at(&self, path: &[u8]) -> Option<&Term> {
        let mut t = self;
        for &i in path {
            t = *t.children().get(usize::from(i).checked_sub(1)?)?;
        }
        Some(t)
    }

    /// Replaces the subterm at `path`, sharing everything off the path.
    pub fn replace_at(&self, path: &[u8], new: Term) -> Option<Term> {
        let Some((&i, rest)) = path.split_first() else {
            return Some(new);
        };
        Some(match (self, i) {
            (Term::Neg(a), 1) => Term::neg(a.replace_at(rest, new)?),
            (Term::Inv(a), 1) => Term::inv(a.replace_at(rest, new)?),
            (Term::Add(a, b), 1) => Term::Add(Arc::new(a.replace_at(rest, new)?), b.clone()),
            (Term::Add(a, b), 2) => Term::Add(a.clone(), Arc::new(b.replace_at(rest, new)?)),
            (Term::Mul(a, b), 1) => Term::Mul(Arc::new(a.replace_at(rest, new)?), b.clone()),
            (Term::Mul(a, b), 2) => Term::Mul(a.clone(), Arc::new(b.replace_at(rest, new)?)),
            _ => return None,
        })
    }

    /// `n` when the term is the positive numeral for `n`.
    pub fn as_positive_numeral(&self) -> Option<u64> {
        let mut t = self;
        let mut n = 1u64;
        loop {
            match t {
                Term::One => return Some(n),
                Term::Add(a, b) if **b == Term::One => {
                    n += 1;
                    t = a;
                }
                _ => return None,
            }
        }
    }

    /// The integer a numeral denotes.
    pub fn as_numeral(&self) -> Option<BigInt> {
        match self {
            Term::Zero => Some(BigInt::zero()),
            Term::Neg(a) => a.as_positive_numeral().map(|n| -BigInt::from(n)),
            _ => self.as_positive_numeral().map(BigInt::from),
        }
    }

    /// Concrete syntax; with `decimal`, numeral subterms print as literals.
    pub fn to_syntax(&self, decimal: bool) -> String {
        let mut out = String::new();
        Printer { decimal }.term(self, Slot::Top, &mut out).expect("writing to a String");
        out
    }
}

/// `0`, a positive numeral, or the negation of one.
pub fn is_numeral(t: &Term) -> bool {
    t.as_numeral().is_some()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        Printer { decimal: f.alternate() }.term(self, Slot::Top, &mut out)?;
        f.write_str(&out)
    }
}

/// Renders a child path as `ε` or `1.2.1`.
pub fn render_position(path: &[u8]) -> String {
    if path.is_empty() {
        return "ε".into();
    }
    let mut s = String::new();
    for (k, i) in path.iter().enumerate() {
        if k > 0 {
            s.push('.');
        }
        let _ = write!(s, "{i}");
    }
    s
}

/// Where a subterm sits relative to its parent.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Top,
    AddLeft,
    AddRight,
    MulLeft,
    MulRight,
    Operand,
}

struct Printer {
    decimal: bool,
}

impl Printer {
    fn term(&self, t: &Term, slot: Slot, out: &mut String) -> fmt::Result {
        use Slot::*;
        if self.decimal {
            if let Some(n) = t.as_positive_numeral().filter(|&n| n > 1) {
                return write!(out, "{n}");
            }
        }
        let bracket = match t {
            Term::Zero | Term::One | Term::Bottom | Term::Inv(_) => false,
            Term::Neg(_) => slot != Top,
            Term::Mul(..) => matches!(slot, MulRight | Operand),
            Term::Add(..) => !matches!(slot, Top | AddLeft),
        };
        if bracket {
            out.push('(');
        }
        match t {
            Term::Zero => out.push('0'),
            Term::One => out.push('1'),
            Term::Bottom => out.push_str("bot"),
            Term::Neg(a) => {
                out.push('-');
                self.term(a, Operand, out)?;
            }
            Term::Inv(a) => {
                self.term(a, Operand, out)?;
                out.push_str("^-1");
            }
            Term::Add(a, b) => {
                self.term(a, AddLeft, out)?;
                out.push('+');
                self.term(b, AddRight, out)?;
            }
            Term::Mul(a, b) => {
                self.term(a, MulLeft, out)?;
                match &**b {
                    Term::Inv(d) => {
                        out.push('/');
                        self.term(d, Operand, out)?;
                    }
                    _ => {
                        out.push('*');
                        self.term(b, MulRight, out)?;
                    }
                }
            }
        }
        if bracket {
            out.push(')');
        }
        Ok(())
    }
}

/// Evaluates a ring-dialect term in ℤ. `None` if `⊥` or `⁻¹` occurs.
pub fn eval_int(t: &Term) -> Option<BigInt> {
    enum Task<'a> {
        Visit(&'a Term),
        Apply(&'a Term),
    }
    let mut tasks = alloc::vec![Task::Visit(t)];
    let mut values: Vec<BigInt> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Task::Visit(u) => match u {
                Term::Zero => values.push(BigInt::zero()),
                Term::One => values.push(BigInt::one()),
                Term::Bottom | Term::Inv(_) => return None,
                _ => {
                    tasks.push(Task::Apply(u));
                    for c in u.children().into_iter().rev() {
                        tasks.push(Task::Visit(c));
                    }
                }
            },
            Task::Apply(u) => {
                let v = match u {
                    Term::Neg(_) => -values.pop()?,
                    Term::Add(..) => {
                        let b = values.pop()?;
                        values.pop()? + b
                    }
                    Term::Mul(..) => {
                        let b = values.pop()?;
                        values.pop()? * b
                    }
                    _ => unreachable!("leaves are handled on visit"),
                };
                values.push(v);
            }
        }
    }
    values.pop()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn numerals() {
        let three = Term::add(Term::add(Term::One, Term::One), Term::One);
        assert_eq!(Term::numeral(&b(3)), three);
        assert!(is_numeral(&three));
        assert!(is_numeral(&Term::neg(three.clone())));
        assert!(is_numeral(&Term::Zero));
        assert!(!is_numeral(&Term::add(Term::One, Term::add(Term::One, Term::One))));
        assert!(!is_numeral(&Term::neg(Term::Zero)));
        assert!(!is_numeral(&Term::neg(Term::neg(Term::One))));
        assert_eq!(Term::numeral(&b(-4)).as_numeral(), Some(b(-4)));
        assert_eq!(Term::numeral(&b(0)), Term::Zero);
    }

    #[test]
    fn printing() {
        let two = Term::numeral(&b(2));
        assert_eq!(Term::add(Term::One, two.clone()).to_string(), "1+(1+1)");
        assert_eq!(Term::numeral(&b(3)).to_string(), "1+1+1");
        assert_eq!(format!("{:#}", Term::numeral(&b(3))), "3");
        assert_eq!(format!("{:#}", Term::numeral(&b(-3))), "-3");
        assert_eq!(Term::add(Term::neg(two.clone()), Term::One).to_string(), "(-(1+1))+1");
        assert_eq!(Term::add(Term::One, Term::neg(Term::One)).to_string(), "1+(-1)");
        assert_eq!(Term::mul(two.clone(), Term::inv(Term::Zero)).to_string(), "(1+1)/0");
        assert_eq!(Term::inv(Term::inv(Term::Bottom)).to_string(), "bot^-1^-1");
        assert_eq!(Term::inv(two.clone()).to_string(), "(1+1)^-1");
        assert_eq!(Term::neg(Term::neg(Term::One)).to_string(), "-(-1)");
        assert_eq!(Term::mul(Term::One, Term::mul(Term::One, Term::Zero)).to_string(), "1*(1*0)");
        assert_eq!(format!("{:#}", Term::mul(two.clone(), Term::neg(two))), "2*(-2)");
    }

    #[test]
    fn positions() {
        let t = Term::add(Term::One, Term::neg(Term::Zero));
        assert_eq!(t.at(&[2, 1]), Some(&Term::Zero));
        assert_eq!(t.at(&[3]), None);
        assert_eq!(t.replace_at(&[2], Term::Zero).unwrap(), Term::add(Term::One, Term::Zero));
        assert_eq!(render_position(&[]), "ε");
        assert_eq!(render_position(&[2, 1]), "2.1");
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn integer_evaluation() {
        let t = Term::mul(Term::numeral(&b(3)), Term::numeral(&b(2)));
        assert_eq!(eval_int(&t), Some(b(6)));
        assert_eq!(eval_int(&Term::neg(Term::numeral(&b(2)))), Some(b(-2)));
        assert_eq!(eval_int(&Term::Zero), Some(b(0)));
        assert_eq!(eval_int(&Term::inv(Term::One)), None);
        assert_eq!(eval_int(&Term::numeral(&b(5000))), Some(b(5000)));
    }

    #[test]
    fn dialects() {
        assert!(Term::add(Term::One, Term::Zero).in_dialect(Dialect::Ring));
        assert!(!Term::add(Term::One, Term::Bottom).in_dialect(Dialect::Ring));
        assert!(Term::inv(Term::One).in_dialect(Dialect::Meadow));
    }
}
