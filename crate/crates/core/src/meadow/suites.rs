use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{MeadowModel, ModelCarrier};
use crate::equivalence::EquivalencePartition;
use crate::fracpair::Fracpair;
use crate::ring::Ring;
use crate::suite::{run_laws, Counterexample, Law, Mode, Outcome, Sampling, Status, SuiteReport};

type ModelLaw<'a, M> = Law<ModelCarrier<'a, M>>;

macro_rules! law {
    ($id:literal, $stmt:literal, [$($v:literal),*], |$m:ident, $x:ident| $body:expr) => {
        Law { id: $id, statement: $stmt, vars: &[$($v),*], check: |c, $x| { let $m = c.model; $body } }
    };
}

/// Ids of the seventeen axioms, in table order (left column, then right).
pub const MD_AXIOM_IDS: [&str; 17] = [
    "md-add-assoc",
    "md-add-comm",
    "md-add-zero",
    "md-add-inverse",
    "md-mul-assoc",
    "md-mul-comm",
    "md-mul-one",
    "md-distrib",
    "md-neg-neg",
    "md-zero-square",
    "md-inv-inv",
    "md-mul-inv",
    "md-inv-mul",
    "md-inv-one",
    "md-inv-zero",
    "md-add-bot",
    "md-mul-bot",
];

fn md_axioms<'a, M: MeadowModel>() -> Vec<ModelLaw<'a, M>> {
    vec![
        law!("md-add-assoc", "(x+y)+z = x+(y+z)", ["x", "y", "z"], |m, v| {
            Some((m.add(&m.add(&v[0], &v[1]), &v[2]), m.add(&v[0], &m.add(&v[1], &v[2]))))
        }),
        law!("md-add-comm", "x+y = y+x", ["x", "y"], |m, v| Some((m.add(&v[0], &v[1]), m.add(&v[1], &v[0])))),
        law!("md-add-zero", "x+0 = x", ["x"], |m, v| Some((m.add(&v[0], &m.zero()), v[0].clone()))),
        law!("md-add-inverse", "x+(-x) = 0*x", ["x"], |m, v| {
            Some((m.add(&v[0], &m.neg(&v[0])), m.mul(&m.zero(), &v[0])))
        }),
        law!("md-mul-assoc", "(x*y)*z = x*(y*z)", ["x", "y", "z"], |m, v| {
            Some((m.mul(&m.mul(&v[0], &v[1]), &v[2]), m.mul(&v[0], &m.mul(&v[1], &v[2]))))
        }),
        law!("md-mul-comm", "x*y = y*x", ["x", "y"], |m, v| Some((m.mul(&v[0], &v[1]), m.mul(&v[1], &v[0])))),
        law!("md-mul-one", "1*x = x", ["x"], |m, v| Some((m.mul(&m.one(), &v[0]), v[0].clone()))),
        law!("md-distrib", "x*(y+z) = (x*y)+(x*z)", ["x", "y", "z"], |m, v| {
            Some((m.mul(&v[0], &m.add(&v[1], &v[2])), m.add(&m.mul(&v[0], &v[1]), &m.mul(&v[0], &v[2]))))
        }),
        law!("md-neg-neg", "-(-x) = x", ["x"], |m, v| Some((m.neg(&m.neg(&v[0])), v[0].clone()))),
        law!("md-zero-square", "0*(x*x) = 0*x", ["x"], |m, v| {
            Some((m.mul(&m.zero(), &m.mul(&v[0], &v[0])), m.mul(&m.zero(), &v[0])))
        }),
        law!("md-inv-inv", "(x^-1)^-1 = x+0*x^-1", ["x"], |m, v| {
            let xi = m.inv(&v[0]);
            Some((m.inv(&xi), m.add(&v[0], &m.mul(&m.zero(), &xi))))
        }),
        law!("md-mul-inv", "x*x^-1 = 1+0*x^-1", ["x"], |m, v| {
            let xi = m.inv(&v[0]);
            Some((m.mul(&v[0], &xi), m.add(&m.one(), &m.mul(&m.zero(), &xi))))
        }),
        law!("md-inv-mul", "(x*y)^-1 = x^-1*y^-1", ["x", "y"], |m, v| {
            Some((m.inv(&m.mul(&v[0], &v[1])), m.mul(&m.inv(&v[0]), &m.inv(&v[1]))))
        }),
        law!("md-inv-one", "1^-1 = 1", [], |m, _v| Some((m.inv(&m.one()), m.one()))),
        law!("md-inv-zero", "0^-1 = bot", [], |m, _v| Some((m.inv(&m.zero()), m.bottom()))),
        law!("md-add-bot", "x+bot = bot", ["x"], |m, v| Some((m.add(&v[0], &m.bottom()), m.bottom()))),
        law!("md-mul-bot", "x*bot = bot", ["x"], |m, v| Some((m.mul(&v[0], &m.bottom()), m.bottom()))),
    ]
}

/// All seventeen axioms: exhaustive on finite models, sampled otherwise.
pub fn md_axiom_suite<M: MeadowModel>(model: &M, sampling: &Sampling) -> SuiteReport {
    run_laws(&ModelCarrier { model }, "md-axioms", &md_axioms(), sampling)
}

fn md_identities<'a, M: MeadowModel>() -> Vec<ModelLaw<'a, M>> {
    vec![
        law!("b1-neg-mul", "-(x*y) = x*(-y)", ["x", "y"], |m, v| {
            Some((m.neg(&m.mul(&v[0], &v[1])), m.mul(&v[0], &m.neg(&v[1]))))
        }),
        law!("b2-fraction-sum", "x*y^-1 + u*v^-1 = (x*v+u*y)*(y*v)^-1", ["x", "y", "u", "v"], |m, w| {
            let (x, y, u, v) = (&w[0], &w[1], &w[2], &w[3]);
            let lhs = m.add(&m.mul(x, &m.inv(y)), &m.mul(u, &m.inv(v)));
            let rhs = m.mul(&m.add(&m.mul(x, v), &m.mul(u, y)), &m.inv(&m.mul(y, v)));
            Some((lhs, rhs))
        }),
        law!("b3-inv-square", "x*(x^-1*x^-1) = x^-1", ["x"], |m, v| {
            let xi = m.inv(&v[0]);
            Some((m.mul(&v[0], &m.mul(&xi, &xi)), xi))
        }),
        law!("weak-additive-inverse", "(x+(-x))+x = x", ["x"], |m, v| {
            Some((m.add(&m.add(&v[0], &m.neg(&v[0])), &v[0]), v[0].clone()))
        }),
        law!("neg-weak-additive-inverse", "((-x)+x)+(-x) = -x", ["x"], |m, v| {
            let n = m.neg(&v[0]);
            Some((m.add(&m.add(&n, &v[0]), &n), n))
        }),
        law!("weak-inverse-unique", "x+y+x = x and y+x+y = y => y = -x", ["x", "y"], |m, v| {
            let (x, y) = (&v[0], &v[1]);
            let p1 = m.add(&m.add(x, y), x) == *x;
            let p2 = m.add(&m.add(y, x), y) == *y;
            (p1 && p2).then(|| (y.clone(), m.neg(x)))
        }),
        law!("cc-bridge", "(x*z)*(y*(z*z))^-1 = x*(y*z)^-1", ["x", "y", "z"], |m, v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let lhs = m.mul(&m.mul(x, z), &m.inv(&m.mul(y, &m.mul(z, z))));
            Some((lhs, m.mul(x, &m.inv(&m.mul(y, z)))))
        }),
        law!("add-zero-mul", "x+0*x = x", ["x"], |m, v| Some((m.add(&v[0], &m.mul(&m.zero(), &v[0])), v[0].clone()))),
        law!("zero-mul-zero", "0*0 = 0", [], |m, _v| Some((m.mul(&m.zero(), &m.zero()), m.zero()))),
        law!("neg-zero", "-0 = 0", [], |m, _v| Some((m.neg(&m.zero()), m.zero()))),
        law!("neg-bot", "-bot = bot", [], |m, _v| Some((m.neg(&m.bottom()), m.bottom()))),
        law!("inv-bot", "bot^-1 = bot", [], |m, _v| Some((m.inv(&m.bottom()), m.bottom()))),
        law!("zero-mul-neg", "0*x = 0*(-x)", ["x"], |m, v| {
            Some((m.mul(&m.zero(), &v[0]), m.mul(&m.zero(), &m.neg(&v[0]))))
        }),
        law!("zero-mul-sum", "0*(x*y) = 0*(x+y)", ["x", "y"], |m, v| {
            Some((m.mul(&m.zero(), &m.mul(&v[0], &v[1])), m.mul(&m.zero(), &m.add(&v[0], &v[1]))))
        }),
        law!("mul-inv-right", "x*y*y^-1 = x+0*y^-1", ["x", "y"], |m, v| {
            let yi = m.inv(&v[1]);
            Some((m.mul(&m.mul(&v[0], &v[1]), &yi), m.add(&v[0], &m.mul(&m.zero(), &yi))))
        }),
    ]
}

/// Derived identities of common meadows.
pub fn md_identity_suite<M: MeadowModel>(model: &M, sampling: &Sampling) -> SuiteReport {
    run_laws(&ModelCarrier { model }, "md-identities", &md_identities(), sampling)
}

fn zero_part_laws<'a, M: MeadowModel>() -> Vec<ModelLaw<'a, M>> {
    vec![
        law!("zr-one", "0*1 = 0", [], |m, _v| Some((m.mul(&m.zero(), &m.one()), m.zero()))),
        law!("zr-closed-add", "0*x = 0 and 0*y = 0 => 0*(x+y) = 0", ["x", "y"], |m, v| {
            let z = m.zero();
            (m.mul(&z, &v[0]) == z && m.mul(&z, &v[1]) == z).then(|| (m.mul(&z, &m.add(&v[0], &v[1])), z.clone()))
        }),
        law!("zr-closed-mul", "0*x = 0 and 0*y = 0 => 0*(x*y) = 0", ["x", "y"], |m, v| {
            let z = m.zero();
            (m.mul(&z, &v[0]) == z && m.mul(&z, &v[1]) == z).then(|| (m.mul(&z, &m.mul(&v[0], &v[1])), z.clone()))
        }),
        law!("zr-closed-neg", "0*x = 0 => 0*(-x) = 0", ["x"], |m, v| {
            let z = m.zero();
            (m.mul(&z, &v[0]) == z).then(|| (m.mul(&z, &m.neg(&v[0])), z.clone()))
        }),
        law!("zr-add-inverse", "0*x = 0 => x+(-x) = 0", ["x"], |m, v| {
            let z = m.zero();
            (m.mul(&z, &v[0]) == z).then(|| (m.add(&v[0], &m.neg(&v[0])), z.clone()))
        }),
    ]
}

/// `{x | 0·x = 0}` contains 0 and 1, is closed under `+`, `·` and `−`, and
/// has additive inverses, so with the semiring axioms it is a commutative
/// ring. Only conclusive on finite models.
pub fn zero_part_ring_suite<M: MeadowModel>(model: &M, sampling: &Sampling) -> SuiteReport {
    run_laws(&ModelCarrier { model }, "zero-part-ring", &zero_part_laws(), sampling)
}

fn involutive_laws<'a, M: MeadowModel>() -> Vec<ModelLaw<'a, M>> {
    vec![
        law!("cr-add-assoc", "(x+y)+z = x+(y+z)", ["x", "y", "z"], |m, v| {
            Some((m.add(&m.add(&v[0], &v[1]), &v[2]), m.add(&v[0], &m.add(&v[1], &v[2]))))
        }),
        law!("cr-add-comm", "x+y = y+x", ["x", "y"], |m, v| Some((m.add(&v[0], &v[1]), m.add(&v[1], &v[0])))),
        law!("cr-add-zero", "x+0 = x", ["x"], |m, v| Some((m.add(&v[0], &m.zero()), v[0].clone()))),
        law!("cr-add-inverse", "x+(-x) = 0", ["x"], |m, v| Some((m.add(&v[0], &m.neg(&v[0])), m.zero()))),
        law!("cr-mul-assoc", "(x*y)*z = x*(y*z)", ["x", "y", "z"], |m, v| {
            Some((m.mul(&m.mul(&v[0], &v[1]), &v[2]), m.mul(&v[0], &m.mul(&v[1], &v[2]))))
        }),
        law!("cr-mul-comm", "x*y = y*x", ["x", "y"], |m, v| Some((m.mul(&v[0], &v[1]), m.mul(&v[1], &v[0])))),
        law!("cr-mul-one", "1*x = x", ["x"], |m, v| Some((m.mul(&m.one(), &v[0]), v[0].clone()))),
        law!("cr-distrib", "x*(y+z) = (x*y)+(x*z)", ["x", "y", "z"], |m, v| {
            Some((m.mul(&v[0], &m.add(&v[1], &v[2])), m.add(&m.mul(&v[0], &v[1]), &m.mul(&v[0], &v[2]))))
        }),
        law!("inv-involution", "(x^-1)^-1 = x", ["x"], |m, v| Some((m.inv(&m.inv(&v[0])), v[0].clone()))),
        law!("inv-weak", "x*(x*x^-1) = x", ["x"], |m, v| {
            Some((m.mul(&v[0], &m.mul(&v[0], &m.inv(&v[0]))), v[0].clone()))
        }),
        law!("inv-zero", "0^-1 = 0", [], |m, _v| Some((m.inv(&m.zero()), m.zero()))),
    ]
}

/// Involutive-meadow laws: commutative ring axioms, `(x⁻¹)⁻¹ = x`,
/// `x·(x·x⁻¹) = x` and `0⁻¹ = 0`.
pub fn involutive_suite<M: MeadowModel>(model: &M, sampling: &Sampling) -> SuiteReport {
    run_laws(&ModelCarrier { model }, "involutive", &involutive_laws(), sampling)
}

fn exhaustive_outcome(id: &str, statement: &str) -> Outcome {
    Outcome {
        id: id.into(),
        statement: statement.into(),
        status: Status::Pass,
        mode: Mode::Exhaustive,
        tuples: 0,
        counterexample: None,
    }
}

fn fail(outcome: &mut Outcome, assignment: Vec<(String, String)>, detail: String) {
    if outcome.status == Status::Pass {
        outcome.status = Status::Fail;
        outcome.counterexample = Some(Counterexample { assignment, detail });
    }
}

/// Operations respect cc-equivalence: for every `a ~ a'` and every `b`,
/// `a+b ~ a'+b`, `a·b ~ a'·b`, `−a ~ −a'` and `a⁻¹ ~ a'⁻¹`.
pub fn check_congruence<R: Ring>(partition: &EquivalencePartition<R>) -> SuiteReport {
    type BinOp<R> = fn(&Fracpair<R>, &Fracpair<R>) -> Fracpair<R>;
    type UnOp<R> = fn(&Fracpair<R>) -> Fracpair<R>;
    let r = partition.ring();
    let mut report = SuiteReport::new("congruence", format!("Fcm({})", r.name()));
    let els = partition.elements();
    let all: Vec<Fracpair<R>> =
        els.iter().flat_map(|n| els.iter().map(move |d| Fracpair::new(r, n.clone(), d.clone()))).collect();
    let class = |f: &Fracpair<R>| partition.class_of(f).expect("closed under the operations");
    let binary: [(&str, &str, BinOp<R>); 2] = [
        ("cong-add", "a ~ a' => a+b ~ a'+b", |a, b| a.add(b).expect("same ring")),
        ("cong-mul", "a ~ a' => a*b ~ a'*b", |a, b| a.mul(b).expect("same ring")),
    ];
    let unary: [(&str, &str, UnOp<R>); 2] =
        [("cong-neg", "a ~ a' => -a ~ -a'", |a| a.neg()), ("cong-inv", "a ~ a' => a^-1 ~ a'^-1", |a| a.inv())];
    for (id, stmt, op) in binary {
        let mut o = exhaustive_outcome(id, stmt);
        for c in 0..partition.class_count() {
            let a = partition.representative(c);
            for a2 in partition.members(c) {
                for b in &all {
                    o.tuples += 1;
                    if class(&op(&a, b)) != class(&op(&a2, b)) {
                        let asg = vec![("a".into(), a.render()), ("a'".into(), a2.render()), ("b".into(), b.render())];
                        fail(&mut o, asg, format!("{} vs {}", op(&a, b), op(&a2, b)));
                    }
                }
            }
        }
        report.push(o);
    }
    for (id, stmt, op) in unary {
        let mut o = exhaustive_outcome(id, stmt);
        for c in 0..partition.class_count() {
            let a = partition.representative(c);
            for a2 in partition.members(c) {
                o.tuples += 1;
                if class(&op(&a)) != class(&op(&a2)) {
                    let asg = vec![("a".into(), a.render()), ("a'".into(), a2.render())];
                    fail(&mut o, asg, format!("{} vs {}", op(&a), op(&a2)));
                }
            }
        }
        report.push(o);
    }
    report
}

/// For a map `f` from a finite model: the four premises (`+`, `·`, `⁻¹`
/// and `1` are preserved) followed by the conclusions `f(0) = 0`,
/// `f(⊥) = ⊥` and `f(−x) = −f(x)`.
pub fn hom_premises_report<S: MeadowModel, D: MeadowModel>(
    src: &S,
    dst: &D,
    f: &dyn Fn(&S::Elem) -> D::Elem,
) -> Option<SuiteReport> {
    let els = src.elements()?;
    let mut report = SuiteReport::new("hom", format!("{} -> {}", src.name(), dst.name()));
    let show = |x: &S::Elem| src.render(x);
    let check1 = |id: &str, stmt: &str, lhs: &dyn Fn(&S::Elem) -> D::Elem, rhs: &dyn Fn(&S::Elem) -> D::Elem| {
        let mut o = exhaustive_outcome(id, stmt);
        for x in &els {
            o.tuples += 1;
            let (l, r) = (lhs(x), rhs(x));
            if l != r {
                fail(
                    &mut o,
                    vec![("x".into(), show(x))],
                    format!("lhs = {}, rhs = {}", dst.render(&l), dst.render(&r)),
                );
            }
        }
        o
    };
    let mut outcomes = Vec::new();
    for (id, stmt, plus) in [("hom-add", "f(x+y) = f(x)+f(y)", true), ("hom-mul", "f(x*y) = f(x)*f(y)", false)] {
        let mut o = exhaustive_outcome(id, stmt);
        for x in &els {
            for y in &els {
                o.tuples += 1;
                let (l, r) = if plus {
                    (f(&src.add(x, y)), dst.add(&f(x), &f(y)))
                } else {
                    (f(&src.mul(x, y)), dst.mul(&f(x), &f(y)))
                };
                if l != r {
                    let asg = vec![("x".into(), show(x)), ("y".into(), show(y))];
                    fail(&mut o, asg, format!("lhs = {}, rhs = {}", dst.render(&l), dst.render(&r)));
                }
            }
        }
        outcomes.push(o);
    }
    outcomes.push(check1("hom-inv", "f(x^-1) = f(x)^-1", &|x| f(&src.inv(x)), &|x| dst.inv(&f(x))));
    outcomes.push(check1("hom-neg", "f(-x) = -f(x)", &|x| f(&src.neg(x)), &|x| dst.neg(&f(x))));
    let constants = [
        ("hom-one", "f(1) = 1", f(&src.one()), dst.one()),
        ("hom-zero", "f(0) = 0", f(&src.zero()), dst.zero()),
        ("hom-bot", "f(bot) = bot", f(&src.bottom()), dst.bottom()),
    ];
    for (id, stmt, l, r) in constants {
        let mut o = exhaustive_outcome(id, stmt);
        o.tuples = 1;
        if l != r {
            fail(&mut o, Vec::new(), format!("lhs = {}, rhs = {}", dst.render(&l), dst.render(&r)));
        }
        outcomes.push(o);
    }
    // premises first, then the conclusions
    let order = ["hom-add", "hom-mul", "hom-inv", "hom-one", "hom-zero", "hom-bot", "hom-neg"];
    for id in order {
        let i = outcomes.iter().position(|o| o.id == id).expect("listed above");
        report.push(outcomes.swap_remove(i));
    }
    Some(report)
}
