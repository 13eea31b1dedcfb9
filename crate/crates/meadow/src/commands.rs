use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use meadow_core::equivalence::{cc_normalize_parts, rf_normalize_parts};
use meadow_core::meadow::{
    check_congruence, involutive_suite, md_axiom_suite, md_identity_suite, zero_part_ring_suite, FcmInt, MeadowModel,
    Q0Cm, QBot,
};
use meadow_core::rewrite::{
    cc_form_term, eval_in, ext_rational_term, normalize_with_budget, parse, rational_term, render_position, Dialect,
    Strategy, Term, STEP_BUDGET,
};
use meadow_core::ring::{bmcr_report, check_cr_axioms, check_eqnn, check_reduced};
use meadow_core::suite::{Counterexample, Mode, Outcome, Sampling, Status, SuiteReport};
use meadow_core::{DualIntRing, Integers, ModRing, ProductRing, Ring};
use num_bigint::BigInt;
use serde_json::json;

use crate::format::{render_report, OutputFormat};
use crate::tables::{render_table, saturated_table, TableKind};
use crate::target::{fcm_mod, partition, ModelSelector, RingSelector, Target};

pub const BUDGET_VAR: &str = "MEADOW_STEP_BUDGET";

pub const SUITES: [&str; 9] =
    ["cr", "reduced", "bmcr", "eqnn", "congruence", "md-axioms", "md-identities", "involutive", "zero-part"];

fn value_output<M: MeadowModel>(
    model: &M,
    v: &M::Elem,
    term: Option<Term>,
    expr: &str,
    format: OutputFormat,
) -> Result<String> {
    let shown = match term {
        Some(t) => t.to_string(),
        None => model.render(v),
    };
    Ok(match format {
        OutputFormat::Text => format!("{shown}\n"),
        OutputFormat::Json => format!("{}\n", json!({ "model": model.name(), "expr": expr, "value": shown })),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["model", "expr", "value"])?;
            w.write_record([model.name().as_str(), expr, &shown])?;
            String::from_utf8(w.into_inner()?)?
        }
    })
}

/// Evaluates a meadow-dialect expression and prints its canonical value.
pub fn eval(
    model: ModelSelector,
    expr: &str,
    term_syntax: bool,
    allow_non_reduced: bool,
    format: OutputFormat,
) -> Result<String> {
    let t = parse(expr, Dialect::Meadow)?;
    match model {
        ModelSelector::QBot => {
            let m = QBot::default();
            let v = eval_in(&m, &t);
            value_output(&m, &v, term_syntax.then(|| ext_rational_term(&v)), expr, format)
        }
        ModelSelector::Q0 => {
            let m = Q0Cm::default();
            let v = eval_in(&m, &t);
            value_output(&m, &v, term_syntax.then(|| rational_term(&v.0)), expr, format)
        }
        ModelSelector::FcmInt => {
            let m = FcmInt::default();
            let v = eval_in(&m, &t);
            value_output(&m, &v, term_syntax.then(|| cc_form_term(&v)), expr, format)
        }
        ModelSelector::FcmMod(n) => {
            let m = fcm_mod(n, allow_non_reduced)?;
            let v = eval_in(&m, &t);
            let term = term_syntax.then(|| {
                let rep = m.partition().representative(v);
                Term::mul(Term::numeral(&BigInt::from(*rep.num())), Term::inv(Term::numeral(&BigInt::from(*rep.den()))))
            });
            value_output(&m, &v, term, expr, format)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Cc,
    Rf,
}

pub fn normalize(rel: Relation, p: &BigInt, q: &BigInt, format: OutputFormat) -> Result<String> {
    let (num, den) = match rel {
        Relation::Cc => {
            let f = cc_normalize_parts(p.clone(), q.clone());
            (f.num().clone(), f.den().clone())
        }
        Relation::Rf => {
            let f = rf_normalize_parts(p.clone(), q.clone());
            (f.num().clone(), f.den().clone())
        }
    };
    let rel_name = if rel == Relation::Cc { "cc" } else { "rf" };
    Ok(match format {
        OutputFormat::Text => format!("{num}/{den}\n"),
        OutputFormat::Json => format!(
            "{}\n",
            json!({ "relation": rel_name, "input": format!("{p}/{q}"), "num": num.to_string(), "den": den.to_string() })
        ),
        OutputFormat::Csv => format!("relation,input,num,den\n{rel_name},{p}/{q},{num},{den}\n"),
    })
}

fn eqnn_report<R: Ring>(ring: &R) -> Result<SuiteReport> {
    let r = check_eqnn(ring)?;
    let mut report = SuiteReport::new("eqnn", ring.name());
    let counterexample = r.counterexamples.first().map(|(p, q)| Counterexample {
        assignment: vec![("p".into(), ring.render(p)), ("q".into(), ring.render(q))],
        detail: String::from("p*q in n(R) differs from p, q both in n(R)"),
    });
    report.push(Outcome {
        id: "eqnn".into(),
        statement: "p*q in n(R) <=> p in n(R) and q in n(R)".into(),
        status: if r.passed() { Status::Pass } else { Status::Fail },
        mode: Mode::Exhaustive,
        tuples: r.pairs as u64,
        counterexample,
    });
    Ok(report)
}

fn ring_suite<R: Ring>(ring: &R, suite: &str, sampling: &Sampling) -> Result<SuiteReport> {
    Ok(match suite {
        "cr" => check_cr_axioms(ring, sampling),
        "reduced" => check_reduced(ring, sampling),
        "bmcr" => bmcr_report(ring, sampling),
        "eqnn" => eqnn_report(ring)?,
        _ => bail!("suite {suite} does not apply to a ring target; try a meadow model such as fcm-mod:<n>"),
    })
}

fn model_suite<M: MeadowModel>(model: &M, suite: &str, sampling: &Sampling) -> Result<SuiteReport> {
    Ok(match suite {
        "md-axioms" => md_axiom_suite(model, sampling),
        "md-identities" => md_identity_suite(model, sampling),
        "involutive" => involutive_suite(model, sampling),
        "zero-part" => zero_part_ring_suite(model, sampling),
        _ => bail!("suite {suite} does not apply to a meadow model; try a ring target such as mod:<n>"),
    })
}

/// Runs one suite; the caller exits 0 exactly when every law passes.
pub fn check(target: Target, suite: &str, sampling: &Sampling, allow_non_reduced: bool) -> Result<SuiteReport> {
    if !SUITES.contains(&suite) {
        bail!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "));
    }
    if suite == "congruence" {
        return match target {
            Target::Model(ModelSelector::FcmMod(n)) | Target::Ring(RingSelector::Mod(n)) => {
                Ok(check_congruence(&partition(n, allow_non_reduced)?))
            }
            _ => bail!("congruence is checked exhaustively and needs fcm-mod:<n> or mod:<n>"),
        };
    }
    match target {
        Target::Model(m) => match m {
            ModelSelector::QBot => model_suite(&QBot::default(), suite, sampling),
            ModelSelector::Q0 => model_suite(&Q0Cm::default(), suite, sampling),
            ModelSelector::FcmInt => model_suite(&FcmInt::default(), suite, sampling),
            ModelSelector::FcmMod(n) => model_suite(&fcm_mod(n, allow_non_reduced)?, suite, sampling),
        },
        Target::Ring(r) => match r {
            RingSelector::Mod(n) => ring_suite(&ModRing::allow_non_reduced(n)?, suite, sampling),
            RingSelector::Int => ring_suite(&Integers, suite, sampling),
            RingSelector::Dual => ring_suite(&DualIntRing, suite, sampling),
            RingSelector::Prod(a, b) => ring_suite(
                &ProductRing::new(ModRing::allow_non_reduced(a)?, ModRing::allow_non_reduced(b)?),
                suite,
                sampling,
            ),
        },
    }
}

pub fn check_output(report: &SuiteReport, format: OutputFormat) -> Result<String> {
    render_report(report, format)
}

pub fn tables(n: u64, kind: TableKind, allow_non_reduced: bool, format: OutputFormat) -> Result<String> {
    if kind == TableKind::Saturated {
        return saturated_table(&ModRing::allow_non_reduced(n)?, format);
    }
    render_table(&fcm_mod(n, allow_non_reduced)?, kind, format)
}

/// Step budget from the environment, or the default.
pub fn step_budget() -> Result<u64> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{BUDGET_VAR}={v:?} is not a step count")),
        Err(_) => Ok(STEP_BUDGET),
    }
}

pub fn rewrite(expr: &str, strategy: Strategy, trace: bool, term_syntax: bool, format: OutputFormat) -> Result<String> {
    let t = parse(expr, Dialect::Ring)?;
    let tr = normalize_with_budget(&t, strategy, step_budget()?)?;
    let nf = tr.final_term();
    let value = if term_syntax { nf.to_string() } else { format!("{nf:#}") };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            if trace {
                for (i, s) in tr.steps.iter().enumerate() {
                    out.push_str(&format!(
                        "{:>4}  {:<3} at {:<8} {}\n",
                        i + 1,
                        s.rule,
                        render_position(&s.position),
                        s.term
                    ));
                }
            }
            out.push_str(&format!("{value}\n"));
        }
        OutputFormat::Json => {
            if trace {
                for s in &tr.steps {
                    let line = json!({ "rule": s.rule, "position": s.position, "term-after": s.term.to_string() });
                    out.push_str(&format!("{line}\n"));
                }
            }
            let summary = json!({ "normal-form": value, "steps": tr.len(), "strategy": strategy.to_string() });
            out.push_str(&format!("{summary}\n"));
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["step", "rule", "position", "term-after"])?;
            if trace {
                for (i, s) in tr.steps.iter().enumerate() {
                    w.write_record([
                        (i + 1).to_string(),
                        s.rule.to_string(),
                        render_position(&s.position),
                        s.term.to_string(),
                    ])?;
                }
            }
            w.write_record(["result".to_string(), String::new(), String::new(), value])?;
            out.push_str(&String::from_utf8(w.into_inner()?)?);
        }
    }
    Ok(out)
}

pub fn golden_file_name(kind: TableKind, format: OutputFormat) -> String {
    let ext = match format {
        OutputFormat::Text => "txt",
        OutputFormat::Json => "json",
        OutputFormat::Csv => "csv",
    };
    format!("{}.{ext}", kind.name())
}

/// Writes every table for ℤ/nℤ in every format into `dir`.
pub fn write_golden(n: u64, dir: &Path) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for kind in TableKind::ALL {
        for format in [OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv] {
            let name = golden_file_name(kind, format);
            let path = dir.join(&name);
            let mut f = std::fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
            f.write_all(tables(n, kind, false, format)?.as_bytes())?;
            written.push(name);
        }
    }
    Ok(written)
}
