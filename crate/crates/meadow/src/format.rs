use std::str::FromStr;

use anyhow::{bail, Result};
use meadow_core::suite::{Mode, SuiteReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "text" => OutputFormat::Text,
            "json" => OutputFormat::Json,
            "csv" => OutputFormat::Csv,
            _ => bail!("unknown format {s:?}; expected text, json or csv"),
        })
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exhaustive => "exhaustive",
        Mode::Random { .. } => "random",
        Mode::Structural => "structural",
    }
}

fn mode_seed(mode: Mode) -> Option<u64> {
    match mode {
        Mode::Random { seed } => Some(seed),
        _ => None,
    }
}

/// One object per law: `axiom-id`, `status`, `statement`, `mode`, `seed`,
/// `tuples` and, on failure, `counterexample`.
pub fn report_json(report: &SuiteReport) -> Value {
    let entries: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            let mut v = json!({
                "axiom-id": o.id,
                "status": o.status.as_str(),
                "statement": o.statement,
                "mode": mode_name(o.mode),
                "seed": mode_seed(o.mode),
                "tuples": o.tuples,
            });
            if let Some(c) = &o.counterexample {
                let assignment: serde_json::Map<String, Value> =
                    c.assignment.iter().map(|(k, val)| (k.clone(), Value::String(val.clone()))).collect();
                v["counterexample"] = json!({ "assignment": assignment, "detail": c.detail });
            }
            v
        })
        .collect();
    Value::Array(entries)
}

pub fn report_csv(report: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["axiom-id", "status", "mode", "seed", "tuples", "counterexample", "statement"])?;
    for o in &report.outcomes {
        let seed = mode_seed(o.mode).map(|s| s.to_string()).unwrap_or_default();
        let cx = o.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default();
        w.write_record([&o.id, o.status.as_str(), mode_name(o.mode), &seed, &o.tuples.to_string(), &cx, &o.statement])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn report_text(report: &SuiteReport) -> String {
    let mut out = format!("{} on {}: {}/{} pass", report.suite, report.target, report.passed(), report.outcomes.len());
    match report.seed {
        Some(seed) => out.push_str(&format!(" (seed {seed})\n")),
        None => out.push('\n'),
    }
    let width = report.outcomes.iter().map(|o| o.id.len()).max().unwrap_or(0);
    for o in &report.outcomes {
        out.push_str(&format!(
            "  {:<12} {:<width$}  {} [{}, {} tuples]\n",
            o.status.as_str(),
            o.id,
            o.statement,
            mode_name(o.mode),
            o.tuples
        ));
        if let Some(c) = &o.counterexample {
            out.push_str(&format!("  {:<12} {:<width$}  counterexample: {c}\n", "", ""));
        }
    }
    out
}

pub fn render_report(report: &SuiteReport, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Text => report_text(report),
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&report_json(report))?),
        OutputFormat::Csv => report_csv(report)?,
    })
}

/// Pads to `width` characters, counting `⊥` as one.
pub fn pad(s: &str, width: usize) -> String {
    let n = s.chars().count();
    format!("{s}{}", " ".repeat(width.saturating_sub(n)))
}
