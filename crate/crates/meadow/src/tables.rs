use std::str::FromStr;

use anyhow::{bail, Result};
use meadow_core::equivalence::EquivalencePartition;
use meadow_core::meadow::{FcmFinite, MeadowModel};
use meadow_core::ring::saturated_mult_subsets;
use meadow_core::{ModRing, Ring};
use serde_json::{json, Value};

use crate::format::{pad, OutputFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Classes,
    Mul,
    Add,
    NegInv,
    Saturated,
}

impl TableKind {
    pub const ALL: [TableKind; 5] =
        [TableKind::Classes, TableKind::Mul, TableKind::Add, TableKind::NegInv, TableKind::Saturated];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Classes => "classes",
            TableKind::Mul => "mul",
            TableKind::Add => "add",
            TableKind::NegInv => "neg-inv",
            TableKind::Saturated => "saturated",
        }
    }
}

impl FromStr for TableKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match TableKind::ALL.iter().find(|k| k.name() == s) {
            Some(k) => Ok(*k),
            None => bail!("unknown table {s:?}; expected classes, mul, add, neg-inv or saturated"),
        }
    }
}

/// A rectangular table with row and column labels.
struct Grid {
    corner: String,
    columns: Vec<String>,
    rows: Vec<(String, Vec<String>)>,
}

impl Grid {
    fn text(&self) -> String {
        let width = self
            .columns
            .iter()
            .chain(self.rows.iter().flat_map(|(_, r)| r.iter()))
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let head =
            self.rows.iter().map(|(l, _)| l.chars().count()).chain([self.corner.chars().count()]).max().unwrap_or(1);
        let line = |label: &str, cells: &[String]| {
            let body: Vec<String> = cells.iter().map(|c| pad(c, width)).collect();
            format!("{} | {}", pad(label, head), body.join(" ")).trim_end().to_string() + "\n"
        };
        let mut out = line(&self.corner, &self.columns);
        out.push_str(&format!("{}-+-{}\n", "-".repeat(head), "-".repeat((width + 1) * self.columns.len() - 1)));
        for (label, cells) in &self.rows {
            out.push_str(&line(label, cells));
        }
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![self.corner.clone()];
        header.extend(self.columns.iter().cloned());
        w.write_record(&header)?;
        for (label, cells) in &self.rows {
            let mut rec = vec![label.clone()];
            rec.extend(cells.iter().cloned());
            w.write_record(&rec)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

fn binary_grid(fcm: &FcmFinite<ModRing>, corner: &str, shown: &[usize], op: &[Vec<usize>]) -> Grid {
    let labels = &fcm.tables().labels;
    Grid {
        corner: corner.into(),
        columns: shown.iter().map(|&c| labels[c].clone()).collect(),
        rows: shown
            .iter()
            .map(|&a| (labels[a].clone(), shown.iter().map(|&b| labels[op[a][b]].clone()).collect()))
            .collect(),
    }
}

pub fn render_table(fcm: &FcmFinite<ModRing>, kind: TableKind, format: OutputFormat) -> Result<String> {
    let p = fcm.partition();
    let ring = p.ring();
    let t = fcm.tables();
    let labels = &t.labels;
    let bottom = fcm.bottom();
    let zero = fcm.zero();
    let all: Vec<usize> = (0..p.class_count()).collect();
    let without = |skip: &[usize]| -> Vec<usize> { all.iter().copied().filter(|c| !skip.contains(c)).collect() };
    let ring_name = ring.name();
    match kind {
        TableKind::Classes => classes(p, labels, format),
        TableKind::Mul | TableKind::Add => {
            let (corner, shown, op, note, omitted) = if kind == TableKind::Mul {
                let note =
                    format!("x*{b} = {b}*x = {b} for every x; the {b} row and column are omitted", b = labels[bottom]);
                ("x*y", without(&[bottom]), &t.mul, note, vec![labels[bottom].clone()])
            } else {
                let note = format!(
                    "x+{z} = x and x+{b} = {b} for every x; the {z} and {b} rows and columns are omitted",
                    z = labels[zero],
                    b = labels[bottom]
                );
                ("x+y", without(&[zero, bottom]), &t.add, note, vec![labels[zero].clone(), labels[bottom].clone()])
            };
            let grid = binary_grid(fcm, corner, &shown, op);
            Ok(match format {
                OutputFormat::Text => format!("{}{note}\n", grid.text()),
                OutputFormat::Csv => grid.csv()?,
                OutputFormat::Json => json_string(&json!({
                    "ring": ring_name,
                    "operation": kind.name(),
                    "omitted": omitted,
                    "labels": grid.columns,
                    "rows": grid.rows.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>(),
                }))?,
            })
        }
        TableKind::NegInv => {
            let grid = Grid {
                corner: "x".into(),
                columns: all.iter().map(|&c| labels[c].clone()).collect(),
                rows: vec![
                    ("-x".into(), all.iter().map(|&c| labels[t.neg[c]].clone()).collect()),
                    ("x^-1".into(), all.iter().map(|&c| labels[t.inv[c]].clone()).collect()),
                ],
            };
            Ok(match format {
                OutputFormat::Text => grid.text(),
                OutputFormat::Csv => grid.csv()?,
                OutputFormat::Json => json_string(&json!({
                    "ring": ring_name,
                    "labels": grid.columns,
                    "neg": grid.rows[0].1,
                    "inv": grid.rows[1].1,
                }))?,
            })
        }
        TableKind::Saturated => saturated_table(ring, format),
    }
}

fn json_string(v: &Value) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn classes(p: &EquivalencePartition<ModRing>, labels: &[String], format: OutputFormat) -> Result<String> {
    let rows: Vec<(String, String, Vec<String>)> = (0..p.class_count())
        .map(|c| (p.representative(c).render(), labels[c].clone(), p.members(c).iter().map(|m| m.render()).collect()))
        .collect();
    Ok(match format {
        OutputFormat::Text => {
            let w = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(1);
            let mut out = format!("{} cc-classes of fracpairs over {}\n", rows.len(), p.ring().name());
            for (i, (_, label, members)) in rows.iter().enumerate() {
                out.push_str(&format!("{i:>3}  {}  {}\n", pad(label, w), members.join(" ")));
            }
            out
        }
        OutputFormat::Csv => {
            let mut wr = csv::Writer::from_writer(Vec::new());
            wr.write_record(["class", "representative", "label", "members"])?;
            for (i, (rep, label, members)) in rows.iter().enumerate() {
                wr.write_record([&i.to_string(), rep, label, &members.join(" ")])?;
            }
            String::from_utf8(wr.into_inner()?)?
        }
        OutputFormat::Json => json_string(&json!({
            "ring": p.ring().name(),
            "bottom-class": p.bottom_class(),
            "classes": rows.iter().enumerate().map(|(i, (rep, label, members))| json!({
                "class": i,
                "representative": rep,
                "label": label,
                "members": members,
            })).collect::<Vec<_>>(),
        }))?,
    })
}

pub fn saturated_table(ring: &ModRing, format: OutputFormat) -> Result<String> {
    let sets: Vec<Vec<String>> = saturated_mult_subsets(ring)?
        .into_iter()
        .map(|s| s.elements().iter().map(|e| ring.render(e)).collect())
        .collect();
    Ok(match format {
        OutputFormat::Text => {
            let mut out = format!("{} saturated multiplicative subsets of {} without 0\n", sets.len(), ring.name());
            for s in &sets {
                out.push_str(&format!("{{{}}}\n", s.join(", ")));
            }
            out
        }
        OutputFormat::Csv => {
            let mut wr = csv::Writer::from_writer(Vec::new());
            wr.write_record(["subset", "elements"])?;
            for (i, s) in sets.iter().enumerate() {
                wr.write_record([i.to_string(), s.join(" ")])?;
            }
            String::from_utf8(wr.into_inner()?)?
        }
        OutputFormat::Json => json_string(&json!({ "ring": ring.name(), "subsets": sets }))?,
    })
}
