//! Serialisation of results as JSON, CSV and plain-text tables. Vertex labels
//! are 1-based everywhere in this module.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_forms::Family;
use crate::error::{Error, Result};
use crate::extremal::{known_extremal, Expectation, ExtremalReport};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::{InvariantResult, InvariantTag, Prepared};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

fn labels(r: &InvariantResult) -> String {
    r.witness
        .to_labels()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// All requested invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(rename = "beta_E", skip_serializing_if = "Option::is_none")]
    pub beta_e: Option<usize>,
    #[serde(rename = "beta_M", skip_serializing_if = "Option::is_none")]
    pub beta_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mhs_strict: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mhs_weak: Option<usize>,
    pub witnesses: BTreeMap<String, Vec<usize>>,
    #[serde(skip)]
    results: Vec<InvariantResult>,
}

impl ResultRecord {
    pub fn compute(g: &Graph, tags: &[InvariantTag]) -> Result<Self> {
        let prep = Prepared::new(g)?;
        let results = tags
            .iter()
            .map(|&t| prep.result(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_results(g, results))
    }

    pub fn from_results(g: &Graph, results: Vec<InvariantResult>) -> Self {
        let mut rec = ResultRecord {
            graph6: write_graph6(g),
            n: g.order(),
            m: g.size(),
            beta: None,
            beta_e: None,
            beta_m: None,
            psi: None,
            mhs_strict: None,
            mhs_weak: None,
            witnesses: BTreeMap::new(),
            results: Vec::new(),
        };
        for r in &results {
            let slot = match r.tag {
                InvariantTag::Beta => &mut rec.beta,
                InvariantTag::BetaE => &mut rec.beta_e,
                InvariantTag::BetaM => &mut rec.beta_m,
                InvariantTag::Psi => &mut rec.psi,
                InvariantTag::MhsStrict => &mut rec.mhs_strict,
                InvariantTag::MhsWeak => &mut rec.mhs_weak,
            };
            *slot = Some(r.value);
            rec.witnesses
                .insert(r.tag.name().to_string(), r.witness.to_labels());
        }
        rec.results = results;
        rec
    }

    pub fn results(&self) -> &[InvariantResult] {
        &self.results
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serialisable") + "\n",
            Format::Csv => {
                let mut head = vec!["graph6".to_string(), "n".into(), "m".into()];
                let mut row = vec![self.graph6.clone(), self.n.to_string(), self.m.to_string()];
                for r in &self.results {
                    head.push(r.tag.name().into());
                    row.push(r.value.to_string());
                }
                for r in &self.results {
                    head.push(format!("{}_witness", r.tag));
                    row.push(labels(r));
                }
                format!("{}\n{}\n", head.join(","), row.join(","))
            }
            Format::Table => {
                let mut out = format!("graph6 {}  n={} m={}\n", self.graph6, self.n, self.m);
                for r in &self.results {
                    let _ = writeln!(out, "{:<10} {:>3}  {}", r.tag.name(), r.value, r.witness);
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCell {
    pub tag: InvariantTag,
    pub value: usize,
    pub expected: Option<usize>,
    pub witness: Vec<usize>,
}

impl FamilyCell {
    pub fn ok(&self) -> bool {
        self.expected.is_none_or(|e| e == self.value)
    }
}

/// One family member with computed values next to the closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub graph: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub cells: Vec<FamilyCell>,
    pub ok: bool,
}

pub fn family_rows(
    fam: Family,
    lo: usize,
    hi: usize,
    tags: &[InvariantTag],
) -> Result<Vec<FamilyRow>> {
    if lo < fam.min_param() {
        return Err(Error::BelowFamilyMinimum {
            family: fam.name(),
            min: fam.min_param(),
            got: lo,
        });
    }
    (lo..=hi)
        .map(|p| {
            let g = fam.generate(p)?;
            let prep = Prepared::new(&g)?;
            let cells = tags
                .iter()
                .map(|&tag| {
                    let r = prep.result(tag)?;
                    Ok(FamilyCell {
                        tag,
                        value: r.value,
                        expected: fam.expected(tag, p),
                        witness: r.witness.to_labels(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let ok = cells.iter().all(FamilyCell::ok);
            Ok(FamilyRow {
                graph: fam.spec(p),
                graph6: write_graph6(&g),
                n: g.order(),
                m: g.size(),
                cells,
                ok,
            })
        })
        .collect()
}

pub fn render_family_rows(rows: &[FamilyRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("serialisable") + "\n",
        Format::Csv => {
            let mut out = String::from("graph,n,m,invariant,value,expected,status\n");
            for r in rows {
                for c in &r.cells {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.graph,
                        r.n,
                        r.m,
                        c.tag,
                        c.value,
                        c.expected.map(|e| e.to_string()).unwrap_or_default(),
                        status(c.expected.is_some(), c.ok())
                    );
                }
            }
            out
        }
        Format::Table => {
            let mut out = format!("{:<16} {:>3} {:>4}", "graph", "n", "m");
            if let Some(first) = rows.first() {
                for c in &first.cells {
                    let _ = write!(out, " {:>12}", c.tag.name());
                }
            }
            out.push_str("  status\n");
            for r in rows {
                let _ = write!(out, "{:<16} {:>3} {:>4}", r.graph, r.n, r.m);
                for c in &r.cells {
                    let cell = match c.expected {
                        Some(e) if e == c.value => format!("{} (={e})", c.value),
                        Some(e) => format!("{} (!{e})", c.value),
                        None => c.value.to_string(),
                    };
                    let _ = write!(out, " {cell:>12}");
                }
                let _ = writeln!(out, "  {}", if r.ok { "ok" } else { "MISMATCH" });
            }
            out
        }
    }
}

fn status(has_expectation: bool, ok: bool) -> &'static str {
    match (has_expectation, ok) {
        (false, _) => "n/a",
        (true, true) => "ok",
        (true, false) => "MISMATCH",
    }
}

/// An extremal report next to the known value, when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    #[serde(flatten)]
    pub report: ExtremalReport,
    pub expected: Option<Expectation>,
    pub ok: bool,
}

impl ExtremalRow {
    pub fn new(report: ExtremalReport) -> Self {
        let expected = known_extremal(report.xi1, report.xi2, report.n);
        let ok = expected.is_none_or(|e| e.admits(report.max_diff));
        ExtremalRow {
            report,
            expected,
            ok,
        }
    }
}

pub fn render_extremal_rows(rows: &[ExtremalRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("serialisable") + "\n",
        Format::Csv => {
            let mut out =
                String::from("xi1,xi2,n,max_diff,expected,status,witness_graph,graphs_scanned\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.report.xi1,
                    r.report.xi2,
                    r.report.n,
                    r.report.max_diff,
                    r.expected
                        .map(|e| e.to_string().replace(", ", ";"))
                        .unwrap_or_default(),
                    status(r.expected.is_some(), r.ok),
                    r.report.witness_graph,
                    r.report.graphs_scanned
                );
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:<24} {:>2} {:>8} {:>10} {:>8}  {:<12} {}\n",
                "difference", "n", "max_diff", "expected", "status", "witness", "scanned"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<24} {:>2} {:>8} {:>10} {:>8}  {:<12} {}",
                    format!("({} - {})", r.report.xi1, r.report.xi2),
                    r.report.n,
                    r.report.max_diff,
                    r.expected
                        .map(|e| e.to_string())
                        .unwrap_or_else(|| "-".into()),
                    status(r.expected.is_some(), r.ok),
                    r.report.witness_graph,
                    r.report.graphs_scanned
                );
            }
            out
        }
    }
}
