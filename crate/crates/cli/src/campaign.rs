//! Formula-versus-oracle verification over a generated instance stream.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use fanideal_core::formulas::{composite_report, fan_depth, fan_report, path_invariants};
use fanideal_core::oracle::graph_invariants;
use fanideal_core::{FanGraphSpec, Field, FormulaError, Gluing, InvariantReport, OracleError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::formats::ReportDoc;
use crate::generate::{generate_instances, GeneratorConfig, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    FormulaInapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub formula_us: u64,
    pub oracle_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub id: String,
    /// SHA-256 of the compact JSON of `spec`.
    pub digest: String,
    pub spec: Value,
    pub vertices: usize,
    pub formula: Option<ReportDoc>,
    pub oracle: ReportDoc,
    pub verdict: Verdict,
    /// The failed hypothesis when the formula does not apply.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub precondition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    /// `depth G >= depth G_1 + depth G_2 - 2`, checked on circ composites.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lower_bound: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub family: String,
    pub max_vertices: usize,
    pub samples: usize,
    pub seed: u64,
    pub field: String,
    pub total: usize,
    pub counts: BTreeMap<Verdict, usize>,
    pub preconditions: BTreeMap<String, usize>,
}

impl Summary {
    pub fn count(&self, v: Verdict) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct CampaignOptions {
    pub field: Field,
    pub timing: bool,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            field: Field::Gf2,
            timing: false,
        }
    }
}

pub fn digest(spec: &Value) -> String {
    hex::encode(Sha256::digest(spec.to_string().as_bytes()))
}

/// The formula report for an instance, or the hypothesis that fails.
pub fn formula_for(instance: &Instance) -> Result<InvariantReport, FormulaError> {
    match instance {
        Instance::Fan(spec) => Ok(fan_report(spec)),
        Instance::Composite(c) => composite_report(c.op, &c.left, &c.right),
        Instance::Complete(n) => Ok(fan_report(&FanGraphSpec::complete(*n)?)),
        Instance::Path(n) => {
            let (depth, reg) = path_invariants(*n)?;
            let mut r = InvariantReport::formula();
            r.depth = Some(depth);
            r.reg = Some(reg);
            Ok(r)
        }
    }
}

/// Compares the invariants both reports carry.
pub fn reports_agree(formula: &InvariantReport, oracle: &InvariantReport) -> bool {
    let agree = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(x), Some(y)) => x == y,
        _ => true,
    };
    agree(formula.dim, oracle.dim)
        && agree(formula.depth, oracle.depth)
        && agree(formula.reg, oracle.reg)
}

pub fn verify_instance(
    id: String,
    instance: &Instance,
    options: &CampaignOptions,
) -> Result<VerificationRecord, OracleError> {
    let spec = instance.spec_json();
    let graph = instance.graph();

    let start = Instant::now();
    let formula = formula_for(instance);
    let formula_us = start.elapsed().as_micros() as u64;

    let start = Instant::now();
    let oracle = graph_invariants(&graph, options.field)?;
    let mut oracle_report = oracle.report();
    oracle_report.nu = Some(graph.induced_matching_number());
    let oracle_us = start.elapsed().as_micros() as u64;

    let lower_bound = match instance {
        Instance::Composite(c) if c.op == Gluing::Circ => {
            Some(oracle.depth + 2 >= fan_depth(&c.left.spec) + fan_depth(&c.right.spec))
        }
        _ => None,
    };

    let (verdict, precondition, reason) = match &formula {
        Ok(f) if reports_agree(f, &oracle_report) && lower_bound != Some(false) => {
            (Verdict::Match, None, None)
        }
        Ok(_) => (Verdict::Mismatch, None, None),
        Err(e) => (
            Verdict::FormulaInapplicable,
            Some(e.precondition().to_owned()),
            Some(e.to_string()),
        ),
    };

    Ok(VerificationRecord {
        id,
        digest: digest(&spec),
        spec,
        vertices: graph.vertex_count(),
        formula: formula.as_ref().ok().map(ReportDoc::from_report),
        oracle: ReportDoc::from_report(&oracle_report),
        verdict,
        precondition,
        reason,
        lower_bound,
        timing: options.timing.then_some(Timing {
            formula_us,
            oracle_us,
        }),
    })
}

pub fn summarize(
    config: &GeneratorConfig,
    options: &CampaignOptions,
    records: &[VerificationRecord],
) -> Summary {
    let mut counts = BTreeMap::new();
    let mut preconditions = BTreeMap::new();
    for r in records {
        *counts.entry(r.verdict).or_insert(0) += 1;
        if let Some(p) = &r.precondition {
            *preconditions.entry(p.clone()).or_insert(0) += 1;
        }
    }
    Summary {
        family: config.family.to_string(),
        max_vertices: config.max_vertices,
        samples: config.samples,
        seed: config.seed,
        field: options.field.to_string(),
        total: records.len(),
        counts,
        preconditions,
    }
}

/// Verifies every generated instance. Instances run in parallel; records
/// come back in generation order.
pub fn run_campaign(
    config: &GeneratorConfig,
    options: &CampaignOptions,
) -> Result<(Vec<VerificationRecord>, Summary), OracleError> {
    let instances = generate_instances(config);
    let records = instances
        .par_iter()
        .enumerate()
        .map(|(i, inst)| verify_instance(format!("{}-{:06}", config.family, i + 1), inst, options))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(config, options, &records);
    Ok((records, summary))
}

/// One JSON line per record followed by a `{"summary": ...}` line.
pub fn write_jsonl<W: Write>(
    mut out: W,
    records: &[VerificationRecord],
    summary: &Summary,
) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut out, &serde_json::json!({ "summary": summary }))?;
    out.write_all(b"\n")?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Family;

    fn config(family: Family, max_vertices: usize, samples: usize) -> GeneratorConfig {
        GeneratorConfig {
            family,
            max_vertices,
            samples,
            seed: 11,
        }
    }

    #[test]
    fn paths_all_match() {
        let (records, summary) =
            run_campaign(&config(Family::Paths, 12, 0), &CampaignOptions::default()).unwrap();
        assert_eq!(records.len(), 11);
        assert_eq!(summary.count(Verdict::Match), 11);
        assert_eq!(records[0].id, "paths-000001");
        assert_eq!(records[2].spec, serde_json::json!({ "path": 4 }));
    }

    #[test]
    fn summary_counts_cover_records() {
        let options = CampaignOptions {
            field: Field::Rationals,
            timing: true,
        };
        let (records, summary) = run_campaign(&config(Family::Circ, 11, 30), &options).unwrap();
        assert_eq!(summary.total, records.len());
        assert_eq!(summary.counts.values().sum::<usize>(), records.len());
        assert_eq!(summary.count(Verdict::Mismatch), 0);
        assert_eq!(summary.field, "Q");
        for r in &records {
            assert!(r.timing.is_some());
            assert_eq!(r.lower_bound, Some(true));
            assert_eq!(
                r.verdict == Verdict::FormulaInapplicable,
                r.precondition.is_some()
            );
        }
    }

    #[test]
    fn agreement_ignores_missing_fields() {
        let mut f = InvariantReport::formula();
        f.depth = Some(2);
        let o = InvariantReport::oracle(2, 2, 1);
        assert!(reports_agree(&f, &o));
        f.reg = Some(2);
        assert!(!reports_agree(&f, &o));
    }

    #[test]
    fn digest_is_sha256_of_compact_json() {
        let spec = serde_json::json!({ "path": 4 });
        assert_eq!(digest(&spec), hex::encode(Sha256::digest(br#"{"path":4}"#)));
        assert_eq!(digest(&spec).len(), 64);
    }

    #[test]
    fn jsonl_layout() {
        let c = config(Family::Completes, 4, 0);
        let options = CampaignOptions::default();
        let (records, summary) = run_campaign(&c, &options).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &records, &summary).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[3].starts_with(r#"{"summary":"#));
        assert!(lines[0].contains(r#""verdict":"match""#));
        assert!(!lines[0].contains("timing"));
    }
}
