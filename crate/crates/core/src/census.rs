//! Knot-census ingestion, classification, and reporting.
//!
//! Input is a KnotInfo-style CSV export (UTF-8, header row, comma
//! separated).  Each row is validated on ingest: `|Δ(−1)|` must equal the
//! determinant column, `Δ(1)` must be `±1`, and a provided Seifert matrix
//! must reproduce `Δ` up to units.  Rows failing validation become warnings
//! rather than records.
//!
//! Classification runs a configurable ladder of rules, first success wins.
//! The default order follows the chain of published results: two-bridge,
//! fibered, genus one with nontrivial Δ, square-free determinant,
//! square-free invariant factors, the two configured name lists, and
//! finally the bad-factor detector for knots whose branched double cover
//! carries an L-space certificate.  Knots that reach the detector with a
//! bad factor present are reported as exceptions; knots with no L-space
//! certificate are inapplicable.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::io::Read;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::linalg::IntMatrix;
use crate::obstruction::{detect_bad_factor, det_has_square_factor, invariant_factors_square_free};
use crate::seifert::SeifertMatrix;

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing mandatory column '{0}'")]
    MissingColumn(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Maps logical fields to CSV header names.  Defaults follow the KnotInfo
/// export headers, with `lspace_cover` as the certificate column for the
/// branched double cover.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ColumnMap {
    pub name: String,
    pub crossings: String,
    pub alternating: String,
    pub delta: String,
    pub determinant: String,
    pub genus: String,
    pub bridge_index: String,
    pub fibered: String,
    pub seifert: String,
    pub lspace: String,
}

impl Default for ColumnMap {
    fn default() -> Self {
        Self {
            name: "name".into(),
            crossings: "crossing_number".into(),
            alternating: "alternating".into(),
            delta: "alexander_polynomial".into(),
            determinant: "determinant".into(),
            genus: "three_genus".into(),
            bridge_index: "bridge_index".into(),
            fibered: "fibered".into(),
            seifert: "seifert_matrix".into(),
            lspace: "lspace_cover".into(),
        }
    }
}

/// Classification rules, in the ladder's default order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    /// Bridge index 2.
    TwoBridge,
    /// Fibered knot.
    Fibered,
    /// Genus one with nontrivial Alexander polynomial.
    GenusOne,
    /// L-space cover and square-free determinant.
    DetSquareFree,
    /// L-space cover, Seifert matrix present, and square-free invariant
    /// factors of the double-cover homology.
    InvariantFactorsSquareFree,
    /// Name appears in the configured special-alternating list.
    SpecialAlternatingList,
    /// Name appears in the configured auxiliary list of knots settled by
    /// other published obstructions.
    KnownProofList,
    /// L-space cover and the bad-factor detector reports no bad factor.
    BadFactorAbsent,
}

impl RuleId {
    pub const DEFAULT_LADDER: [RuleId; 8] = [
        RuleId::TwoBridge,
        RuleId::Fibered,
        RuleId::GenusOne,
        RuleId::DetSquareFree,
        RuleId::InvariantFactorsSquareFree,
        RuleId::SpecialAlternatingList,
        RuleId::KnownProofList,
        RuleId::BadFactorAbsent,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::TwoBridge => "two_bridge",
            RuleId::Fibered => "fibered",
            RuleId::GenusOne => "genus_one",
            RuleId::DetSquareFree => "det_square_free",
            RuleId::InvariantFactorsSquareFree => "invariant_factors_square_free",
            RuleId::SpecialAlternatingList => "special_alternating_list",
            RuleId::KnownProofList => "known_proof_list",
            RuleId::BadFactorAbsent => "bad_factor_absent",
        }
    }
}

/// Declarative census configuration: column map, rule ladder (order
/// matters, omission disables), and the two auxiliary name lists.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CensusConfig {
    pub columns: ColumnMap,
    pub ladder: Vec<RuleId>,
    pub special_alternating: BTreeSet<String>,
    pub known_proofs: BTreeSet<String>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            columns: ColumnMap::default(),
            ladder: RuleId::DEFAULT_LADDER.to_vec(),
            special_alternating: BTreeSet::new(),
            known_proofs: BTreeSet::new(),
        }
    }
}

impl CensusConfig {
    pub fn from_toml(text: &str) -> Result<Self, CensusError> {
        toml::from_str(text).map_err(|e| CensusError::Config(e.to_string()))
    }
}

/// One validated census row.
#[derive(Debug, Clone)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: u32,
    pub alternating: bool,
    pub delta: LaurentPoly,
    pub determinant: BigInt,
    pub genus: u32,
    pub bridge_index: u32,
    pub fibered: bool,
    pub seifert: Option<SeifertMatrix>,
    /// Certificate that the branched double cover is an L-space:
    /// alternating knots are certified automatically, otherwise the
    /// certificate column decides; absence means unknown, never guessed.
    pub l_space: Option<bool>,
}

/// A row rejected or flagged during ingest.
#[derive(Debug, Clone, Serialize)]
pub struct DataWarning {
    pub row: usize,
    pub name: String,
    pub message: String,
}

/// Reads records from CSV bytes, enforcing the ingest invariants.
pub fn parse_catalog(
    reader: impl Read,
    config: &CensusConfig,
) -> Result<(Vec<KnotRecord>, Vec<DataWarning>), CensusError> {
    let mut csv_reader = csv::ReaderBuilder::new().flexible(false).from_reader(reader);
    let headers = csv_reader.headers()?.clone();
    let col = |name: &str| -> Result<usize, CensusError> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CensusError::MissingColumn(name.to_string()))
    };
    let c = &config.columns;
    let idx_name = col(&c.name)?;
    let idx_crossings = col(&c.crossings)?;
    let idx_alternating = col(&c.alternating)?;
    let idx_delta = col(&c.delta)?;
    let idx_det = col(&c.determinant)?;
    let idx_genus = col(&c.genus)?;
    let idx_bridge = col(&c.bridge_index)?;
    let idx_fibered = col(&c.fibered)?;
    // optional columns
    let idx_seifert = headers.iter().position(|h| h == c.seifert);
    let idx_lspace = headers.iter().position(|h| h == c.lspace);

    let mut records = Vec::new();
    let mut warnings = Vec::new();
    let mut row_no = 1usize;
    for row in csv_reader.records() {
        row_no += 1;
        let row = row?;
        let name = row.get(idx_name).unwrap_or("").trim().to_string();
        let warn = |message: String| DataWarning { row: row_no, name: name.clone(), message };

        let parse_u32 = |s: Option<&str>| s.and_then(|v| v.trim().parse::<u32>().ok());
        let Some(crossings) = parse_u32(row.get(idx_crossings)) else {
            warnings.push(warn("unparseable crossing number".into()));
            continue;
        };
        let Some(genus) = parse_u32(row.get(idx_genus)) else {
            warnings.push(warn("unparseable genus".into()));
            continue;
        };
        let Some(bridge_index) = parse_u32(row.get(idx_bridge)) else {
            warnings.push(warn("unparseable bridge index".into()));
            continue;
        };
        let delta = match LaurentPoly::parse(row.get(idx_delta).unwrap_or("").trim()) {
            Ok(p) => p,
            Err(e) => {
                warnings.push(warn(format!("unparseable Alexander polynomial: {e}")));
                continue;
            }
        };
        let Ok(determinant) = row.get(idx_det).unwrap_or("").trim().parse::<BigInt>() else {
            warnings.push(warn("unparseable determinant".into()));
            continue;
        };
        let alternating = yes_no(row.get(idx_alternating));
        let fibered = yes_no(row.get(idx_fibered));

        // ingest invariants
        if delta.eval_at_minus_one().abs() != determinant {
            warnings.push(warn(format!(
                "determinant {} does not match |Δ(-1)| = {}",
                determinant,
                delta.eval_at_minus_one().abs()
            )));
            continue;
        }
        if !delta.eval_at_one().abs().is_one() {
            warnings.push(warn(format!("Δ(1) = {} is not ±1", delta.eval_at_one())));
            continue;
        }

        let seifert = match idx_seifert.and_then(|i| row.get(i)).map(str::trim) {
            Some("") | None => None,
            Some(text) => match IntMatrix::parse(text).map_err(|e| e.to_string()).and_then(|m| {
                SeifertMatrix::new(m).map_err(|e| e.to_string())
            }) {
                Ok(sm) => match sm.alexander_polynomial() {
                    Ok(computed) if computed.associates(&delta) => Some(sm),
                    Ok(computed) => {
                        warnings.push(warn(format!(
                            "Seifert matrix gives {computed}, row says {delta}"
                        )));
                        continue;
                    }
                    Err(e) => {
                        warnings.push(warn(format!("Seifert matrix rejected: {e}")));
                        continue;
                    }
                },
                Err(e) => {
                    warnings.push(warn(format!("Seifert matrix rejected: {e}")));
                    continue;
                }
            },
        };

        let l_space = if alternating {
            Some(true)
        } else {
            match idx_lspace.and_then(|i| row.get(i)).map(str::trim) {
                Some("Y") | Some("Yes") | Some("y") => Some(true),
                _ => None,
            }
        };

        records.push(KnotRecord {
            name,
            crossings,
            alternating,
            delta,
            determinant,
            genus,
            bridge_index,
            fibered,
            seifert,
            l_space,
        });
    }
    if records.is_empty() {
        warnings.push(DataWarning { row: row_no, name: String::new(), message: "no records ingested".into() });
    }
    Ok((records, warnings))
}

fn yes_no(field: Option<&str>) -> bool {
    matches!(field.map(str::trim), Some("Y") | Some("Yes") | Some("y"))
}

/// Classification outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    /// Settled by a prior published result (the rule names which).
    ProvedPrior { rule: RuleId },
    /// L-space cover and no bad factor: settled by the Alexander-polynomial
    /// obstruction.
    ProvedByObstruction,
    /// L-space cover but a bad factor is present; the obstruction is silent.
    Exception,
    /// No L-space certificate; the obstruction does not apply.
    Inapplicable { reason: String },
}

/// Per-knot verdict with the evaluation trail (every rule tried, in order,
/// with its outcome).
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub crossings: u32,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub trail: Vec<TrailEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrailEntry {
    pub rule: RuleId,
    pub fired: bool,
}

/// Classifies one record through the configured rule ladder.
pub fn classify(record: &KnotRecord, config: &CensusConfig) -> Verdict {
    let mut trail = Vec::new();
    let lspace = record.l_space == Some(true);
    let fire = |rule: RuleId, hit: bool, trail: &mut Vec<TrailEntry>| {
        trail.push(TrailEntry { rule, fired: hit });
        hit
    };
    for &rule in &config.ladder {
        let hit = match rule {
            RuleId::TwoBridge => record.bridge_index == 2,
            RuleId::Fibered => record.fibered,
            RuleId::GenusOne => record.genus == 1 && !record.delta.is_one(),
            RuleId::DetSquareFree => lspace && !det_has_square_factor(&record.determinant),
            RuleId::InvariantFactorsSquareFree => {
                lspace
                    && record
                        .seifert
                        .as_ref()
                        .is_some_and(|v| invariant_factors_square_free(v).0)
            }
            RuleId::SpecialAlternatingList => config.special_alternating.contains(&record.name),
            RuleId::KnownProofList => config.known_proofs.contains(&record.name),
            RuleId::BadFactorAbsent => {
                if !lspace {
                    false
                } else {
                    let verdict =
                        detect_bad_factor(&record.delta).expect("census Δ is nonzero");
                    if verdict.bad_factor_exists() {
                        // reached the detector and failed: exception
                        trail.push(TrailEntry { rule, fired: false });
                        return Verdict {
                            name: record.name.clone(),
                            crossings: record.crossings,
                            status: Status::Exception,
                            witness: verdict.witness.map(|w| w.to_string()),
                            trail,
                        };
                    }
                    true
                }
            }
        };
        if fire(rule, hit, &mut trail) {
            let status = if rule == RuleId::BadFactorAbsent {
                Status::ProvedByObstruction
            } else {
                Status::ProvedPrior { rule }
            };
            return Verdict {
                name: record.name.clone(),
                crossings: record.crossings,
                status,
                witness: None,
                trail,
            };
        }
    }
    let status = if lspace {
        // ladder exhausted without the detector enabled
        Status::Exception
    } else {
        Status::Inapplicable { reason: "no L-space certificate".into() }
    };
    Verdict {
        name: record.name.clone(),
        crossings: record.crossings,
        status,
        witness: None,
        trail,
    }
}

/// Per-crossing-number aggregates.
#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct CrossingSummary {
    pub total: usize,
    pub alternating: usize,
    pub lspace_certified: usize,
    /// genus > 1, bridge index > 2, not fibered, determinant not square-free
    pub four_condition_filter: usize,
    pub no_bad_factor: usize,
    /// L-space certificate and no bad factor
    pub detector_verified: usize,
    pub exceptions: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub warnings: usize,
    pub by_crossings: BTreeMap<u32, CrossingSummary>,
    pub rule_counts: BTreeMap<String, usize>,
    pub status_counts: BTreeMap<String, usize>,
    pub no_bad_factor_total: usize,
    pub exceptions: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<DataWarning>,
}

/// Classifies every record and aggregates the summary.  Output is
/// deterministic: verdicts keep input order and all maps are ordered.
pub fn run_census(
    records: &[KnotRecord],
    warnings: Vec<DataWarning>,
    config: &CensusConfig,
) -> Report {
    let mut verdicts = Vec::with_capacity(records.len());
    let mut by_crossings: BTreeMap<u32, CrossingSummary> = BTreeMap::new();
    let mut rule_counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut status_counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut exceptions = Vec::new();
    let mut no_bad_factor_total = 0usize;

    for record in records {
        let verdict = classify(record, config);
        let slot = by_crossings.entry(record.crossings).or_default();
        slot.total += 1;
        if record.alternating {
            slot.alternating += 1;
        }
        let lspace = record.l_space == Some(true);
        if lspace {
            slot.lspace_certified += 1;
        }
        if record.genus > 1
            && record.bridge_index > 2
            && !record.fibered
            && det_has_square_factor(&record.determinant)
        {
            slot.four_condition_filter += 1;
        }
        let no_bad = !detect_bad_factor(&record.delta)
            .expect("census Δ is nonzero")
            .bad_factor_exists();
        if no_bad {
            slot.no_bad_factor += 1;
            no_bad_factor_total += 1;
            if lspace {
                slot.detector_verified += 1;
            }
        }
        match &verdict.status {
            Status::ProvedPrior { rule } => {
                *rule_counts.entry(rule.as_str().to_string()).or_default() += 1;
                *status_counts.entry("proved_prior".into()).or_default() += 1;
            }
            Status::ProvedByObstruction => {
                *rule_counts
                    .entry(RuleId::BadFactorAbsent.as_str().to_string())
                    .or_default() += 1;
                *status_counts.entry("proved_by_obstruction".into()).or_default() += 1;
            }
            Status::Exception => {
                slot.exceptions += 1;
                exceptions.push(record.name.clone());
                *status_counts.entry("exception".into()).or_default() += 1;
            }
            Status::Inapplicable { .. } => {
                *status_counts.entry("inapplicable".into()).or_default() += 1;
            }
        }
        verdicts.push(verdict);
    }
    exceptions.sort_by_key(|a| knot_name_key(a));

    Report {
        summary: Summary {
            total: records.len(),
            warnings: warnings.len(),
            by_crossings,
            rule_counts,
            status_counts,
            no_bad_factor_total,
            exceptions,
        },
        verdicts,
        warnings,
    }
}

/// Natural ordering for knot names like `10_87` or `11a_102`: crossing
/// number, then series letter, then index.
fn knot_name_key(name: &str) -> (u32, String, u64, String) {
    let bytes = name.as_bytes();
    let mut i = 0;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let crossings: u32 = name[..i].parse().unwrap_or(0);
    let rest = &name[i..];
    let series: String = rest.chars().take_while(|c| !c.is_ascii_digit()).collect();
    let tail = &rest[series.len()..];
    let mut j = 0;
    let tb = tail.as_bytes();
    while j < tb.len() && tb[j].is_ascii_digit() {
        j += 1;
    }
    let index: u64 = tail[..j].parse().unwrap_or(0);
    (crossings, series.replace('_', ""), index, tail[j..].to_string())
}

/// Report output formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

/// Renders the report with stable field order; JSON and CSV are
/// byte-deterministic for fixed inputs.
pub fn emit_report(report: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(report).expect("report serializes");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "crossings", "status", "rule", "witness"])
                .expect("csv write");
            for v in &report.verdicts {
                let (status, rule) = match &v.status {
                    Status::ProvedPrior { rule } => ("proved_prior", rule.as_str()),
                    Status::ProvedByObstruction => {
                        ("proved_by_obstruction", RuleId::BadFactorAbsent.as_str())
                    }
                    Status::Exception => ("exception", ""),
                    Status::Inapplicable { .. } => ("inapplicable", ""),
                };
                w.write_record([
                    v.name.as_str(),
                    &v.crossings.to_string(),
                    status,
                    rule,
                    v.witness.as_deref().unwrap_or(""),
                ])
                .expect("csv write");
            }
            w.into_inner().expect("csv flush")
        }
        ReportFormat::Text => render_text(report).into_bytes(),
    }
}

fn render_text(report: &Report) -> String {
    use std::fmt::Write;
    let s = &report.summary;
    let mut out = String::new();
    let _ = writeln!(out, "census report");
    let _ = writeln!(out, "  records ingested : {}", s.total);
    let _ = writeln!(out, "  data warnings    : {}", s.warnings);
    let _ = writeln!(out, "  no bad factor    : {}", s.no_bad_factor_total);
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "  {:>9} {:>6} {:>6} {:>7} {:>7} {:>7} {:>9} {:>5}",
        "crossings", "total", "alt", "lspace", "filter", "nobad", "verified", "exc"
    );
    for (cr, row) in &s.by_crossings {
        let _ = writeln!(
            out,
            "  {:>9} {:>6} {:>6} {:>7} {:>7} {:>7} {:>9} {:>5}",
            cr,
            row.total,
            row.alternating,
            row.lspace_certified,
            row.four_condition_filter,
            row.no_bad_factor,
            row.detector_verified,
            row.exceptions
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "  verdicts by rule:");
    for (rule, count) in &s.rule_counts {
        let _ = writeln!(out, "    {rule:<32} {count}");
    }
    for (status, count) in &s.status_counts {
        let _ = writeln!(out, "    status:{status:<25} {count}");
    }
    if !s.exceptions.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "  exceptions ({}):", s.exceptions.len());
        for chunk in s.exceptions.chunks(8) {
            let _ = writeln!(out, "    {}", chunk.join(", "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "name,crossing_number,alternating,three_genus,bridge_index,fibered,determinant,alexander_polynomial,seifert_matrix,quasi_alternating,positive,lspace_cover\n";

    fn config() -> CensusConfig {
        CensusConfig::default()
    }

    #[test]
    fn ingest_trefoil() {
        let csv = format!(
            "{HEADER}3_1,3,Y,1,2,Y,3,1-t+ t^2,\"[[ -1, 0], [ -1, -1]]\",Y,Y,Y\n"
        );
        let (records, warnings) = parse_catalog(csv.as_bytes(), &config()).unwrap();
        assert_eq!(records.len(), 1);
        assert!(warnings.is_empty());
        let r = &records[0];
        assert_eq!(r.name, "3_1");
        assert!(r.seifert.is_some());
        assert_eq!(r.l_space, Some(true));
        assert_eq!(r.determinant, BigInt::from(3));
    }

    #[test]
    fn ingest_rejects_determinant_mismatch() {
        let csv = format!("{HEADER}bad,3,Y,1,2,Y,5,1-t+ t^2,,Y,Y,Y\n");
        let (records, warnings) = parse_catalog(csv.as_bytes(), &config()).unwrap();
        assert!(records.is_empty());
        assert!(warnings.iter().any(|w| w.message.contains("determinant")));
    }

    #[test]
    fn ingest_empty_file() {
        let (records, warnings) = parse_catalog(HEADER.as_bytes(), &config()).unwrap();
        assert!(records.is_empty());
        assert_eq!(warnings.len(), 1);
    }

    fn record(name: &str, bridge: u32, fibered: bool, genus: u32, delta: &str, lspace: bool) -> KnotRecord {
        let delta = LaurentPoly::parse(delta).unwrap();
        KnotRecord {
            name: name.into(),
            crossings: 11,
            alternating: lspace,
            determinant: delta.eval_at_minus_one().abs(),
            delta,
            genus,
            bridge_index: bridge,
            fibered,
            seifert: None,
            l_space: if lspace { Some(true) } else { None },
        }
    }

    #[test]
    fn ladder_routing() {
        let cfg = config();
        // fibered wins regardless of Δ
        let r = record("k", 3, true, 2, "2-5t+2t^2", true);
        let v = classify(&r, &cfg);
        assert_eq!(v.status, Status::ProvedPrior { rule: RuleId::Fibered });

        let r = record("k", 2, false, 2, "2-5t+2t^2", true);
        let v = classify(&r, &cfg);
        assert_eq!(v.status, Status::ProvedPrior { rule: RuleId::TwoBridge });

        // bad factor, nothing else applies -> exception with witness
        let r = record("k", 3, false, 2, "4-20t+33t^2-20t^3+4t^4", true);
        let v = classify(&r, &cfg);
        assert_eq!(v.status, Status::Exception);
        assert!(v.witness.is_some());

        // no certificate -> inapplicable
        let r = record("k", 3, false, 2, "4-20t+33t^2-20t^3+4t^4", false);
        let v = classify(&r, &cfg);
        assert!(matches!(v.status, Status::Inapplicable { .. }));

        // determinant 9 has a square factor, but t^2-7t+1 is irreducible
        // and self-reciprocal with multiplicity one: no bad factor
        let r = record("k", 3, false, 2, "1-7t+t^2", true);
        let v = classify(&r, &cfg);
        assert_eq!(v.status, Status::ProvedByObstruction);
    }

    #[test]
    fn ladder_monotonicity() {
        // disabling a later rule never changes earlier verdicts
        let mut cfg = config();
        let r = record("k", 2, false, 2, "2-5t+2t^2", true);
        let full = classify(&r, &cfg);
        cfg.ladder.retain(|r| *r != RuleId::BadFactorAbsent);
        let trimmed = classify(&r, &cfg);
        assert_eq!(full.status, trimmed.status);
    }

    #[test]
    fn deterministic_reports() {
        let csv = format!(
            "{HEADER}3_1,3,Y,1,2,Y,3,1-t+ t^2,,Y,Y,Y\n4_1,4,Y,1,2,Y,5,1-3*t+ t^2,,Y,N,Y\n"
        );
        let cfg = config();
        let (records, warnings) = parse_catalog(csv.as_bytes(), &cfg).unwrap();
        let r1 = run_census(&records, warnings.clone(), &cfg);
        let r2 = run_census(&records, warnings, &cfg);
        assert_eq!(
            emit_report(&r1, ReportFormat::Json),
            emit_report(&r2, ReportFormat::Json)
        );
        assert_eq!(r1.summary.total, 2);
        assert_eq!(
            r1.summary.status_counts.get("proved_prior"),
            Some(&2usize)
        );
    }

    #[test]
    fn exception_ordering_is_natural() {
        assert!(knot_name_key("11a_6") < knot_name_key("11a_102"));
        assert!(knot_name_key("10_87") < knot_name_key("11a_6"));
        assert!(knot_name_key("11a_352") < knot_name_key("11n_1"));
    }
}
