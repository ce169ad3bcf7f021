//! JSON documents: the single-group analysis document and census JSON lines.
//!
//! Both carry `"schema": 1`. Fields unknown to this version are ignored when
//! reading. Struct fields serialize in declaration order and maps are
//! ordered, so re-serializing a document is byte-identical.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::harness::{Analysis, CensusEntry, CensusOutcome, ClaimId, ClaimStatus, GroupResult};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub order: usize,
    pub elements: Vec<usize>,
    pub deg1: usize,
    pub deg2: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema: u32,
    pub label: String,
    pub order: usize,
    /// Number of subgroups of each order.
    pub subgroup_counts: BTreeMap<usize, usize>,
    pub alpha: BTreeMap<u64, usize>,
    pub alpha_total: usize,
    pub degree_sequence: Vec<usize>,
    pub vertices: Vec<VertexDoc>,
    pub covers: Vec<(usize, usize)>,
    pub regular: bool,
    pub predicted: bool,
    pub witness: Option<(usize, usize)>,
    pub claims: BTreeMap<ClaimId, ClaimStatus>,
}

impl AnalysisDocument {
    pub fn from_analysis(a: &Analysis) -> Self {
        let lat = &a.lattice;
        let mut subgroup_counts = BTreeMap::new();
        for h in lat.vertices() {
            *subgroup_counts.entry(h.order()).or_insert(0) += 1;
        }
        let vertices = lat
            .vertices()
            .iter()
            .zip(lat.degrees())
            .map(|(h, d)| VertexDoc {
                order: h.order(),
                elements: h.elements(),
                deg1: d.deg1,
                deg2: d.deg2,
                delta: d.delta,
            })
            .collect();
        AnalysisDocument {
            schema: SCHEMA_VERSION,
            label: a.group.label().to_string(),
            order: a.group.order(),
            subgroup_counts,
            alpha: a.report.alpha.by_prime.clone(),
            alpha_total: a.report.alpha.total,
            degree_sequence: a.report.degree_sequence.clone(),
            vertices,
            covers: lat.covers().to_vec(),
            regular: a.report.is_regular,
            predicted: a.predicted,
            witness: a.report.witness,
            claims: a.claims().claims,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RecordOutcome {
    Analyzed(GroupResult),
    Skipped { reason: String },
    Error { reason: String },
}

/// One census JSON line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema: u32,
    pub label: String,
    pub order: Option<usize>,
    #[serde(flatten)]
    pub outcome: RecordOutcome,
}

impl From<&CensusEntry> for CensusRecord {
    fn from(e: &CensusEntry) -> Self {
        let outcome = match &e.outcome {
            CensusOutcome::Analyzed(r) => RecordOutcome::Analyzed(r.clone()),
            CensusOutcome::Skipped(reason) => RecordOutcome::Skipped { reason: reason.clone() },
            CensusOutcome::Error(reason) => RecordOutcome::Error { reason: reason.clone() },
        };
        CensusRecord {
            schema: SCHEMA_VERSION,
            label: e.label.clone(),
            order: e.order,
            outcome,
        }
    }
}

impl CensusRecord {
    pub fn to_line(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_line(line: &str) -> Result<Self> {
        Ok(serde_json::from_str(line)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::census_entry;
    use crate::{Group, GroupSpec, Limits};

    fn doc(spec: &str) -> AnalysisDocument {
        let g: Group = GroupSpec::parse(spec).unwrap().build(&Limits::default()).unwrap();
        AnalysisDocument::from_analysis(&Analysis::run(g, &Limits::default()).unwrap())
    }

    #[test]
    fn c6_round_trip() {
        let d = doc("C6");
        assert_eq!(d.subgroup_counts, BTreeMap::from([(1, 1), (2, 1), (3, 1), (6, 1)]));
        assert_eq!(d.alpha_total, 2);
        assert!(d.regular && d.predicted);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c6.json");
        d.write_json(&path).unwrap();
        let back = AnalysisDocument::read_json(&path).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json().unwrap(), fs::read_to_string(&path).unwrap());
    }

    #[test]
    fn unknown_fields_are_ignored() {
        let d = doc("S3");
        let mut v: serde_json::Value = serde_json::from_str(&d.to_json().unwrap()).unwrap();
        v["future_field"] = serde_json::json!({"x": 1});
        let back = AnalysisDocument::from_json(&v.to_string()).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.witness, Some((0, 1)));
    }

    #[test]
    fn claim_statuses_serialize_readably() {
        let d = doc("S3");
        let json = d.to_json().unwrap();
        assert!(json.contains("\"claim1\": \"not-applicable\""));
        let d = doc("C30");
        assert!(d.to_json().unwrap().contains("\"claim5\": \"holds\""));
    }

    #[test]
    fn census_record_lines() {
        let limits = Limits::default();
        for spec in ["C6", "C300"] {
            let entry = census_entry(&GroupSpec::parse(spec).unwrap(), &limits);
            let rec = CensusRecord::from(&entry);
            let line = rec.to_line().unwrap();
            assert!(line.starts_with("{\"schema\":1,"));
            assert_eq!(CensusRecord::from_line(&line).unwrap(), rec);
        }
        let line = CensusRecord::from(&census_entry(&GroupSpec::parse("C6").unwrap(), &limits))
            .to_line()
            .unwrap();
        assert!(line.contains("\"status\":\"analyzed\""));
        assert!(line.contains("\"degree_sequence\":[2,2,2,2]"));
    }
}
