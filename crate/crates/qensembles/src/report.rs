//! Report assembly: audit entries, JSON and CSV rendering, output paths.
//!
//! Every comparison the library can run is summarised as an [`AuditEntry`]
//! with a three-way status: `exact` for identities that hold on the nose,
//! `exact_up_to_monomial` when the two sides differ by one recorded
//! monomial in the base variable (a bookkeeping convention, not an
//! error), and `mismatch` for a genuine structural deviation, which
//! always carries a witness. Reports serialise deterministically: entries
//! sorted by identity, JSON keys sorted, canonical rational strings.

use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};

use crate::asymptotics::ScalingProbe;

/// Outcome of one audited identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditStatus {
    Exact,
    ExactUpToMonomial,
    Mismatch,
}

impl AuditStatus {
    pub fn label(self) -> &'static str {
        match self {
            AuditStatus::Exact => "exact",
            AuditStatus::ExactUpToMonomial => "exact_up_to_monomial",
            AuditStatus::Mismatch => "mismatch",
        }
    }
}

/// One audited identity: what was compared, over which range, and how it
/// came out. `exponent` records the monomial factor for
/// `exact_up_to_monomial` entries; `witness` holds a concrete instance of
/// any deviation; `note` carries context that the status alone misses.
#[derive(Clone, Debug)]
pub struct AuditEntry {
    pub identity: String,
    pub status: AuditStatus,
    pub range: String,
    pub exponent: Option<String>,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl AuditEntry {
    pub fn exact(identity: &str, range: &str) -> Self {
        AuditEntry {
            identity: identity.to_string(),
            status: AuditStatus::Exact,
            range: range.to_string(),
            exponent: None,
            witness: None,
            note: None,
        }
    }

    pub fn monomial(identity: &str, range: &str, exponent: &str) -> Self {
        AuditEntry {
            identity: identity.to_string(),
            status: AuditStatus::ExactUpToMonomial,
            range: range.to_string(),
            exponent: Some(exponent.to_string()),
            witness: None,
            note: None,
        }
    }

    pub fn mismatch(identity: &str, range: &str, witness: &str) -> Self {
        AuditEntry {
            identity: identity.to_string(),
            status: AuditStatus::Mismatch,
            range: range.to_string(),
            exponent: None,
            witness: Some(witness.to_string()),
            note: None,
        }
    }

    pub fn with_witness(mut self, witness: &str) -> Self {
        self.witness = Some(witness.to_string());
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// A full identity-audit run.
#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn new(mut entries: Vec<AuditEntry>) -> Self {
        entries.sort_by(|a, b| a.identity.cmp(&b.identity));
        AuditReport { entries }
    }

    pub fn has_mismatch(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.status == AuditStatus::Mismatch)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for e in &self.entries {
            match e.status {
                AuditStatus::Exact => c.0 += 1,
                AuditStatus::ExactUpToMonomial => c.1 += 1,
                AuditStatus::Mismatch => c.2 += 1,
            }
        }
        c
    }

    /// Deterministic JSON: schema marker, entries sorted by identity,
    /// keys sorted within each object.
    pub fn to_json(&self) -> String {
        let mut entries: Vec<&AuditEntry> = self.entries.iter().collect();
        entries.sort_by(|a, b| a.identity.cmp(&b.identity));
        let items: Vec<Value> = entries
            .iter()
            .map(|e| {
                let mut m = Map::new();
                m.insert("identity".into(), json!(e.identity));
                m.insert("status".into(), json!(e.status.label()));
                m.insert("range".into(), json!(e.range));
                if let Some(x) = &e.exponent {
                    m.insert("exponent".into(), json!(x));
                }
                if let Some(w) = &e.witness {
                    m.insert("witness".into(), json!(w));
                }
                if let Some(n) = &e.note {
                    m.insert("note".into(), json!(n));
                }
                Value::Object(m)
            })
            .collect();
        let mut top = Map::new();
        top.insert("schema".into(), json!(1));
        top.insert("entries".into(), Value::Array(items));
        serde_json::to_string_pretty(&Value::Object(top)).expect("serializable")
    }
}

/// One row of an exact moment table.
#[derive(Clone, Debug)]
pub struct MomentRow {
    pub ensemble: String,
    pub k: u64,
    pub n: usize,
    pub value: String,
}

/// CSV with the fixed header `ensemble,k,N,value`.
pub fn moment_csv(rows: &[MomentRow]) -> String {
    let mut out = String::from("ensemble,k,N,value\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.ensemble, r.k, r.n, r.value));
    }
    out
}

/// CSV with the fixed header `ensemble,k,lambda,N,value`: one row per
/// probed size, then summary rows carrying the extrapolated limit and
/// the closed-form target in the N column.
pub fn probe_csv(probe: &ScalingProbe, limit: f64, target: f64) -> String {
    let mut out = String::from("ensemble,k,lambda,N,value\n");
    let name = probe.ensemble.name();
    for (n, v) in probe.n_list.iter().zip(&probe.values) {
        out.push_str(&format!("{},{},{},{},{}\n", name, probe.k, probe.lambda, n, v));
    }
    out.push_str(&format!(
        "{},{},{},limit,{}\n",
        name, probe.k, probe.lambda, limit
    ));
    out.push_str(&format!(
        "{},{},{},target,{}\n",
        name, probe.k, probe.lambda, target
    ));
    out
}

/// Two-column whitespace-separated text, one `x value` pair per line.
pub fn plot_data(pairs: &[(f64, f64)]) -> String {
    let mut out = String::new();
    for (x, y) in pairs {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}

/// Directory artifacts are written to: an explicit path wins, then the
/// `QENSEMBLES_OUT_DIR` environment variable, then the working directory.
pub fn output_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(env_dir) = std::env::var("QENSEMBLES_OUT_DIR") {
        if !env_dir.is_empty() {
            return PathBuf::from(env_dir);
        }
    }
    PathBuf::from(".")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::Ensemble;

    fn sample_report() -> AuditReport {
        AuditReport::new(vec![
            AuditEntry::mismatch("zeta", "n = 1", "sign of the second term"),
            AuditEntry::exact("alpha", "k <= 4"),
            AuditEntry::monomial("mid", "k <= 3", "s^k").with_witness("k=1: s"),
        ])
    }

    #[test]
    fn json_is_sorted_and_versioned() {
        let j = sample_report().to_json();
        let v: Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["schema"], 1);
        let ids: Vec<&str> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["identity"].as_str().unwrap())
            .collect();
        assert_eq!(ids, ["alpha", "mid", "zeta"]);
        let alpha = &v["entries"][0];
        assert_eq!(alpha["status"], "exact");
        assert!(alpha.get("exponent").is_none());
        let mid = &v["entries"][1];
        assert_eq!(mid["exponent"], "s^k");
        assert_eq!(mid["witness"], "k=1: s");
        let keys: Vec<&str> = v["entries"][1]
            .as_object()
            .unwrap()
            .keys()
            .map(|s| s.as_str())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn json_is_deterministic() {
        assert_eq!(sample_report().to_json(), sample_report().to_json());
    }

    #[test]
    fn report_counts_and_mismatch_flag() {
        let r = sample_report();
        assert_eq!(r.counts(), (1, 1, 1));
        assert!(r.has_mismatch());
        let clean = AuditReport::new(vec![AuditEntry::exact("a", "r")]);
        assert!(!clean.has_mismatch());
    }

    #[test]
    fn moment_csv_has_fixed_header() {
        let rows = vec![MomentRow {
            ensemble: "discrete-q-hermite".into(),
            k: 2,
            n: 1,
            value: "1 - q".into(),
        }];
        let csv = moment_csv(&rows);
        assert_eq!(csv, "ensemble,k,N,value\ndiscrete-q-hermite,2,1,1 - q\n");
    }

    #[test]
    fn probe_csv_appends_summary_rows() {
        let probe = ScalingProbe::collect(Ensemble::StieltjesWigert, 1, 1.0, &[50, 100]).unwrap();
        let csv = probe_csv(&probe, 1.718, std::f64::consts::E - 1.0);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "ensemble,k,lambda,N,value");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("stieltjes-wigert,1,1,50,"));
        assert!(lines[3].contains(",limit,"));
        assert!(lines[4].contains(",target,"));
    }

    #[test]
    fn plot_data_is_two_columns() {
        let s = plot_data(&[(0.5, 0.25), (1.0, 0.5)]);
        assert_eq!(s, "0.5 0.25\n1 0.5\n");
    }

    #[test]
    fn output_dir_resolution_order() {
        let explicit = output_dir(Some(Path::new("/tmp/x")));
        assert_eq!(explicit, PathBuf::from("/tmp/x"));
        let fallback = output_dir(None);
        assert!(fallback == PathBuf::from(".") || fallback.is_absolute() || !fallback.as_os_str().is_empty());
    }
}
