//! Report entries and their text and JSON renderings.

use std::str::FromStr;

use serde::Serialize;

use super::cases::CaseId;
use crate::error::{parse_error, Error};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub case: String,
    pub constraint: String,
    pub weight: String,
    pub computed: String,
    pub expected: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(parse_error("format", s, "expected text or json")),
        }
    }
}

fn case_rank(case: &str) -> usize {
    let head = case.split_whitespace().next().unwrap_or(case);
    CaseId::ALL
        .iter()
        .position(|c| c.as_str() == head)
        .unwrap_or(CaseId::ALL.len())
}

/// Stable sort by case id; entries of one case keep their generation order.
pub fn sort_entries(entries: &mut [ReportEntry]) {
    entries.sort_by(|a, b| {
        (case_rank(&a.case), &a.case).cmp(&(case_rank(&b.case), &b.case))
    });
}

/// Zeroes the timings so that repeated runs compare byte for byte.
pub fn strip_timing(entries: &mut [ReportEntry]) {
    for e in entries {
        e.elapsed_ms = 0;
    }
}

/// 1 if any entry failed to match, else 0.
pub fn exit_code(entries: &[ReportEntry]) -> i32 {
    i32::from(entries.iter().any(|e| !e.matched))
}

pub fn emit_report(entries: &[ReportEntry], format: Format) -> String {
    match format {
        Format::Json => entries
            .iter()
            .map(|e| serde_json::to_string(e).expect("entries serialize") + "\n")
            .collect(),
        Format::Text => text_table(entries),
    }
}

/// Longest cell shown in the text table; JSON output is never clipped.
const CELL_LIMIT: usize = 72;

fn clip(cell: &str) -> String {
    if cell.chars().count() <= CELL_LIMIT {
        cell.to_string()
    } else {
        let head: String = cell.chars().take(CELL_LIMIT - 1).collect();
        head + "…"
    }
}

fn text_table(entries: &[ReportEntry]) -> String {
    let header = ["case", "constraint", "weight", "computed", "expected", "match", "ms"];
    let rows: Vec<[String; 7]> = entries
        .iter()
        .map(|e| {
            [
                e.case.clone(),
                e.constraint.clone(),
                e.weight.clone(),
                clip(&e.computed),
                clip(&e.expected),
                if e.matched { "yes" } else { "NO" }.to_string(),
                e.elapsed_ms.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    let mismatches: Vec<&ReportEntry> = entries.iter().filter(|e| !e.matched).collect();
    for e in &mismatches {
        out.push_str(&format!(
            "mismatch: {} for {} at weight {}: computed {}, expected {}\n",
            e.case, e.constraint, e.weight, e.computed, e.expected
        ));
    }
    out.push_str(&format!(
        "{} entries, {} mismatches\n",
        entries.len(),
        mismatches.len()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(case: &str, matched: bool) -> ReportEntry {
        ReportEntry {
            case: case.into(),
            constraint: "xy - 1".into(),
            weight: "0".into(),
            computed: "z0".into(),
            expected: "z0".into(),
            matched,
            seed: None,
            elapsed_ms: 3,
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&[]), 0);
        assert_eq!(exit_code(&[entry("i", true)]), 0);
        assert_eq!(exit_code(&[entry("i", true), entry("ii", false)]), 1);
    }

    #[test]
    fn rendering() {
        let text = emit_report(&[], Format::Text);
        assert!(text.starts_with("case"));
        assert!(text.ends_with("0 entries, 0 mismatches\n"));
        let text = emit_report(&[entry("v", false)], Format::Text);
        assert!(text.contains("mismatch: v for xy - 1"));
        let json = emit_report(&[entry("v", true)], Format::Json);
        let value: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        assert_eq!(value["match"], true);
        assert_eq!(value["seed"], serde_json::Value::Null);
        assert_eq!(emit_report(&[], Format::Json), "");
    }

    #[test]
    fn ordering_is_by_case() {
        let mut v = vec![entry("viii", true), entry("C1", true), entry("W-a0", true), entry("ii", true)];
        sort_entries(&mut v);
        let order: Vec<&str> = v.iter().map(|e| e.case.as_str()).collect();
        assert_eq!(order, ["C1", "ii", "viii", "W-a0"]);
        strip_timing(&mut v);
        assert!(v.iter().all(|e| e.elapsed_ms == 0));
    }
}
