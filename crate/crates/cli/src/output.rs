use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use kninterval::intervals::{GapReport, NkResult};
use kninterval::ramanujan::Kind;
use kninterval::Ratio;

use crate::args::Format;

/// Anything the CLI prints: JSON through serde, plus flat rows for b-file
/// and CSV.
pub trait Tabular: Serialize {
    fn csv_header(&self) -> &'static str;
    fn csv_rows(&self) -> Vec<String>;
    /// `(index, value)` pairs.
    fn bfile_rows(&self) -> Vec<(u64, u64)>;
}

pub fn emit<T: Tabular>(report: &T, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Bfile => {
            for (i, v) in report.bfile_rows() {
                writeln!(out, "{i} {v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", report.csv_header())?;
            for row in report.csv_rows() {
                writeln!(out, "{row}")?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
    }
    out.flush()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn indexed(terms: &[u64]) -> Vec<(u64, u64)> {
    terms
        .iter()
        .enumerate()
        .map(|(i, &t)| (i as u64 + 1, t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub kind: Kind,
    pub v: Ratio,
    pub terms: Vec<u64>,
}

impl Tabular for SequenceReport {
    fn csv_header(&self) -> &'static str {
        "m,value"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.bfile_rows()
            .iter()
            .map(|(m, x)| format!("{m},{x}"))
            .collect()
    }

    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        indexed(&self.terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NkReport {
    pub k: u64,
    pub closed: bool,
    pub terms: Vec<NkResult>,
}

impl Tabular for NkReport {
    fn csv_header(&self) -> &'static str {
        "m,value,method"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|r| {
                let method = serde_json::to_value(r.method).expect("enum serializes");
                format!("{},{},{}", r.m, r.value, method.as_str().unwrap_or_default())
            })
            .collect()
    }

    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        self.terms.iter().map(|r| (r.m, r.value)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapsReport {
    pub k_min: u64,
    pub k_max: u64,
    pub n_max: u64,
    pub reports: Vec<GapReport>,
}

impl Tabular for GapsReport {
    fn csv_header(&self) -> &'static str {
        "k,a,outcome"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.reports
            .iter()
            .map(|r| {
                let a = r.a_value().map(|a| a.to_string()).unwrap_or_default();
                let outcome = serde_json::to_value(r.outcome).expect("enum serializes");
                format!("{},{a},{}", r.k, outcome["type"].as_str().unwrap_or_default())
            })
            .collect()
    }

    /// Anomalies have no a(k) and are left out.
    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        self.reports
            .iter()
            .filter_map(|r| r.a_value().map(|a| (r.k, a)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub modulus: u64,
    pub residue: u64,
    pub v: Ratio,
    /// Set when the terms are N_k^(P)(m) rather than R_v^(P)(m).
    pub nk: Option<u64>,
    pub x0: u64,
    pub step: Ratio,
    pub capacity: u64,
    pub terms: Vec<u64>,
}

impl Tabular for ResidueReport {
    fn csv_header(&self) -> &'static str {
        "m,value"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.bfile_rows()
            .iter()
            .map(|(m, x)| format!("{m},{x}"))
            .collect()
    }

    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        indexed(&self.terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub k: u64,
    pub v: Ratio,
    pub x0: u64,
    pub step: Ratio,
    pub capacity: u64,
}

impl Tabular for CapacityReport {
    fn csv_header(&self) -> &'static str {
        "k,capacity"
    }

    fn csv_rows(&self) -> Vec<String> {
        vec![format!("{},{}", self.k, self.capacity)]
    }

    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        vec![(self.k, self.capacity)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Tabular for VerifyReport {
    fn csv_header(&self) -> &'static str {
        "check,passed,detail"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{},{},{}", quote(&c.name), c.passed, quote(&c.detail)))
            .collect()
    }

    /// 1 for a passing check, 0 for a failing one.
    fn bfile_rows(&self) -> Vec<(u64, u64)> {
        self.checks
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u64 + 1, c.passed as u64))
            .collect()
    }
}
