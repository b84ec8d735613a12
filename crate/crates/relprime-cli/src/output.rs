//! Record types and the plain/json/csv emitters.
//!
//! Every command reports through [`OutputRecord`]s with a fixed field
//! vocabulary (`command, l1, m1, l2, m2, n, k, result, matched`) so that
//! json lines stay uniform and csv has a stable header. Results are decimal
//! strings of unbounded length; csv always quotes them so spreadsheets
//! cannot mangle a 78-digit count into a float.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use relprime::phi::{DivisorTerm, TermArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-oriented lines.
    Plain,
    /// One JSON object per line.
    Json,
    /// Header row plus one row per record.
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRecord>>,
}

/// One divisor term of a traced evaluation: `term = mu * 2^exponent` or
/// `term = mu * C(binomial[0], binomial[1])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub d: u64,
    pub mu: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub binomial: Option<[u64; 2]>,
    pub term: String,
}

impl TraceRecord {
    pub fn from_term(term: &DivisorTerm) -> TraceRecord {
        let (exponent, binomial) = match term.arg {
            TermArg::Pow2 { exponent } => (Some(exponent), None),
            TermArg::Binomial { top, k } => (None, Some([top, k])),
        };
        TraceRecord { d: term.d, mu: term.mu, exponent, binomial, term: term.term.to_string() }
    }

    fn plain_line(&self) -> String {
        let weight = match (self.exponent, self.binomial) {
            (Some(e), _) => format!("2^{e}"),
            (_, Some([top, k])) => format!("C({top},{k})"),
            _ => String::new(),
        };
        format!("d={} mu={} weight={} term={}", self.d, self.mu, weight, self.term)
    }
}

/// Trailing line of the streaming commands (`sweep`, `verify`,
/// `invert-demo`): totals plus the sampling seed when one was used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub command: String,
    pub checked: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

pub const CSV_HEADER: &str = "command,l1,m1,l2,m2,n,k,result,matched";

fn csv_opt(v: Option<u64>) -> String {
    v.map_or(String::new(), |v| v.to_string())
}

impl OutputRecord {
    pub fn new(command: impl Into<String>, result: impl Into<String>) -> OutputRecord {
        OutputRecord { command: command.into(), result: result.into(), ..Default::default() }
    }

    /// The canonical csv row; the result column is always quoted.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},\"{}\",{}",
            self.command,
            csv_opt(self.l1),
            csv_opt(self.m1),
            csv_opt(self.l2),
            csv_opt(self.m2),
            csv_opt(self.n),
            csv_opt(self.k),
            self.result,
            self.matched.map_or(String::new(), |m| m.to_string()),
        )
    }

    /// Generic one-line rendering for grid records in plain format.
    pub fn plain_line(&self) -> String {
        let mut line = self.command.clone();
        for (name, v) in [
            ("l1", self.l1),
            ("m1", self.m1),
            ("l2", self.l2),
            ("m2", self.m2),
            ("n", self.n),
            ("k", self.k),
            ("seed", self.seed),
        ] {
            if let Some(v) = v {
                line.push_str(&format!(" {name}={v}"));
            }
        }
        line.push_str(&format!(" result={}", self.result));
        if let Some(m) = self.matched {
            line.push_str(&format!(" matched={m}"));
        }
        line
    }
}

/// Where a record stream goes and how it is rendered.
pub struct Emitter {
    format: Format,
    header_written: bool,
    /// Plain mode for the value commands prints the bare result.
    pub bare_result: bool,
}

impl Emitter {
    pub fn new(format: Format) -> Emitter {
        Emitter { format, header_written: false, bare_result: false }
    }

    pub fn record(&mut self, record: &OutputRecord) {
        match self.format {
            Format::Plain => {
                if let Some(trace) = &record.trace {
                    for t in trace {
                        println!("{}", t.plain_line());
                    }
                }
                if self.bare_result {
                    println!("{}", record.result);
                } else {
                    println!("{}", record.plain_line());
                }
            }
            Format::Json => {
                println!("{}", serde_json::to_string(record).expect("record serializes"));
            }
            Format::Csv => {
                if !self.header_written {
                    println!("{CSV_HEADER}");
                    self.header_written = true;
                }
                println!("{}", record.csv_row());
            }
        }
    }

    pub fn summary(&mut self, summary: &RunSummary) {
        match self.format {
            Format::Plain => {
                let seed = summary
                    .seed
                    .map_or(String::new(), |s| format!(" (seed {s})"));
                println!("{} checked, {} failed{seed}", summary.checked, summary.failed);
            }
            Format::Json => {
                println!("{}", serde_json::to_string(summary).expect("summary serializes"));
            }
            // The csv stream stays homogeneous; totals go to stderr.
            Format::Csv => {
                eprintln!("{} checked, {} failed", summary.checked, summary.failed);
            }
        }
    }
}
