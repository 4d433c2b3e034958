//! Rendering results as JSON, CSV or plain text.

use clap::ValueEnum;
use serde_json::Value;

use ribbonlab::verify::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// One result in every output format.
pub struct Rendered {
    json: Value,
    pretty: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Rendered {
    pub fn new(json: Value, pretty: String) -> Self {
        Self { json, pretty, header: Vec::new(), rows: Vec::new() }
    }

    pub fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Pretty => self.pretty.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                let bytes = w.into_inner().expect("in-memory write");
                String::from_utf8(bytes).expect("utf-8").trim_end().to_string()
            }
        }
    }
}

pub fn verify_rendered(reports: &[VerifyReport]) -> Rendered {
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(reports)
    }
    .expect("serializable");
    let mut pretty = Vec::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        pretty.push(format!(
            "{status} {:<22} {}/{} cells  ({} ms)",
            r.identity.name(),
            r.num_passed(),
            r.cells.len(),
            r.elapsed_ms
        ));
        if let Some(f) = r.first_failure() {
            pretty.push(format!("     first failure at {}", f.params));
            if let Some(c) = &f.counterexample {
                pretty.push(format!("     {c}"));
            }
        }
    }
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.cells.iter().map(move |c| {
                vec![
                    r.identity.name().to_string(),
                    c.params.clone(),
                    c.passed.to_string(),
                    c.counterexample.clone().unwrap_or_default(),
                ]
            })
        })
        .collect();
    Rendered::new(json, pretty.join("\n")).table(vec!["identity", "params", "passed", "counterexample"], rows)
}
