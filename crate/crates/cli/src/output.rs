use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One command's result in all three renderings.
pub struct Response {
    pub json: Map<String, Value>,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    /// At least one verification verdict failed.
    pub mismatch: bool,
}

impl Response {
    pub fn new(json: Map<String, Value>) -> Self {
        Response {
            json,
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            text: Vec::new(),
            mismatch: false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                // serde_json's default map is ordered by key
                let mut out =
                    serde_json::to_string_pretty(&self.json).expect("JSON values always serialize");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).expect("in-memory write");
                for row in &self.csv_rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush"))
                    .expect("CSV of UTF-8 fields")
            }
            Format::Text => self.text.iter().map(|l| format!("{l}\n")).collect(),
        }
    }
}
