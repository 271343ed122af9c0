use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Result of one verification run, in the JSON schema of the suite.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub identity: String,
    pub case: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub params: BTreeMap<String, Value>,
    pub holds: bool,
    pub terms: usize,
    pub elapsed_ms: u64,
    pub notes: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One status line plus indented notes.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{}={}", k, plain(v))).collect();
        let _ = write!(
            s,
            "{} {} {} N={}",
            if self.holds { "PASS" } else { "FAIL" },
            self.identity,
            self.case,
            self.n
        );
        if !params.is_empty() {
            let _ = write!(s, " [{}]", params.join(" "));
        }
        let _ = write!(s, " terms={} {}ms", self.terms, self.elapsed_ms);
        for n in &self.notes {
            let _ = write!(s, "\n    {}", n);
        }
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Reports as a JSON array, one report per line.
pub fn reports_json(rs: &[Report]) -> String {
    let lines: Vec<String> = rs.iter().map(|r| format!("  {}", r.to_json())).collect();
    format!("[\n{}\n]", lines.join(",\n"))
}
