use std::fmt;

use serde::Serialize;

/// One checked case. `evidence` holds `name=value` pairs shown in the text form only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub evidence: Vec<(String, String)>,
}

impl CaseResult {
    pub fn new(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CaseResult {
            id: id.into(),
            pass,
            detail: detail.into(),
            evidence: Vec::new(),
        }
    }

    pub fn with(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.evidence.push((name.to_string(), value.to_string()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, cases: Vec<CaseResult>) -> Self {
        let pass = cases.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.to_string(),
            seed,
            pass,
            cases,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Line oriented form: a header line, one line per case, a summary line.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} seed {}", self.suite, self.seed)?;
        for c in &self.cases {
            write!(
                f,
                "{} {} {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.detail
            )?;
            for (k, v) in &c.evidence {
                write!(f, " {k}={v}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} {}/{} cases passed",
            if self.pass { "PASS" } else { "FAIL" },
            self.cases.len() - failed,
            self.cases.len()
        )
    }
}
