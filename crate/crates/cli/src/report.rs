use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::TOOL_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub degree_range: (usize, usize),
    pub details: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// One line of a degree table. Columns that do not apply to a command are
/// left out of both JSON and CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial_sum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witt: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf_h2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ce_h2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub max_degree: usize,
    pub algebra: Option<String>,
    pub rows: Vec<Row>,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy)]
enum Column {
    Dim,
    PartialSum,
    Witt,
    DimL,
    HopfH2,
    CeH2,
    Agree,
}

impl Column {
    const ALL: [Column; 7] = [
        Column::Dim,
        Column::PartialSum,
        Column::Witt,
        Column::DimL,
        Column::HopfH2,
        Column::CeH2,
        Column::Agree,
    ];

    fn name(self) -> &'static str {
        match self {
            Column::Dim => "dim",
            Column::PartialSum => "partial_sum",
            Column::Witt => "witt",
            Column::DimL => "dim_l",
            Column::HopfH2 => "hopf_h2",
            Column::CeH2 => "ce_h2",
            Column::Agree => "agree",
        }
    }

    fn cell(self, row: &Row) -> Option<String> {
        let n = |v: Option<usize>| v.map(|v| v.to_string());
        match self {
            Column::Dim => n(row.dim),
            Column::PartialSum => n(row.partial_sum),
            Column::Witt => n(row.witt),
            Column::DimL => n(row.dim_l),
            Column::HopfH2 => n(row.hopf_h2),
            Column::CeH2 => n(row.ce_h2),
            Column::Agree => row.agree.map(|a| a.to_string()),
        }
    }
}

impl Report {
    pub fn new(max_degree: usize, algebra: Option<String>) -> Self {
        Self {
            tool_version: TOOL_VERSION.to_string(),
            max_degree,
            algebra,
            rows: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Rows only. A column is emitted when any row has a value for it.
    pub fn to_csv(&self) -> String {
        let columns: Vec<Column> = Column::ALL
            .into_iter()
            .filter(|c| self.rows.iter().any(|r| c.cell(r).is_some()))
            .collect();
        let mut out = String::from("degree");
        for c in &columns {
            out.push(',');
            out.push_str(c.name());
        }
        out.push('\n');
        for row in &self.rows {
            write!(out, "{}", row.degree).unwrap();
            for c in &columns {
                out.push(',');
                out.push_str(&c.cell(row).unwrap_or_default());
            }
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(2, Some("L".into()));
        r.rows = vec![
            Row { degree: 1, dim: Some(2), ..Default::default() },
            Row { degree: 2, dim: Some(1), ..Default::default() },
        ];
        r
    }

    #[test]
    fn csv_has_only_used_columns() {
        assert_eq!(sample().to_csv(), "degree,dim\n1,2\n2,1\n");
    }

    #[test]
    fn blank_cells() {
        let mut r = Report::new(2, None);
        r.rows = vec![
            Row { degree: 1, witt: Some(2), ..Default::default() },
            Row { degree: 2, witt: Some(1), hopf_h2: Some(0), ..Default::default() },
        ];
        assert_eq!(r.to_csv(), "degree,witt,hopf_h2\n1,2,\n2,1,0\n");
    }

    #[test]
    fn json_round_trip_and_key_order() {
        let r = sample();
        let text = r.to_json();
        assert!(text.find("tool_version").unwrap() < text.find("max_degree").unwrap());
        assert!(text.find("\"rows\"").unwrap() < text.find("\"checks\"").unwrap());
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
