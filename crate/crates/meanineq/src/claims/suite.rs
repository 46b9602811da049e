//! Claim-suite records and the bundled catalog.
//!
//! A suite file is UTF-8, line-oriented. `#` starts a comment; blank lines
//! are skipped. Each record is
//!
//! ```text
//! id | expression | expect=HOLDS|FAILS | note
//! ```
//!
//! The note field is free text and may be empty.

use super::ast::Claim;
use super::parse::parse_claim;
use std::fmt;

/// Expected audit verdict for a suite entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Fails,
}

impl Expectation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Expectation::Holds => "HOLDS",
            Expectation::Fails => "FAILS",
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One catalogued claim.
#[derive(Debug, Clone)]
pub struct ClaimEntry {
    pub id: String,
    pub claim: Claim,
    pub expect: Expectation,
    pub note: String,
}

/// Suite-file error with line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SuiteError {}

/// Parses a suite file.
pub fn parse_suite(text: &str) -> Result<Vec<ClaimEntry>, SuiteError> {
    let mut entries: Vec<ClaimEntry> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.splitn(4, '|').map(str::trim);
        let id = fields
            .next()
            .filter(|s| !s.is_empty())
            .ok_or_else(|| SuiteError {
                line,
                message: "missing id field".into(),
            })?;
        let expr_text = fields.next().ok_or_else(|| SuiteError {
            line,
            message: "missing expression field".into(),
        })?;
        let expect_text = fields.next().ok_or_else(|| SuiteError {
            line,
            message: "missing expect field".into(),
        })?;
        let note = fields.next().unwrap_or("").to_string();

        let claim = parse_claim(expr_text).map_err(|e| SuiteError {
            line,
            message: format!("{e}"),
        })?;
        let expect = match expect_text {
            "expect=HOLDS" => Expectation::Holds,
            "expect=FAILS" => Expectation::Fails,
            other => {
                return Err(SuiteError {
                    line,
                    message: format!(
                        "expect field must be expect=HOLDS or expect=FAILS, got `{other}`"
                    ),
                })
            }
        };
        if entries.iter().any(|e| e.id == id) {
            return Err(SuiteError {
                line,
                message: format!("duplicate id `{id}`"),
            });
        }
        entries.push(ClaimEntry {
            id: id.to_string(),
            claim,
            expect,
            note,
        });
    }
    if entries.is_empty() {
        return Err(SuiteError {
            line: 0,
            message: "suite contains no entries".into(),
        });
    }
    Ok(entries)
}

const BUNDLED: &str = include_str!("bundled.claims");

/// The bundled catalog.
pub fn bundled_suite() -> Vec<ClaimEntry> {
    parse_suite(BUNDLED).expect("bundled suite parses")
}

/// Raw text of the bundled catalog (for `audit --suite -` style tooling).
pub fn bundled_suite_text() -> &'static str {
    BUNDLED
}
