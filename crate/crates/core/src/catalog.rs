//! Golden sequence data and the cross-checking verifier.
//!
//! Table terms are fixtures transcribed from print; the verifier compares
//! them against the DP oracle, the general summation formula and any named
//! closed form, and records every disagreement instead of dropping it.

use std::fmt;
use std::str::FromStr;

use crate::closedforms::{general_count, halfplane_closed, named_closed_form};
use crate::error::{Error, Result};
use crate::exactmath::Natural;
use crate::oracle::{count_dp, sequence_dp, Guards};
use crate::walks::WalkType;

const TABLE3_DATA: &str = include_str!("../data/table3.txt");

// (type, reference id, stored as absolute values)
const TABLE3_REFERENCES: &[(&str, &str, bool)] = &[
    ("aaa", "A064037", false),
    ("aae", "A145867", false),
    ("acd", "A145847", false),
    ("add", "A000108", false),
    ("ade", "A002212", false),
    ("aee", "A005572", false),
    ("bbb", "A002896", false),
    ("bbc", "A138547", true),
    ("bbe", "A202814", false),
    ("bcd", "A150500", false),
    ("bdd", "A000984", false),
    ("bde", "A026375", false),
    ("bee", "A081671", false),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    PaperTable3,
    PaperText,
    Computed,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::PaperTable3 => "paper_table3",
            Source::PaperText => "paper_text",
            Source::Computed => "computed",
        }
    }
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "paper_table3" => Ok(Source::PaperTable3),
            "paper_text" => Ok(Source::PaperText),
            "computed" => Ok(Source::Computed),
            other => Err(format!("unknown source {other:?}")),
        }
    }
}

/// A walk type with its leading terms, indexed from `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub walk_type: WalkType,
    pub terms: Vec<Natural>,
    pub source: Source,
    pub oeis_id: Option<String>,
    /// Only even lengths are nonzero; the odd zeros are stored explicitly.
    pub even_only_star: bool,
    /// Terms are absolute values of a signed reference sequence.
    pub absolute_values_note: bool,
}

impl SequenceRecord {
    /// `<type> <source> <star-flag> <comma-separated terms>`
    pub fn to_line(&self) -> String {
        let terms: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        format!(
            "{} {} {} {}",
            self.walk_type,
            self.source.as_str(),
            if self.even_only_star { '*' } else { '-' },
            terms.join(",")
        )
    }

    pub fn term(&self, n: usize) -> Option<&Natural> {
        self.terms.get(n)
    }
}

/// Parses golden lines; `#` comments and blank lines are skipped.
pub fn parse_golden(text: &str) -> Result<Vec<SequenceRecord>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = |reason: String| Error::Golden { line, reason };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let [ty, source, star, terms] = fields[..] else {
            return Err(bad(format!("expected 4 fields, found {}", fields.len())));
        };
        let walk_type: WalkType = ty.parse().map_err(|e: Error| bad(e.to_string()))?;
        let source = source.parse().map_err(bad)?;
        let even_only_star = match star {
            "*" => true,
            "-" => false,
            other => return Err(bad(format!("star flag must be '*' or '-', got {other:?}"))),
        };
        let terms = terms
            .split(',')
            .map(|t| {
                t.parse::<Natural>()
                    .map_err(|e| bad(format!("term {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.first() != Some(&Natural::one()) {
            return Err(bad("first term must be 1 (the empty walk)".into()));
        }
        if even_only_star && terms.iter().skip(1).step_by(2).any(|t| !t.is_zero()) {
            return Err(bad("starred record has a nonzero odd-length term".into()));
        }
        out.push(SequenceRecord {
            walk_type,
            terms,
            source,
            oeis_id: None,
            even_only_star,
            absolute_values_note: false,
        });
    }
    Ok(out)
}

/// The 25 three-dimensional rows, exactly as printed.
pub fn golden_table3() -> Vec<SequenceRecord> {
    let mut records = parse_golden(TABLE3_DATA).expect("bundled table is well formed");
    for rec in &mut records {
        let letters = rec.walk_type.letters();
        if let Some(&(_, id, abs)) = TABLE3_REFERENCES.iter().find(|(t, _, _)| *t == letters) {
            rec.oeis_id = Some(id.to_string());
            rec.absolute_values_note = abs;
        }
    }
    records
}

pub fn golden_record(walk_type: &WalkType) -> Option<SequenceRecord> {
    golden_table3()
        .into_iter()
        .find(|r| &r.walk_type == walk_type)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Entry {
    pub walk_type: WalkType,
    pub oeis_id: &'static str,
    pub even_only: bool,
}

/// The two-dimensional listing carries identifiers only, no terms.
pub const TABLE2_NOTE: &str =
    "identifiers only; starred entries count even lengths returning to the origin";

/// The 15 two-dimensional types and their reference sequence identifiers.
pub fn table2_map() -> Vec<Table2Entry> {
    [
        ("aa", "A005568", true),
        ("ab", "A000891", true),
        ("ac", "A001700", false),
        ("ad", "A001006", false),
        ("ae", "A000108", false),
        ("bb", "A002894", true),
        ("bc", "A018224", false),
        ("bd", "A002426", false),
        ("be", "A000984", false),
        ("cc", "A005566", false),
        ("cd", "A005773", false),
        ("ce", "A001700", false),
        ("dd", "A000079", false),
        ("de", "A000244", false),
        ("ee", "A000302", false),
    ]
    .into_iter()
    .map(|(t, id, even_only)| Table2Entry {
        walk_type: t.parse().expect("static type"),
        oeis_id: id,
        even_only,
    })
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Agree,
    Mismatch(String),
    Skipped(String),
}

impl RowStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RowStatus::Agree => "agree",
            RowStatus::Mismatch(_) => "mismatch",
            RowStatus::Skipped(_) => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    /// `Err` carries the guard message when the oracle refused.
    pub oracle: std::result::Result<Natural, String>,
    pub formula: Natural,
    pub closed: Option<(&'static str, Natural)>,
    pub golden: Option<Natural>,
    pub status: RowStatus,
}

/// A printed claim that the computed counts contradict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimNote {
    pub n: usize,
    pub claim: &'static str,
    pub claimed: Natural,
    pub observed: Natural,
}

impl fmt::Display for ClaimNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}: printed claim {} gives {}, counted {}",
            self.n, self.claim, self.claimed, self.observed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub walk_type: WalkType,
    pub rows: Vec<VerifyRow>,
    pub notes: Vec<ClaimNote>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, RowStatus::Mismatch(_)))
    }

    pub fn has_mismatch(&self) -> bool {
        self.mismatches().next().is_some()
    }

    pub fn skipped(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, RowStatus::Skipped(_)))
    }

    /// One `type n oracle formula closed golden status` line per length.
    pub fn structured_lines(&self) -> Vec<String> {
        let dash = || "-".to_string();
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "{} {} {} {} {} {} {}",
                    self.walk_type,
                    r.n,
                    r.oracle
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_else(|_| dash()),
                    r.formula,
                    r.closed
                        .as_ref()
                        .map(|c| c.1.to_string())
                        .unwrap_or_else(dash),
                    r.golden
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_else(dash),
                    r.status.label()
                )
            })
            .collect()
    }
}

fn printed_claim(walk_type: &WalkType, n: u64) -> Option<(&'static str, Natural)> {
    // type ac is printed as binom(2n+1, n); the counts say otherwise
    (walk_type.letters() == "ac").then(|| ("binom(2n+1,n) [A001700]", halfplane_closed(n)))
}

fn oracle_counts(
    walk_type: &WalkType,
    n_max: usize,
    guards: &Guards,
) -> Vec<std::result::Result<Natural, String>> {
    match sequence_dp(walk_type, n_max, guards) {
        Ok(v) => v.into_iter().map(Ok).collect(),
        Err(_) => (0..=n_max)
            .map(|n| count_dp(walk_type, n, guards).map_err(|e| e.to_string()))
            .collect(),
    }
}

/// Cross-checks oracle, general formula, named closed form and golden terms
/// for every length `0..=n_max`.
pub fn verify(walk_type: &WalkType, n_max: usize, guards: &Guards) -> VerificationReport {
    let golden = golden_record(walk_type);
    let oracle = oracle_counts(walk_type, n_max, guards);
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut notes = Vec::new();

    for (n, oracle) in oracle.into_iter().enumerate() {
        let formula = general_count(walk_type, n as u64);
        let closed = named_closed_form(walk_type, n as u64);
        let golden_term = golden.as_ref().and_then(|g| g.term(n).cloned());

        let mut problems = Vec::new();
        let reference = oracle.as_ref().unwrap_or(&formula);
        if let Ok(o) = &oracle {
            if *o != formula {
                problems.push(format!("oracle {o} != formula {formula}"));
            }
        }
        if let Some((name, c)) = &closed {
            if c != reference {
                problems.push(format!("closed form {name} {c} != {reference}"));
            }
        }
        if let Some(g) = &golden_term {
            if g != reference {
                problems.push(format!("golden {g} != counted {reference}"));
            }
        }
        if let Some((claim, claimed)) = printed_claim(walk_type, n as u64) {
            if &claimed != reference {
                notes.push(ClaimNote {
                    n,
                    claim,
                    claimed,
                    observed: reference.clone(),
                });
            }
        }

        let status = if !problems.is_empty() {
            RowStatus::Mismatch(problems.join("; "))
        } else if let Err(e) = &oracle {
            RowStatus::Skipped(e.clone())
        } else {
            RowStatus::Agree
        };
        rows.push(VerifyRow {
            n,
            oracle,
            formula,
            closed,
            golden: golden_term,
            status,
        });
    }

    VerificationReport {
        walk_type: walk_type.clone(),
        rows,
        notes,
    }
}

/// Verifies every golden row up to `n_max`, clipped to its printed length.
pub fn verify_table3(n_max: usize, guards: &Guards) -> Vec<VerificationReport> {
    golden_table3()
        .iter()
        .map(|rec| verify(&rec.walk_type, n_max.min(rec.terms.len() - 1), guards))
        .collect()
}
