//! Family file formats.
//!
//! Text: a header line `n k`, then one set per line as increasing 1-indexed
//! elements separated by whitespace. Blank lines and `#` comments are
//! skipped. JSON: `{"n": .., "k": .., "sets": [[..], ..]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, KSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub n: usize,
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
}

impl From<&Family> for FamilyJson {
    fn from(fam: &Family) -> Self {
        FamilyJson {
            n: fam.n(),
            k: fam.k(),
            sets: fam.to_element_lists(),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson::from(self).serialize(s)
    }
}

/// Result of parsing, with the number of repeated sets that were dropped.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub family: Family,
    pub duplicates: usize,
}

pub fn parse_family(input: &str) -> Result<Parsed> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<Parsed> {
    let raw: FamilyJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut family = Family::new(raw.n, raw.k).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    let mut duplicates = 0;
    for (i, set) in raw.sets.iter().enumerate() {
        let s = KSet::from_elements(set, raw.n).map_err(|e| Error::Parse {
            line: 1,
            message: format!("set #{}: {e}", i + 1),
        })?;
        if !family.insert(s).map_err(|e| Error::Parse {
            line: 1,
            message: format!("set #{}: {e}", i + 1),
        })? {
            duplicates += 1;
        }
    }
    Ok(Parsed { family, duplicates })
}

fn parse_text(input: &str) -> Result<Parsed> {
    let mut family: Option<Family> = None;
    let mut duplicates = 0;

    for (idx, raw_line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a positive integer, found `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let parse_err = |e: Error| Error::Parse {
            line: line_no,
            message: e.to_string(),
        };

        match family.as_mut() {
            None => {
                if nums.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "header must be `n k`".into(),
                    });
                }
                family = Some(Family::new(nums[0], nums[1]).map_err(parse_err)?);
            }
            Some(fam) => {
                if nums.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "set elements must be strictly increasing".into(),
                    });
                }
                let s = KSet::from_elements(&nums, fam.n()).map_err(parse_err)?;
                if !fam.insert(s).map_err(parse_err)? {
                    duplicates += 1;
                }
            }
        }
    }

    let family = family.ok_or(Error::Parse {
        line: input.lines().count().max(1),
        message: "missing `n k` header".into(),
    })?;
    Ok(Parsed { family, duplicates })
}

pub fn to_text(fam: &Family) -> String {
    let mut out = String::with_capacity(16 + fam.len() * 3 * fam.k());
    let _ = writeln!(out, "{} {}", fam.n(), fam.k());
    for s in fam {
        let _ = writeln!(out, "{s}");
    }
    out
}

pub fn to_json(fam: &Family) -> String {
    serde_json::to_string(&FamilyJson::from(fam)).expect("family json is always serializable")
}
