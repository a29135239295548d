//! Line-oriented text format for set families.
//!
//! ```text
//! # optional comments
//! n 4
//! 1 2
//! 2 3 4
//! -
//! ```
//!
//! The first significant line is the header `n <N>`; every following line is
//! one set, written as strictly increasing 1-based element labels separated
//! by whitespace, or `-` for the empty set. `#` starts a comment, blank
//! lines are skipped. Parsing normalizes the family; duplicate member lines
//! are deduplicated silently and reported, not rejected. Writing emits the
//! canonical form, so write-then-read is the identity.

use crate::error::{Error, Result};
use crate::setfam::{Face, GroundSize, SetFamily};

/// A parsed family plus parser diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOutcome {
    pub family: SetFamily,
    /// Number of member lines dropped as duplicates during normalization.
    pub duplicates_removed: usize,
}

/// Parses the family-file format.
pub fn parse_family(text: &str) -> Result<ParseOutcome> {
    let mut n: Option<GroundSize> = None;
    let mut members: Vec<Face> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        match n {
            None => {
                let rest = line
                    .strip_prefix('n')
                    .filter(|r| r.starts_with(char::is_whitespace))
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("expected header `n <N>`, got {line:?}"),
                    })?;
                let value: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid ground size {:?}", rest.trim()),
                })?;
                n = Some(GroundSize::new(value).map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!(
                        "ground size {value} exceeds the maximum {}",
                        crate::setfam::N_MAX
                    ),
                })?);
            }
            Some(ground) => {
                members.push(parse_member_line(line, line_no, ground)?);
            }
        }
    }

    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing header `n <N>`".to_string(),
    })?;
    let raw_count = members.len();
    let family = SetFamily::new(n, members)?;
    Ok(ParseOutcome {
        duplicates_removed: raw_count - family.len(),
        family,
    })
}

fn parse_member_line(line: &str, line_no: usize, n: GroundSize) -> Result<Face> {
    if line == "-" {
        return Ok(Face::empty());
    }
    let mut face = Face::empty();
    let mut previous: u32 = 0;
    for token in line.split_whitespace() {
        let element: u32 = token.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid element {token:?}"),
        })?;
        if element == 0 {
            return Err(Error::Parse {
                line: line_no,
                message: "elements are 1-based; 0 is not a valid label".to_string(),
            });
        }
        if element <= previous {
            return Err(Error::Parse {
                line: line_no,
                message: format!("elements must be strictly increasing, got {element} after {previous}"),
            });
        }
        if element as usize > n.get() {
            return Err(Error::MemberOutOfRange {
                element,
                n: n.get(),
                line: Some(line_no),
            });
        }
        face.insert(element);
        previous = element;
    }
    Ok(face)
}

/// Writes the canonical form; round-trips bit-exactly through
/// [`parse_family`].
pub fn write_family(family: &SetFamily) -> String {
    let mut out = format!("n {}\n", family.n());
    for member in family.members() {
        if member.is_empty() {
            out.push('-');
        } else {
            let labels: Vec<String> = member.elements().iter().map(u32::to_string).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}
