//! Planar-diagram (PD) codes: parsing, validation, and emission.
//!
//! Grammar accepted by [`parse_pd`] (whitespace-insensitive):
//!
//! ```text
//! PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]
//! ```
//!
//! or the bare line form, one crossing per `;`-separated group:
//!
//! ```text
//! 1 4 2 5; 3 6 4 1; 5 2 6 3
//! ```
//!
//! Each `X[a,b,c,d]` lists the arc labels around one crossing
//! counterclockwise starting from the incoming under-strand arc. Labels run
//! consecutively along each component, so every label appears exactly twice
//! in the whole code and `c` is the under-strand successor of `a`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One crossing of a PD code: arc labels counterclockwise from the incoming
/// under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCrossing(pub [u64; 4]);

/// A parsed PD code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PdCode(pub Vec<PdCrossing>);

/// Errors raised while parsing or validating PD codes.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdError {
    /// Input had no crossings.
    #[error("PD code is empty")]
    Empty,
    /// A token could not be read as an arc label.
    #[error("invalid arc label {token:?} at byte {at}")]
    BadLabel {
        /// Offending token text.
        token: String,
        /// Byte offset in the input.
        at: usize,
    },
    /// Structural syntax problem (missing bracket, comma, or `X`).
    #[error("malformed PD syntax at byte {at}: {reason}")]
    Syntax {
        /// Byte offset in the input.
        at: usize,
        /// What was expected.
        reason: String,
    },
    /// A crossing group did not contain exactly four labels.
    #[error("crossing {index} has {found} labels (expected 4)")]
    BadArity {
        /// Zero-based crossing index.
        index: usize,
        /// Number of labels found.
        found: usize,
    },
    /// Some arc label does not appear exactly twice.
    #[error("arc label {label} appears {count} times (expected 2)")]
    BadLabelCount {
        /// The repeated/missing label.
        label: u64,
        /// How many times it occurred.
        count: usize,
    },
    /// Labels of one component do not form a consecutive range.
    #[error("labels of a component are not consecutive: {0:?}")]
    NonConsecutive(Vec<u64>),
    /// Under-strand labels at some crossing do not satisfy `c = succ(a)`.
    #[error("crossing {0}: under strand labels are not consecutive along the orientation")]
    BadUnderSuccession(usize),
    /// Over-strand labels at some crossing are consistent with neither
    /// direction.
    #[error("crossing {0}: over strand labels are not consecutive along either orientation")]
    BadOverSuccession(usize),
}

impl fmt::Display for PdCrossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{},{},{}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl PdCode {
    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when there are no crossings.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The bare line form `a b c d; a b c d; ...`.
    pub fn to_line(&self) -> String {
        self.0
            .iter()
            .map(|x| format!("{} {} {} {}", x.0[0], x.0[1], x.0[2], x.0[3]))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Parses a PD code in either accepted form. See the module docs.
pub fn parse_pd(input: &str) -> Result<PdCode, PdError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(PdError::Empty);
    }
    let code = if trimmed.starts_with("PD") || trimmed.starts_with("pd") {
        parse_bracket_form(trimmed)?
    } else {
        parse_line_form(trimmed)?
    };
    validate_pd(&code)?;
    Ok(code)
}

/// Parses the bare line form only (used by streaming readers where a line is
/// known to hold exactly one diagram).
pub fn parse_pd_line(line: &str) -> Result<PdCode, PdError> {
    parse_pd(line)
}

/// Parses a multi-line text, one diagram per non-empty line. Lines whose
/// parse fails are reported with their zero-based line number; parsing
/// continues past failures.
pub fn parse_pd_lines(text: &str) -> (Vec<(usize, PdCode)>, Vec<(usize, PdError)>) {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_pd(line) {
            Ok(code) => ok.push((i, code)),
            Err(e) => bad.push((i, e)),
        }
    }
    (ok, bad)
}

fn parse_bracket_form(s: &str) -> Result<PdCode, PdError> {
    // Strip "PD [ ... ]".
    let body_start = s.find('[').ok_or_else(|| PdError::Syntax {
        at: 0,
        reason: "expected '[' after PD".into(),
    })?;
    if !s.ends_with(']') {
        return Err(PdError::Syntax {
            at: s.len(),
            reason: "expected closing ']'".into(),
        });
    }
    let body = &s[body_start + 1..s.len() - 1];
    let mut crossings = Vec::new();
    let mut rest = body.trim_start();
    let mut offset = body_start + 1 + (body.len() - rest.len());
    while !rest.is_empty() {
        if !(rest.starts_with('X') || rest.starts_with('x')) {
            return Err(PdError::Syntax {
                at: offset,
                reason: "expected 'X['".into(),
            });
        }
        let open = rest.find('[').ok_or_else(|| PdError::Syntax {
            at: offset,
            reason: "expected '[' after X".into(),
        })?;
        let close = rest.find(']').ok_or_else(|| PdError::Syntax {
            at: offset,
            reason: "unclosed X[".into(),
        })?;
        if close < open {
            return Err(PdError::Syntax {
                at: offset + close,
                reason: "']' before '['".into(),
            });
        }
        let labels = parse_label_group(&rest[open + 1..close], offset + open + 1, ',')?;
        if labels.len() != 4 {
            return Err(PdError::BadArity {
                index: crossings.len(),
                found: labels.len(),
            });
        }
        crossings.push(PdCrossing([labels[0], labels[1], labels[2], labels[3]]));
        let consumed = close + 1;
        rest = rest[consumed..].trim_start();
        offset += consumed;
        if rest.starts_with(',') {
            rest = rest[1..].trim_start();
            offset += 1;
        }
    }
    if crossings.is_empty() {
        return Err(PdError::Empty);
    }
    Ok(PdCode(crossings))
}

fn parse_line_form(s: &str) -> Result<PdCode, PdError> {
    let mut crossings = Vec::new();
    for (index, group) in s.split(';').enumerate() {
        let group = group.trim();
        if group.is_empty() {
            continue;
        }
        let labels = parse_label_group(group, 0, ' ')?;
        if labels.len() != 4 {
            return Err(PdError::BadArity {
                index,
                found: labels.len(),
            });
        }
        crossings.push(PdCrossing([labels[0], labels[1], labels[2], labels[3]]));
    }
    if crossings.is_empty() {
        return Err(PdError::Empty);
    }
    Ok(PdCode(crossings))
}

fn parse_label_group(s: &str, base: usize, sep: char) -> Result<Vec<u64>, PdError> {
    let tokens: Vec<&str> = if sep == ' ' {
        s.split_whitespace().collect()
    } else {
        s.split(sep).collect()
    };
    let mut labels = Vec::new();
    for t in tokens {
        let t = t.trim();
        if t.is_empty() {
            continue;
        }
        let v: u64 = t.parse().map_err(|_| PdError::BadLabel {
            token: t.to_owned(),
            at: base,
        })?;
        labels.push(v);
    }
    Ok(labels)
}

/// Checks the label-multiset and succession conditions on a parsed code.
fn validate_pd(code: &PdCode) -> Result<(), PdError> {
    let succ = successor_table(code)?;
    for (i, x) in code.0.iter().enumerate() {
        let [a, _b, c, _d] = x.0;
        if succ(a) != c {
            return Err(PdError::BadUnderSuccession(i));
        }
    }
    for (i, x) in code.0.iter().enumerate() {
        let [_a, b, _c, d] = x.0;
        if succ(b) != d && succ(d) != b {
            return Err(PdError::BadOverSuccession(i));
        }
    }
    Ok(())
}

/// Builds the label-successor function: labels are grouped into components
/// by the pass-through relation (`a ~ c`, `b ~ d`), each component's labels
/// must form a consecutive range, and the successor wraps from the range
/// maximum to its minimum.
pub(crate) fn successor_table(code: &PdCode) -> Result<impl Fn(u64) -> u64, PdError> {
    use std::collections::BTreeMap;
    // Count occurrences.
    let mut count: BTreeMap<u64, usize> = BTreeMap::new();
    for x in &code.0 {
        for &l in &x.0 {
            *count.entry(l).or_insert(0) += 1;
        }
    }
    for (&label, &c) in &count {
        if c != 2 {
            return Err(PdError::BadLabelCount { label, count: c });
        }
    }
    // Union labels connected by the pass-through relation.
    let labels: Vec<u64> = count.keys().copied().collect();
    let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for x in &code.0 {
        let [a, b, c, d] = x.0;
        union(&mut parent, index[&a], index[&c]);
        union(&mut parent, index[&b], index[&d]);
    }
    // Each class must be a consecutive label range.
    let mut lo: BTreeMap<usize, u64> = BTreeMap::new();
    let mut hi: BTreeMap<usize, u64> = BTreeMap::new();
    let mut size: BTreeMap<usize, u64> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        let r = find(&mut parent, i);
        lo.entry(r).and_modify(|v| *v = (*v).min(l)).or_insert(l);
        hi.entry(r).and_modify(|v| *v = (*v).max(l)).or_insert(l);
        *size.entry(r).or_insert(0) += 1;
    }
    let mut range_of: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for (&r, &l) in &lo {
        let h = hi[&r];
        if h - l + 1 != size[&r] {
            let members: Vec<u64> = labels
                .iter()
                .enumerate()
                .filter(|(i, _)| find(&mut parent, *i) == r)
                .map(|(_, &l)| l)
                .collect();
            return Err(PdError::NonConsecutive(members));
        }
        for label in l..=h {
            range_of.insert(label, (l, h));
        }
    }
    Ok(move |label: u64| {
        let (l, h) = range_of[&label];
        if label == h {
            l
        } else {
            label + 1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bracket_form() {
        let code = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(code.len(), 3);
        assert_eq!(code.0[0], PdCrossing([1, 4, 2, 5]));
    }

    #[test]
    fn parses_with_whitespace() {
        let code = parse_pd("  PD[ X[1,4,2,5] , X[3,6,4,1],\tX[5,2,6,3] ]  ").unwrap();
        assert_eq!(code.len(), 3);
    }

    #[test]
    fn parses_line_form() {
        let code = parse_pd("1 4 2 5; 3 6 4 1; 5 2 6 3").unwrap();
        assert_eq!(code.len(), 3);
        assert_eq!(code.0[2], PdCrossing([5, 2, 6, 3]));
    }

    #[test]
    fn round_trips_display() {
        let text = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
        let code = parse_pd(text).unwrap();
        assert_eq!(code.to_string(), text);
        assert_eq!(parse_pd(&code.to_line()).unwrap(), code);
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(parse_pd("").unwrap_err(), PdError::Empty);
        assert_eq!(parse_pd("PD[]").unwrap_err(), PdError::Empty);
    }

    #[test]
    fn rejects_bad_arity() {
        let err = parse_pd("PD[X[1,2,3]]").unwrap_err();
        assert_eq!(err, PdError::BadArity { index: 0, found: 3 });
    }

    #[test]
    fn rejects_bad_label() {
        let err = parse_pd("PD[X[1,2,x,4]]").unwrap_err();
        assert!(matches!(err, PdError::BadLabel { .. }));
    }

    #[test]
    fn rejects_bad_label_count() {
        // Label 7 appears once.
        let err = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,7]]").unwrap_err();
        assert!(matches!(err, PdError::BadLabelCount { .. }));
    }

    #[test]
    fn rejects_inconsistent_under_orientation() {
        // Under strand enters 1 and leaves 3 at the first crossing: labels
        // not consecutive along the component.
        let err = parse_pd("PD[X[1,4,3,5],X[2,6,4,1],X[5,3,6,2]]").unwrap_err();
        assert!(matches!(
            err,
            PdError::BadUnderSuccession(_) | PdError::NonConsecutive(_)
        ));
    }

    #[test]
    fn one_crossing_kink_parses() {
        let code = parse_pd("PD[X[1,2,2,1]]").unwrap();
        assert_eq!(code.len(), 1);
    }

    #[test]
    fn streaming_parse_records_errors_per_line() {
        let text = "PD[X[1,2,2,1]]\n\n# comment\nPD[X[1,2,3]]\n1 4 2 5; 3 6 4 1; 5 2 6 3";
        let (ok, bad) = parse_pd_lines(text);
        assert_eq!(ok.len(), 2);
        assert_eq!(ok[0].0, 0);
        assert_eq!(ok[1].0, 4);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].0, 3);
    }
}
