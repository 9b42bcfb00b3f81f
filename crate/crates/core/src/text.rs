//! Line-oriented text formats.
//!
//! Matrices:
//!
//! ```text
//! matrix GF4 2          rmatrix GF4 1 2
//! a b                   r0
//! 0 w                   a b
//! w2 1                  1 1
//! ```
//!
//! Set systems (`-` is the empty set):
//!
//! ```text
//! setsystem 2
//! a b
//! -
//! a,b
//! ```
//!
//! Flip words are whitespace-separated tokens `*x`, `+x`, `dx`. Every
//! printer's output re-parses to an equal value.

use std::fmt::Write as _;

use crate::error::Error;
use crate::field::{FieldElement, FieldKind};
use crate::ground::{validate_label, GroundSet, LabelSet};
use crate::matrix::LabeledMatrix;
use crate::setsystem::{FlipOp, FlipStep, FlipWord, SetSystem};

/// Nonempty lines with their 1-based numbers; trailing blank lines are fine,
/// interior content is consumed strictly in order.
struct Lines<'a> {
    rest: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Lines<'a> {
        Lines {
            rest: src.lines().enumerate().peekable(),
        }
    }

    /// The next line, even a blank one. None at end of input.
    fn next_raw(&mut self) -> Option<(usize, &'a str)> {
        self.rest.next().map(|(i, l)| (i + 1, l))
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), Error> {
        self.next_raw()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of input, expected {what}")))
    }

    fn expect_nothing_else(mut self) -> Result<(), Error> {
        while let Some((no, line)) = self.next_raw() {
            if !line.trim().is_empty() {
                return Err(Error::parse(no, "unexpected trailing content"));
            }
        }
        Ok(())
    }
}

fn parse_count(no: usize, token: &str, what: &str) -> Result<usize, Error> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(no, format!("`{token}` is not a valid {what} count")))
}

fn parse_field(no: usize, token: &str) -> Result<FieldKind, Error> {
    FieldKind::from_name(token).ok_or_else(|| {
        Error::parse(
            no,
            format!("unknown field `{token}` (expected GF2, GF3 or GF4)"),
        )
    })
}

fn parse_labels(no: usize, line: &str, expected: usize) -> Result<GroundSet, Error> {
    let labels: Vec<&str> = line.split_whitespace().collect();
    if labels.len() != expected {
        return Err(Error::parse(
            no,
            format!("expected {expected} labels, found {}", labels.len()),
        ));
    }
    GroundSet::new(labels).map_err(|e| Error::parse(no, e.to_string()))
}

fn parse_label_line(lines: &mut Lines, expected: usize) -> Result<GroundSet, Error> {
    if expected == 0 {
        // Permit the label line to be omitted entirely when there is
        // nothing to list.
        return match lines.next_raw() {
            None => GroundSet::new(Vec::<String>::new()),
            Some((no, line)) => parse_labels(no, line, 0),
        };
    }
    let (no, line) = lines.expect("a label line")?;
    parse_labels(no, line, expected)
}

fn parse_row(
    no: usize,
    line: &str,
    kind: FieldKind,
    expected: usize,
) -> Result<Vec<FieldElement>, Error> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != expected {
        return Err(Error::parse(
            no,
            format!("expected {expected} entries, found {}", tokens.len()),
        ));
    }
    tokens
        .iter()
        .map(|t| FieldElement::from_token(kind, t).map_err(|e| Error::parse(no, e.to_string())))
        .collect()
}

/// Parses either header form; `matrix` yields a square matrix sharing one
/// ground set between rows and columns.
pub fn parse_matrix(src: &str) -> Result<LabeledMatrix, Error> {
    let mut lines = Lines::new(src);
    let (no, header) = lines.expect("a matrix header")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (kind, rows, cols) = match tokens.as_slice() {
        ["matrix", field, n] => {
            let kind = parse_field(no, field)?;
            let n = parse_count(no, n, "dimension")?;
            let ground = parse_label_line(&mut lines, n)?;
            (kind, ground.clone(), ground)
        }
        ["rmatrix", field, r, c] => {
            let kind = parse_field(no, field)?;
            let r = parse_count(no, r, "row")?;
            let c = parse_count(no, c, "column")?;
            let rows = parse_label_line(&mut lines, r)?;
            let cols = parse_label_line(&mut lines, c)?;
            (kind, rows, cols)
        }
        _ => {
            return Err(Error::parse(
                no,
                "expected `matrix <field> <n>` or `rmatrix <field> <rows> <cols>`",
            ))
        }
    };
    let mut entries = Vec::with_capacity(rows.len());
    for _ in 0..rows.len() {
        let (no, line) = lines.expect("a matrix row")?;
        entries.push(parse_row(no, line, kind, cols.len())?);
    }
    lines.expect_nothing_else()?;
    LabeledMatrix::new(rows, cols, kind, entries)
}

pub fn print_matrix(m: &LabeledMatrix) -> String {
    let mut out = String::new();
    if m.is_square() {
        let _ = writeln!(out, "matrix {} {}", m.kind(), m.nrows());
        let _ = writeln!(out, "{}", m.row_ground().labels().join(" "));
    } else {
        let _ = writeln!(out, "rmatrix {} {} {}", m.kind(), m.nrows(), m.ncols());
        let _ = writeln!(out, "{}", m.row_ground().labels().join(" "));
        let _ = writeln!(out, "{}", m.col_ground().labels().join(" "));
    }
    for i in 0..m.nrows() {
        let row: Vec<&str> = (0..m.ncols()).map(|j| m.entry_at(i, j).token()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// A comma-separated member list, `-` for the empty set.
pub fn parse_subset(ground: &GroundSet, arg: &str) -> Result<LabelSet, Error> {
    let arg = arg.trim();
    if arg == "-" {
        return Ok(ground.empty_subset());
    }
    if arg.is_empty() {
        return Err(Error::parse(0, "empty subset expression (use `-`)"));
    }
    let mut labels = Vec::new();
    for part in arg.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::parse(0, "empty label in subset"));
        }
        labels.push(part);
    }
    ground.subset(labels)
}

pub fn print_subset(set: &LabelSet) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    set.labels().collect::<Vec<_>>().join(",")
}

pub fn parse_set_system(src: &str) -> Result<SetSystem, Error> {
    let mut lines = Lines::new(src);
    let (no, header) = lines.expect("a set-system header")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let n = match tokens.as_slice() {
        ["setsystem", n] => parse_count(no, n, "ground")?,
        _ => return Err(Error::parse(no, "expected `setsystem <n>`")),
    };
    let ground = parse_label_line(&mut lines, n)?;
    let mut subsets = Vec::new();
    while let Some((no, line)) = lines.next_raw() {
        let line = line.trim();
        if line.is_empty() {
            // Tolerate blank separators; content may not resume afterwards.
            lines.expect_nothing_else()?;
            break;
        }
        if line.split_whitespace().count() > 1 {
            return Err(Error::parse(
                no,
                "a subset line holds one comma-separated subset",
            ));
        }
        subsets.push(parse_subset(&ground, line).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(no, message),
            other => Error::parse(no, other.to_string()),
        })?);
    }
    SetSystem::new(ground, subsets)
}

pub fn print_set_system(m: &SetSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "setsystem {}", m.ground().len());
    let _ = writeln!(out, "{}", m.ground().labels().join(" "));
    for member in m.members() {
        let _ = writeln!(out, "{}", print_subset(&member));
    }
    out
}

/// Whitespace-separated flip tokens: `*x` twists, `+x` loop-complements,
/// `dx` dual-pivots at x.
pub fn parse_word(src: &str) -> Result<FlipWord, Error> {
    let mut steps = Vec::new();
    for token in src.split_whitespace() {
        let op = match token.chars().next() {
            Some('*') => FlipOp::Twist,
            Some('+') => FlipOp::LoopComplement,
            Some('d') => FlipOp::DualPivot,
            _ => {
                return Err(Error::parse(
                    0,
                    format!("`{token}` is not a flip token (expected *x, +x or dx)"),
                ))
            }
        };
        let label = &token[1..];
        validate_label(label).map_err(|e| Error::parse(0, e.to_string()))?;
        steps.push(FlipStep::new(op, label));
    }
    Ok(FlipWord::new(steps))
}
