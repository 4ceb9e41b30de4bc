//! Outcomes of exact checks: a verdict per identity, and reports that
//! collect named verdicts for a whole structure.

use std::fmt;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

/// The first entry at which two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}): {} != {}",
            self.row,
            self.col,
            rational::format(&self.lhs),
            rational::format(&self.rhs)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    /// Compares two sides of a matrix identity entrywise.
    pub fn compare(lhs: &RatMatrix, rhs: &RatMatrix) -> Result<Self, Error> {
        if lhs.shape() != rhs.shape() {
            return Err(Error::Shape(format!(
                "sides of identity are {:?} and {:?}",
                lhs.shape(),
                rhs.shape()
            )));
        }
        Ok(match lhs.first_difference(rhs) {
            None => Verdict::Pass,
            Some((row, col)) => Verdict::Fail(Witness {
                row,
                col,
                lhs: lhs.get(row, col).clone(),
                rhs: rhs.get(row, col).clone(),
            }),
        })
    }

    pub fn zero(m: &RatMatrix) -> Self {
        Self::compare(m, &RatMatrix::zeros(m.rows(), m.cols())).expect("same shape")
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// First failure of a sequence of verdicts.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts
            .into_iter()
            .find(|v| !v.passed())
            .unwrap_or(Verdict::Pass)
    }
}

/// Splits a flat index of an `arity`-fold tensor power of a `d`-dimensional
/// space into its basis tuple.
pub fn decode_flat(mut index: usize, d: usize, arity: u32) -> Vec<usize> {
    let mut out = vec![0; arity as usize];
    for slot in out.iter_mut().rev() {
        *slot = index % d.max(1);
        index /= d.max(1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub axiom: String,
    pub required: bool,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Basis tuple of the witness column, when the column indexes a tensor power.
    pub column_basis: Option<Vec<usize>>,
    pub note: Option<String>,
}

impl CheckLine {
    pub fn from_verdict(axiom: impl Into<String>, required: bool, v: Verdict) -> Self {
        let (status, witness) = match v {
            Verdict::Pass => (Status::Pass, None),
            Verdict::Fail(w) => (Status::Fail, Some(w)),
        };
        Self {
            axiom: axiom.into(),
            required,
            status,
            witness,
            column_basis: None,
            note: None,
        }
    }

    pub fn with_columns(mut self, d: usize, arity: u32) -> Self {
        self.column_basis = self.witness.as_ref().map(|w| decode_flat(w.col, d, arity));
        self
    }

    pub fn failed(axiom: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            axiom: axiom.into(),
            required: true,
            status: Status::Fail,
            witness: None,
            column_basis: None,
            note: Some(note.into()),
        }
    }

    pub fn skipped(axiom: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            axiom: axiom.into(),
            required: true,
            status: Status::Skipped,
            witness: None,
            column_basis: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Named verdicts for one structure. Lines marked `required: false` are
/// diagnostics and do not affect [`Report::passed`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut line in other.lines {
            line.axiom = format!("{prefix}{}", line.axiom);
            self.lines.push(line);
        }
    }

    pub fn passed(&self) -> bool {
        self.lines
            .iter()
            .all(|l| !l.required || l.status == Status::Pass)
    }

    pub fn line(&self, axiom: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.axiom == axiom)
    }

    pub fn status(&self, axiom: &str) -> Option<Status> {
        self.line(axiom).map(|l| l.status)
    }

    /// Required lines that did not pass (failed or skipped).
    pub fn failures(&self) -> Vec<&str> {
        self.lines
            .iter()
            .filter(|l| l.required && l.status == Status::Fail)
            .map(|l| l.axiom.as_str())
            .collect()
    }
}
