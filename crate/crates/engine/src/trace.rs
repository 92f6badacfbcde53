use std::fmt;

use hypca_rulecore::State;

use crate::EngineError;

/// States of named cells over time; row `i` is time `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<State>>,
}

impl Trace {
    pub fn new(columns: Vec<String>) -> Self {
        Trace { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<State>) {
        assert_eq!(row.len(), self.columns.len(), "trace rows are rectangular");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// State of `cell` at time `t` (1-based).
    pub fn get(&self, t: usize, cell: &str) -> Option<State> {
        let c = self.columns.iter().position(|n| n == cell)?;
        self.rows.get(t.checked_sub(1)?).map(|r| r[c])
    }

    /// Column of one cell over all times.
    pub fn column(&self, cell: &str) -> Option<Vec<State>> {
        let c = self.columns.iter().position(|n| n == cell)?;
        Some(self.rows.iter().map(|r| r[c]).collect())
    }

    /// Rows of `other` appended after ours (same columns required).
    pub fn concat(&self, other: &Trace) -> Result<Trace, EngineError> {
        if self.columns != other.columns {
            return Err(EngineError::ColumnMismatch { actual: self.columns.clone(), expected: other.columns.clone() });
        }
        let mut out = self.clone();
        out.rows.extend(other.rows.iter().cloned());
        Ok(out)
    }

    /// CSV text: header `t,<names>`, then `1,W,B,...`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let header = std::iter::once("t").chain(self.columns.iter().map(String::as_str));
        w.write_record(header).expect("in-memory write");
        for (i, row) in self.rows.iter().enumerate() {
            let mut rec = vec![(i + 1).to_string()];
            rec.extend(row.iter().map(|s| s.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    pub fn from_csv(text: &str) -> Result<Trace, EngineError> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
        let bad = |line: usize, msg: String| EngineError::BadTrace { line, msg };
        let header = r.headers().map_err(|e| bad(1, e.to_string()))?.clone();
        if header.get(0) != Some("t") {
            return Err(bad(1, "header must start with `t`".into()));
        }
        let mut trace = Trace::new(header.iter().skip(1).map(str::to_string).collect());
        for (i, rec) in r.records().enumerate() {
            let line = i + 2;
            let rec = rec.map_err(|e| bad(line, e.to_string()))?;
            if rec.get(0).and_then(|t| t.parse::<usize>().ok()) != Some(i + 1) {
                return Err(bad(line, format!("expected time {}", i + 1)));
            }
            let row = rec
                .iter()
                .skip(1)
                .map(|f| f.parse::<State>().map_err(|_| bad(line, format!("bad state {f:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != trace.columns.len() {
                return Err(bad(line, format!("{} states for {} columns", row.len(), trace.columns.len())));
            }
            trace.rows.push(row);
        }
        Ok(trace)
    }
}

impl fmt::Display for Trace {
    /// Aligned table, one row per time.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>3}", "t")?;
        for c in &self.columns {
            write!(f, " {c:>3}")?;
        }
        writeln!(f)?;
        for (i, row) in self.rows.iter().enumerate() {
            write!(f, "{:>3}", i + 1)?;
            for s in row {
                write!(f, " {s:>3}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A disagreement at one time and cell; `None` marks a missing row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEntry {
    pub time: usize,
    pub cell: String,
    pub expected: Option<State>,
    pub actual: Option<State>,
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: Option<State>| s.map_or("-".to_string(), |s| s.to_string());
        write!(f, "t={} {}: expected {}, got {}", self.time, self.cell, show(self.expected), show(self.actual))
    }
}

/// Empty iff the traces are identical.
pub fn trace_diff(actual: &Trace, expected: &Trace) -> Result<Vec<DiffEntry>, EngineError> {
    if actual.columns != expected.columns {
        return Err(EngineError::ColumnMismatch { actual: actual.columns.clone(), expected: expected.columns.clone() });
    }
    let mut out = Vec::new();
    for t in 0..actual.len().max(expected.len()) {
        let (a, e) = (actual.rows.get(t), expected.rows.get(t));
        for (c, name) in actual.columns.iter().enumerate() {
            let (av, ev) = (a.map(|r| r[c]), e.map(|r| r[c]));
            if av != ev {
                out.push(DiffEntry { time: t + 1, cell: name.clone(), expected: ev, actual: av });
            }
        }
    }
    Ok(out)
}
