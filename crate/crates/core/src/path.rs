//! Multi-coordinate paths sampled on a shared time mesh.
//!
//! A [`GridPath`] holds one value sequence per tracked coordinate, all
//! sampled at the same strictly increasing times starting at 0. It is the
//! common currency between the Skorokhod solver, the fluid integrator, and
//! the CLI exporters. Paths are interpreted as right-continuous between
//! mesh points; nothing in this module looks between samples.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic multi-coordinate path on a time mesh.
///
/// Coordinates are 1-indexed in the queueing interpretation (coordinate k
/// tracks the fraction of queues with at least k jobs); storage is 0-indexed.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPath {
    times: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl GridPath {
    /// Builds a path after checking the mesh invariants: a nonempty time
    /// mesh starting at 0 and strictly increasing, and one value row per
    /// coordinate, each as long as the mesh.
    pub fn new(times: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::InvalidPath("empty time mesh".into()));
        }
        if times[0] != 0.0 {
            return Err(Error::InvalidPath(format!(
                "mesh must start at 0, got {}",
                times[0]
            )));
        }
        if times.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidPath("non-finite mesh time".into()));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPath(
                "mesh times must be strictly increasing".into(),
            ));
        }
        for (k, row) in values.iter().enumerate() {
            if row.len() != times.len() {
                return Err(Error::InvalidPath(format!(
                    "coordinate {} has {} samples for a mesh of length {}",
                    k + 1,
                    row.len(),
                    times.len()
                )));
            }
        }
        Ok(Self { times, values })
    }

    /// Constructs without re-validating; for internal builders whose output
    /// is valid by construction.
    pub(crate) fn from_parts_unchecked(times: Vec<f64>, values: Vec<Vec<f64>>) -> Self {
        Self { times, values }
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Number of tracked coordinates M.
    pub fn coords(&self) -> usize {
        self.values.len()
    }

    /// Number of mesh points.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Value row of coordinate `k` (1-indexed).
    pub fn coord(&self, k: usize) -> &[f64] {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Final mesh time.
    pub fn horizon(&self) -> f64 {
        *self.times.last().expect("nonempty mesh")
    }

    /// Writes `t,x1,...,xM` rows with 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        write!(w, "t")?;
        for k in 1..=self.coords() {
            write!(w, ",x{k}")?;
        }
        writeln!(w)?;
        for i in 0..self.len() {
            write!(w, "{}", fmt_sig(self.times[i]))?;
            for row in &self.values {
                write!(w, ",{}", fmt_sig(row[i]))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    /// Parses the format produced by [`GridPath::write_csv`].
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
        let headers = rdr
            .headers()
            .map_err(|e| Error::Parse(format!("csv header: {e}")))?;
        let m = headers.len().saturating_sub(1);
        let mut times = Vec::new();
        let mut values = vec![Vec::new(); m];
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::Parse(format!("csv record {}: {e}", line + 2)))?;
            if rec.len() != m + 1 {
                return Err(Error::Parse(format!(
                    "csv record {}: expected {} fields, got {}",
                    line + 2,
                    m + 1,
                    rec.len()
                )));
            }
            let parse = |s: &str| -> Result<f64> {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("csv record {}: {e}", line + 2)))
            };
            times.push(parse(&rec[0])?);
            for k in 0..m {
                values[k].push(parse(&rec[k + 1])?);
            }
        }
        Self::new(times, values)
    }

    /// Serializes as a JSON array of `{ "t": ..., "x": [...] }` records.
    pub fn to_json_records(&self) -> String {
        let records: Vec<PointRecord> = (0..self.len())
            .map(|i| PointRecord {
                t: self.times[i],
                x: self.values.iter().map(|row| row[i]).collect(),
            })
            .collect();
        serde_json::to_string(&records).expect("grid path serializes")
    }

    /// Parses the format produced by [`GridPath::to_json_records`].
    pub fn from_json_records(s: &str) -> Result<Self> {
        let records: Vec<PointRecord> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("json records: {e}")))?;
        if records.is_empty() {
            return Err(Error::InvalidPath("empty time mesh".into()));
        }
        let m = records[0].x.len();
        if records.iter().any(|r| r.x.len() != m) {
            return Err(Error::Parse("json records have ragged coordinates".into()));
        }
        let times = records.iter().map(|r| r.t).collect();
        let values = (0..m)
            .map(|k| records.iter().map(|r| r.x[k]).collect())
            .collect();
        Self::new(times, values)
    }
}

#[derive(Serialize, Deserialize)]
struct PointRecord {
    t: f64,
    x: Vec<f64>,
}

/// Formats with 12 significant digits, the precision used by every CSV
/// emitted by this workspace.
pub fn fmt_sig(x: f64) -> String {
    if x == f64::NEG_INFINITY {
        return "-inf".into();
    }
    if x == f64::INFINITY {
        return "inf".into();
    }
    format!("{x:.11e}")
}
