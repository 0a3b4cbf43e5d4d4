//! Occupancy-coordinate state descriptors.
//!
//! A system of n exchangeable queues is summarized by the tail counts
//! `c_i = number of queues with at least i jobs`, i >= 1, a nonincreasing
//! integer sequence bounded by n. Fractions `c_i / n` are the occupancy
//! coordinates used everywhere else.

use crate::error::{Error, Result};

/// Limiting occupancy profile used to initialize systems of any size.
///
/// Stores the nonincreasing levels `x_1 >= x_2 >= ... >= 0` with finite
/// support; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialOccupancy {
    levels: Vec<f64>,
}

impl InitialOccupancy {
    pub fn new(mut levels: Vec<f64>) -> Result<Self> {
        while levels.last() == Some(&0.0) {
            levels.pop();
        }
        for (i, &x) in levels.iter().enumerate() {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::InvalidConfig(format!(
                    "initial occupancy level {} = {} outside [0, 1]",
                    i + 1,
                    x
                )));
            }
            if i > 0 && x > levels[i - 1] {
                return Err(Error::InvalidConfig(format!(
                    "initial occupancy must be nonincreasing (level {} = {} > level {} = {})",
                    i + 1,
                    x,
                    i,
                    levels[i - 1]
                )));
            }
        }
        Ok(Self { levels })
    }

    /// All queues empty.
    pub fn empty() -> Self {
        Self { levels: Vec::new() }
    }

    /// Every queue holding exactly one job.
    pub fn ones() -> Self {
        Self { levels: vec![1.0] }
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Converts to integer tail counts for an n-server system, rejecting
    /// levels that are not multiples of 1/n.
    pub fn to_counts(&self, n: u32) -> Result<Vec<u32>> {
        let nf = f64::from(n);
        self.levels
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let scaled = x * nf;
                let count = scaled.round();
                if (scaled - count).abs() > 1e-9 {
                    return Err(Error::NotOnGrid {
                        level: i + 1,
                        value: x,
                        n,
                    });
                }
                Ok(count as u32)
            })
            .collect()
    }
}

/// Tail counts of an n-queue system at one instant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyState {
    /// `counts[i]` is the number of queues with at least `i + 1` jobs.
    pub counts: Vec<u32>,
    pub n: u32,
}

impl OccupancyState {
    pub fn new(counts: Vec<u32>, n: u32) -> Result<Self> {
        let state = Self { counts, n };
        state.validate()?;
        Ok(state)
    }

    pub fn validate(&self) -> Result<()> {
        let mut prev = self.n;
        for (i, &c) in self.counts.iter().enumerate() {
            if c > prev {
                return Err(Error::InvalidConfig(format!(
                    "occupancy counts must be nonincreasing: c_{} = {} > c_{} = {}",
                    i + 1,
                    c,
                    i,
                    prev
                )));
            }
            prev = c;
        }
        Ok(())
    }

    /// Number of queues with at least `level` jobs (level >= 1).
    pub fn count_at_least(&self, level: usize) -> u32 {
        if level == 0 {
            self.n
        } else {
            self.counts.get(level - 1).copied().unwrap_or(0)
        }
    }

    /// Occupancy fraction at `level`.
    pub fn fraction(&self, level: usize) -> f64 {
        f64::from(self.count_at_least(level)) / f64::from(self.n)
    }

    /// Longest queue length present (0 when all queues are empty).
    pub fn max_length(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1)
    }

    /// Total number of jobs in the system.
    pub fn total_jobs(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }
}
