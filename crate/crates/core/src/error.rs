use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the library.
///
/// Variants split into two families: input validation (rejected before any
/// work starts) and runtime aborts (a run that started could not finish).
/// [`Error::is_validation`] distinguishes them so callers can map exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// A mesh path failed a structural invariant (empty mesh, times not
    /// strictly increasing from 0, ragged coordinate rows, ...).
    #[error("invalid path: {0}")]
    InvalidPath(String),

    /// A reflection input starts above the domain cap.
    #[error("coordinate {coord}: initial value {value} exceeds cap {cap}")]
    InitialAboveCap { coord: usize, value: f64, cap: f64 },

    /// Two paths were expected to share a mesh and do not. No implicit
    /// resampling is ever performed.
    #[error("mesh mismatch: {0}")]
    MeshMismatch(String),

    /// A configuration value violates a precondition.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// An initial occupancy is not representable on the 1/n grid.
    #[error("initial occupancy level {level} = {value} is not a multiple of 1/{n}")]
    NotOnGrid { level: usize, value: f64, n: u32 },

    /// A queue reached the safety cap and the run was aborted.
    #[error("queue length reached max_level {max_level} at t = {time}; raise max_level if this growth is intended")]
    MaxLevelReached { max_level: usize, time: f64 },

    /// A control was evaluated outside the interval it is defined on.
    #[error("control lookup at t = {t} outside [0, {horizon}]")]
    ControlOutOfRange { t: f64, horizon: f64 },

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    /// A serialized document could not be parsed.
    #[error("parse: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that reject inputs up front, false for runtime aborts.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::MaxLevelReached { .. } | Error::Io(_))
    }
}
