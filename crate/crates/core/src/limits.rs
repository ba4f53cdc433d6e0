use std::time::{Duration, Instant};

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};

pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// Resource budgets shared by enumeration, generators and scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted; never above [`MAX_VERTICES`].
    pub vertex_cap: usize,
    /// Most edges a clutter enumeration may produce before failing.
    pub enum_cap: usize,
    pub time_limit: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { vertex_cap: MAX_VERTICES, enum_cap: DEFAULT_ENUM_CAP, time_limit: None }
    }
}

impl Limits {
    pub fn check_vertices(&self, n: usize) -> Result<()> {
        let cap = self.vertex_cap.min(MAX_VERTICES);
        if n > cap {
            return Err(Error::VertexCap { n, cap });
        }
        Ok(())
    }

    pub fn deadline(&self) -> Deadline {
        Deadline(self.time_limit.map(|d| Instant::now() + d))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() > t => Err(Error::TimeLimit),
            _ => Ok(()),
        }
    }
}
