use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative wall-clock limit polled from inside enumeration loops.
#[derive(Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: Cell<u32>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None, ticks: Cell::new(0) }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(timeout), ticks: Cell::new(0) }
    }

    pub fn until(deadline: Instant) -> Self {
        Budget { deadline: Some(deadline), ticks: Cell::new(0) }
    }

    /// Fails with [`Error::Interrupted`] once the deadline has passed. The clock is read
    /// on every 64th call.
    #[inline]
    pub fn check(&self) -> Result<()> {
        let Some(deadline) = self.deadline else { return Ok(()) };
        let t = self.ticks.get().wrapping_add(1);
        self.ticks.set(t);
        if t % 64 == 0 && Instant::now() >= deadline {
            return Err(Error::Interrupted);
        }
        Ok(())
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
