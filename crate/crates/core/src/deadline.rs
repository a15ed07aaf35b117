use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative cancellation point handed down to long computations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub const NONE: Deadline = Deadline(None);

    pub fn after(d: Duration) -> Self {
        Deadline(Some(Instant::now() + d))
    }

    pub fn at(instant: Instant) -> Self {
        Deadline(Some(instant))
    }

    pub fn is_set(&self) -> bool {
        self.0.is_some()
    }

    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() >= t => Err(Error::DeadlineExceeded),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_deadline_fails() {
        let d = Deadline::at(Instant::now() - Duration::from_millis(1));
        assert_eq!(d.check(), Err(Error::DeadlineExceeded));
        assert!(Deadline::NONE.check().is_ok());
    }
}
