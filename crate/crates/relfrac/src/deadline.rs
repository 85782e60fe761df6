use std::time::{Duration, Instant};

use relfrac_core::budget::Deadline;

/// Expires a fixed duration after construction.
#[derive(Debug)]
pub struct WallClock {
    end: Option<Instant>,
}

impl WallClock {
    pub fn after(limit: Duration) -> WallClock {
        WallClock { end: Instant::now().checked_add(limit) }
    }
}

impl Deadline for WallClock {
    fn expired(&self) -> bool {
        self.end.is_some_and(|e| Instant::now() >= e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expiry() {
        assert!(WallClock::after(Duration::ZERO).expired());
        assert!(!WallClock::after(Duration::from_secs(3600)).expired());
        assert!(!WallClock::after(Duration::MAX).expired());
    }
}
