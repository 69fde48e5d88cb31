//! Periodic status lines on stderr.

use std::io::Write;
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Rate-limited progress reporter. Lines go to stderr only, so they never
/// mix with the result document on stdout.
#[derive(Debug)]
pub struct Progress {
    interval: Option<Duration>,
    last: Mutex<Instant>,
}

impl Progress {
    /// `interval == 0` or `quiet` turns reporting off entirely.
    pub fn new(interval: Duration, quiet: bool) -> Self {
        let interval = (!quiet && !interval.is_zero()).then_some(interval);
        Progress { interval, last: Mutex::new(Instant::now()) }
    }

    pub fn disabled() -> Self {
        Progress::new(Duration::ZERO, true)
    }

    pub fn enabled(&self) -> bool {
        self.interval.is_some()
    }

    /// Prints `line()` if at least one interval has passed since the last
    /// printed line. `line` is not evaluated otherwise.
    pub fn tick(&self, line: impl FnOnce() -> String) {
        let Some(interval) = self.interval else { return };
        let mut last = self.last.lock().unwrap_or_else(|e| e.into_inner());
        if last.elapsed() >= interval {
            *last = Instant::now();
            let _ = writeln!(std::io::stderr().lock(), "{}", line());
        }
    }

    /// Prints unconditionally unless reporting is off.
    pub fn note(&self, line: impl FnOnce() -> String) {
        if self.enabled() {
            let _ = writeln!(std::io::stderr().lock(), "{}", line());
        }
    }
}
