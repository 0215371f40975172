//! Wall-clock stamps plus monotonic phase durations.

use std::time::Instant;

use chrono::{DateTime, TimeZone, Utc};
use thiserror::Error;

pub const FIXED_CLOCK_ENV: &str = "EPIT_FIXED_CLOCK";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{FIXED_CLOCK_ENV} must be an integer number of epoch seconds, got {0:?}")]
pub struct ClockError(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Clock {
    #[default]
    System,
    /// Pins both wall clock and elapsed time (always 0 ms).
    Fixed(i64),
}

impl Clock {
    pub fn from_env() -> Result<Clock, ClockError> {
        match std::env::var(FIXED_CLOCK_ENV) {
            Ok(v) => Clock::parse_fixed(&v),
            Err(_) => Ok(Clock::System),
        }
    }

    pub fn parse_fixed(value: &str) -> Result<Clock, ClockError> {
        let secs: i64 = value
            .trim()
            .parse()
            .map_err(|_| ClockError(value.to_owned()))?;
        Utc.timestamp_opt(secs, 0)
            .single()
            .ok_or_else(|| ClockError(value.to_owned()))?;
        Ok(Clock::Fixed(secs))
    }

    fn wall_now(self) -> DateTime<Utc> {
        match self {
            Clock::System => Utc::now(),
            Clock::Fixed(secs) => Utc
                .timestamp_opt(secs, 0)
                .single()
                .expect("validated in parse_fixed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseTiming {
    pub name: &'static str,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseTimings {
    pub start: DateTime<Utc>,
    pub end: DateTime<Utc>,
    /// Monotonic; independent of `start`/`end`.
    pub elapsed_ms: u64,
    pub phases: Vec<PhaseTiming>,
}

impl PhaseTimings {
    /// Both stamps at the clock's current time, zero elapsed.
    pub fn instant(clock: Clock) -> Self {
        let now = clock.wall_now();
        PhaseTimings {
            start: now,
            end: now,
            elapsed_ms: 0,
            phases: Vec::new(),
        }
    }
}

/// `YYYY/MM/DD HH:MM:SS`.
pub fn format_wall(t: &DateTime<Utc>) -> String {
    t.format("%Y/%m/%d %H:%M:%S").to_string()
}

pub fn format_iso(t: &DateTime<Utc>) -> String {
    t.to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn millis(since: Instant) -> u64 {
    since.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

/// Times a sequence of pipeline phases.
pub struct PhaseTimer {
    clock: Clock,
    start_wall: DateTime<Utc>,
    start: Instant,
    phases: Vec<PhaseTiming>,
}

impl PhaseTimer {
    pub fn start(clock: Clock) -> Self {
        PhaseTimer {
            clock,
            start_wall: clock.wall_now(),
            start: Instant::now(),
            phases: Vec::new(),
        }
    }

    pub fn start_wall(&self) -> DateTime<Utc> {
        self.start_wall
    }

    pub fn phase<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let t0 = Instant::now();
        let out = f();
        let elapsed_ms = match self.clock {
            Clock::System => millis(t0),
            Clock::Fixed(_) => 0,
        };
        self.phases.push(PhaseTiming { name, elapsed_ms });
        out
    }

    pub fn finish(self) -> PhaseTimings {
        let elapsed_ms = match self.clock {
            Clock::System => {
                // Millisecond truncation can put a phase above the total.
                let longest = self.phases.iter().map(|p| p.elapsed_ms).max().unwrap_or(0);
                millis(self.start).max(longest)
            }
            Clock::Fixed(_) => 0,
        };
        PhaseTimings {
            start: self.start_wall,
            end: self.clock.wall_now(),
            elapsed_ms,
            phases: self.phases,
        }
    }
}
