//! Speedup, efficiency and Amdahl's law.

use std::time::Duration;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PerfError {
    #[error("serial fraction {0} is outside [0, 1]")]
    SerialFraction(f64),
    #[error("processor count must be at least 1")]
    NoProcessors,
    #[error("{which} time must be positive")]
    NonPositiveTime { which: &'static str },
    #[error("speedup {0} is not a finite non-negative number")]
    InvalidSpeedup(f64),
}

/// Serial fraction `f` and processor count `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmdahlParams {
    f: f64,
    p: u64,
}

impl AmdahlParams {
    pub fn new(f: f64, p: u64) -> Result<Self, PerfError> {
        if !(0.0..=1.0).contains(&f) {
            return Err(PerfError::SerialFraction(f));
        }
        if p == 0 {
            return Err(PerfError::NoProcessors);
        }
        Ok(AmdahlParams { f, p })
    }

    pub fn serial_fraction(&self) -> f64 {
        self.f
    }

    pub fn processors(&self) -> u64 {
        self.p
    }
}

/// A serial run and a parallel run of the same work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measurement {
    pub serial_time: Duration,
    pub parallel_time: Duration,
    pub processors: u64,
}

pub fn speedup(m: &Measurement) -> Result<f64, PerfError> {
    if m.serial_time.is_zero() {
        return Err(PerfError::NonPositiveTime { which: "serial" });
    }
    if m.parallel_time.is_zero() {
        return Err(PerfError::NonPositiveTime { which: "parallel" });
    }
    if m.processors == 0 {
        return Err(PerfError::NoProcessors);
    }
    Ok(m.serial_time.as_secs_f64() / m.parallel_time.as_secs_f64())
}

pub fn efficiency(speedup: f64, processors: u64) -> Result<f64, PerfError> {
    if processors == 0 {
        return Err(PerfError::NoProcessors);
    }
    if !speedup.is_finite() || speedup < 0.0 {
        return Err(PerfError::InvalidSpeedup(speedup));
    }
    Ok(speedup / processors as f64)
}

/// `1 / (f + (1 - f) / p)`.
pub fn amdahl_max_speedup(params: AmdahlParams) -> f64 {
    let AmdahlParams { f, p } = params;
    1.0 / (f + (1.0 - f) / p as f64)
}

pub fn amdahl_max_efficiency(params: AmdahlParams) -> f64 {
    amdahl_max_speedup(params) / params.p as f64
}

/// Rounds to `decimals` places, ties to even. Only for reporting.
pub fn round_half_even(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).round_ties_even() / scale
}
