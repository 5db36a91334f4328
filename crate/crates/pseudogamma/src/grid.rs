//! Evaluation grids: real intervals and circles about the symmetry point.
//!
//! Grids are deliberately dumb data: a spec validates itself and expands to
//! a concrete point list, and everything downstream consumes the points.
//! Two conventions matter for reproducibility:
//!
//! * open endpoints are realized by stepping inward by [`OPEN_OFFSET`]
//!   `= 2^-20`, an exact dyadic so the shifted endpoint is a single `f64`
//!   with no representation fuzz;
//! * the final point of an interval is assigned the endpoint value exactly
//!   rather than through the step recurrence, so closed right ends (where
//!   several verified bounds attain equality) are hit bit-for-bit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Exact dyadic inward offset (`2^-20`) used by open endpoint policies.
pub const OPEN_OFFSET: f64 = 9.5367431640625e-7;

/// Which endpoints of an interval are excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointPolicy {
    /// Both endpoints included.
    Closed,
    /// Left endpoint excluded: sampling starts at `start + OPEN_OFFSET`.
    OpenLeft,
    /// Right endpoint excluded: sampling stops at `end - OPEN_OFFSET`.
    OpenRight,
}

/// A sampling grid in the complex plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridSpec {
    /// `count` equispaced points on a real interval.
    Interval {
        start: f64,
        end: f64,
        count: usize,
        policy: EndpointPolicy,
    },
    /// `count` equispaced angles on a circle centered on the real axis.
    Circle {
        center_re: f64,
        radius: f64,
        count: usize,
    },
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GridError {
    #[error("grid requires at least {min} points, got {got}")]
    TooFewPoints { min: usize, got: usize },
    #[error("grid parameters must be finite")]
    NonFinite,
    #[error("interval is empty or inverted after applying the endpoint policy")]
    EmptyRange,
    #[error("circle radius must be positive, got {0}")]
    BadRadius(f64),
}

impl GridSpec {
    /// The canonical sharpened-bound grid: 64 points on the half-open
    /// interval `(1/2, 2]`, left end sampled at `1/2 + 2^-20` and right end
    /// exactly at `2`.
    pub fn theorem1_default() -> GridSpec {
        GridSpec::Interval {
            start: 0.5,
            end: 2.0,
            count: 64,
            policy: EndpointPolicy::OpenLeft,
        }
    }

    pub fn validate(&self) -> Result<(), GridError> {
        match *self {
            GridSpec::Interval {
                start,
                end,
                count,
                policy,
            } => {
                if !start.is_finite() || !end.is_finite() {
                    return Err(GridError::NonFinite);
                }
                if count < 2 {
                    return Err(GridError::TooFewPoints { min: 2, got: count });
                }
                let (lo, hi) = effective_range(start, end, policy);
                if lo >= hi {
                    return Err(GridError::EmptyRange);
                }
                Ok(())
            }
            GridSpec::Circle {
                center_re,
                radius,
                count,
            } => {
                if !center_re.is_finite() || !radius.is_finite() {
                    return Err(GridError::NonFinite);
                }
                if radius <= 0.0 {
                    return Err(GridError::BadRadius(radius));
                }
                if count < 4 {
                    return Err(GridError::TooFewPoints { min: 4, got: count });
                }
                Ok(())
            }
        }
    }

    /// Expands the spec to its point list (deterministic order).
    pub fn points(&self) -> Result<Vec<Complex64>, GridError> {
        self.validate()?;
        match *self {
            GridSpec::Interval {
                start,
                end,
                count,
                policy,
            } => {
                let (lo, hi) = effective_range(start, end, policy);
                let step = (hi - lo) / (count as f64 - 1.0);
                let mut pts = Vec::with_capacity(count);
                for i in 0..count {
                    let u = if i + 1 == count {
                        hi
                    } else {
                        lo + step * i as f64
                    };
                    pts.push(Complex64::new(u, 0.0));
                }
                Ok(pts)
            }
            GridSpec::Circle {
                center_re,
                radius,
                count,
            } => {
                let mut pts = Vec::with_capacity(count);
                for j in 0..count {
                    // Angle 2*pi*j/count expressed in half-turn units; the
                    // shared reduction keeps the cardinal angles exact.
                    let x = 2.0 * j as f64 / count as f64;
                    let (s, c) = crate::dd::Dd::sincos_pi_f64(x);
                    pts.push(Complex64::new(center_re + radius * c, radius * s));
                }
                Ok(pts)
            }
        }
    }
}

fn effective_range(start: f64, end: f64, policy: EndpointPolicy) -> (f64, f64) {
    match policy {
        EndpointPolicy::Closed => (start, end),
        EndpointPolicy::OpenLeft => (start + OPEN_OFFSET, end),
        EndpointPolicy::OpenRight => (start, end - OPEN_OFFSET),
    }
}
