use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Numeric tolerances shared by every module.
///
/// Exact values on the cuboctahedron live on a coarse grid (angles are
/// multiples of π/12, lengths lie in ℚ(√2, √3)), so these defaults separate
/// distinct values by many orders of magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Length tolerance, in edge-length units.
    pub eps_len: f64,
    /// Angle tolerance, in radians.
    pub eps_ang: f64,
    /// Snapping tolerance for the π/12 angle grid.
    pub snap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps_len: 1e-9,
            eps_ang: 1e-9,
            snap: 1e-6,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ToleranceError {
    #[error("eps_len must lie in (0, 1e-6], got {0}")]
    EpsLen(f64),
    #[error("eps_ang must lie in (0, 1e-6], got {0}")]
    EpsAng(f64),
    #[error("snap ({snap}) must be at least eps_ang ({eps_ang})")]
    Snap { snap: f64, eps_ang: f64 },
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), ToleranceError> {
        if !(self.eps_len > 0.0 && self.eps_len <= 1e-6) {
            return Err(ToleranceError::EpsLen(self.eps_len));
        }
        if !(self.eps_ang > 0.0 && self.eps_ang <= 1e-6) {
            return Err(ToleranceError::EpsAng(self.eps_ang));
        }
        if self.snap.is_nan() || self.snap < self.eps_ang {
            return Err(ToleranceError::Snap {
                snap: self.snap,
                eps_ang: self.eps_ang,
            });
        }
        Ok(())
    }
}

/// π/12, the angular quantum of vertex-to-vertex geodesics on the cuboctahedron.
pub const ANGLE_QUANTUM: f64 = std::f64::consts::PI / 12.0;

/// Snap an angle to the π/12 grid. Returns the integer multiple when the
/// angle is within `snap` of it.
pub fn snap_to_grid(angle: f64, snap: f64) -> Option<i64> {
    let k = (angle / ANGLE_QUANTUM).round();
    if (angle - k * ANGLE_QUANTUM).abs() <= snap {
        Some(k as i64)
    } else {
        None
    }
}
