use std::f64::consts::PI;

/// Orientation as intrinsic Z-Y-X (yaw, pitch, roll) angles in radians.
///
/// Ranges: yaw and roll in `(-pi, pi]`, pitch in `[-pi/2, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    pub yaw: f64,
    pub pitch: f64,
    pub roll: f64,
}

impl EulerAngles {
    pub const fn new(yaw: f64, pitch: f64, roll: f64) -> Self {
        EulerAngles { yaw, pitch, roll }
    }

    pub const ZERO: EulerAngles = EulerAngles::new(0.0, 0.0, 0.0);
}

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut r = a.rem_euclid(2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    }
    r
}
