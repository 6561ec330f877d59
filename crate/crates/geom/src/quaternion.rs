use std::f64::consts::FRAC_PI_2;

use crate::euler::wrap_angle;
use crate::{EulerAngles, GeomError, Vec3};

/// Rotation quaternion, stored scalar-first as `(w, x, y, z)`.
///
/// Composition uses the Hamilton product; `a.multiply(&b)` applies `b` first
/// and `a` second when both are interpreted as rotations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Rotation of `angle` radians about `axis` (must be unit length).
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        let (s, c) = (angle / 2.0).sin_cos();
        Quaternion::new(c, axis[0] * s, axis[1] * s, axis[2] * s)
    }

    /// Hamilton product `self ⊗ rhs`.
    pub fn multiply(&self, rhs: &Quaternion) -> Quaternion {
        let (w1, x1, y1, z1) = (self.w, self.x, self.y, self.z);
        let (w2, x2, y2, z2) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Quaternion::new(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )
    }

    pub fn conjugate(&self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Unit-norm copy. The zero quaternion has no direction and is rejected.
    pub fn normalized(&self) -> Result<Quaternion, GeomError> {
        let n = self.norm();
        if !(n.is_finite() && n > 1e-150) {
            return Err(GeomError::ZeroQuaternion);
        }
        Ok(Quaternion::new(
            self.w / n,
            self.x / n,
            self.y / n,
            self.z / n,
        ))
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Component-wise sum; used when integrating quaternion derivatives.
    pub fn add(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }

    pub fn scaled(&self, k: f64) -> Quaternion {
        Quaternion::new(self.w * k, self.x * k, self.y * k, self.z * k)
    }

    pub fn dot(&self, rhs: &Quaternion) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    /// Rotate a vector: `q ⊗ (0, v) ⊗ q*`. The unit tag of `v` is unchanged;
    /// `self` must be unit norm within `1e-6`.
    pub fn rotate(&self, v: &Vec3) -> Result<Vec3, GeomError> {
        if !self.is_unit(1e-6) {
            return Err(GeomError::NotUnitQuaternion { norm: self.norm() });
        }
        // v' = v + 2 w (u x v) + 2 u x (u x v), with u the vector part.
        let u = [self.x, self.y, self.z];
        let uv = cross(u, v.components());
        let uuv = cross(u, uv);
        Ok(Vec3::new(
            v.x + 2.0 * (self.w * uv[0] + uuv[0]),
            v.y + 2.0 * (self.w * uv[1] + uuv[1]),
            v.z + 2.0 * (self.w * uv[2] + uuv[2]),
            v.unit,
        ))
    }

    /// Intrinsic Z-Y-X Euler angles of a unit quaternion.
    ///
    /// At the gimbal-lock singularity (`|pitch| = pi/2`) yaw and roll are not
    /// independent; by convention roll is reported as 0 and yaw absorbs the
    /// whole z-rotation.
    pub fn to_euler(&self) -> EulerAngles {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        let sinp = 2.0 * (w * y - z * x);
        if sinp.abs() >= 1.0 - 1e-12 {
            let pitch = FRAC_PI_2.copysign(sinp);
            let yaw = wrap_angle(2.0 * z.atan2(w));
            return EulerAngles::new(yaw, pitch, 0.0);
        }
        let yaw = (2.0 * (w * z + x * y)).atan2(1.0 - 2.0 * (y * y + z * z));
        let pitch = sinp.asin();
        let roll = (2.0 * (w * x + y * z)).atan2(1.0 - 2.0 * (x * x + y * y));
        EulerAngles::new(wrap_angle(yaw), pitch, wrap_angle(roll))
    }

    /// Quaternion for intrinsic Z-Y-X Euler angles (inverse of [`to_euler`]).
    ///
    /// [`to_euler`]: Quaternion::to_euler
    pub fn from_euler(e: &EulerAngles) -> Quaternion {
        let (sy, cy) = (e.yaw / 2.0).sin_cos();
        let (sp, cp) = (e.pitch / 2.0).sin_cos();
        let (sr, cr) = (e.roll / 2.0).sin_cos();
        Quaternion::new(
            cr * cp * cy + sr * sp * sy,
            sr * cp * cy - cr * sp * sy,
            cr * sp * cy + sr * cp * sy,
            cr * cp * sy - sr * sp * cy,
        )
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}
