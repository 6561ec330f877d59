use std::fmt;
use std::ops::Neg;

use crate::GeomError;

/// Physical unit carried by a [`Vec3`].
///
/// The tag travels with the value through additive operations and scaling;
/// it only ever changes through the explicit conversion functions in
/// [`crate::units`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    /// Standard gravities (accelerometer raw output).
    G,
    /// Metres per second squared.
    MetersPerSec2,
    /// Degrees per second (gyroscope raw output).
    DegreesPerSec,
    /// Radians per second.
    RadiansPerSec,
    /// Tesla (magnetometer).
    Tesla,
    /// Metres (positions, displacements).
    Meters,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Unit::G => "g",
            Unit::MetersPerSec2 => "m/s^2",
            Unit::DegreesPerSec => "deg/s",
            Unit::RadiansPerSec => "rad/s",
            Unit::Tesla => "T",
            Unit::Meters => "m",
        };
        f.write_str(s)
    }
}

/// A 3-vector tagged with the physical unit of its components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub unit: Unit,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64, unit: Unit) -> Self {
        Vec3 { x, y, z, unit }
    }

    pub const fn zero(unit: Unit) -> Self {
        Vec3::new(0.0, 0.0, 0.0, unit)
    }

    /// Component array, dropping the unit tag.
    pub const fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Component-wise sum. The operands must carry the same unit.
    pub fn add(&self, rhs: &Vec3) -> Result<Vec3, GeomError> {
        self.check_unit(rhs)?;
        Ok(Vec3::new(
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
            self.unit,
        ))
    }

    /// Component-wise difference. The operands must carry the same unit.
    pub fn sub(&self, rhs: &Vec3) -> Result<Vec3, GeomError> {
        self.check_unit(rhs)?;
        Ok(Vec3::new(
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.unit,
        ))
    }

    /// Scaling by a dimensionless factor preserves the unit tag.
    pub fn scaled(&self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k, self.unit)
    }

    /// Dot product; both operands must carry the same unit.
    pub fn dot(&self, rhs: &Vec3) -> Result<f64, GeomError> {
        self.check_unit(rhs)?;
        Ok(self.x * rhs.x + self.y * rhs.y + self.z * rhs.z)
    }

    /// Euclidean norm in the vector's own unit.
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Unit-length direction as a bare component array, or `None` for the
    /// zero vector. Directions are dimensionless, hence no tag.
    pub fn direction(&self) -> Option<[f64; 3]> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some([self.x / n, self.y / n, self.z / n])
    }

    pub(crate) fn expect_unit(&self, expected: Unit) -> Result<(), GeomError> {
        if self.unit == expected {
            Ok(())
        } else {
            Err(GeomError::UnitMismatch {
                expected,
                found: self.unit,
            })
        }
    }

    fn check_unit(&self, rhs: &Vec3) -> Result<(), GeomError> {
        rhs.expect_unit(self.unit)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;

    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z, self.unit)
    }
}
