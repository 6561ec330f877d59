use std::f64::consts::PI;

use crate::{GeomError, Unit, Vec3};

/// Standard gravity in m/s^2, the factor between g and SI acceleration.
pub const STANDARD_GRAVITY: f64 = 9.80665;

/// Convert an accelerometer vector from g to m/s^2.
pub fn g_to_ms2(a: &Vec3) -> Result<Vec3, GeomError> {
    a.expect_unit(Unit::G)?;
    let mut v = a.scaled(STANDARD_GRAVITY);
    v.unit = Unit::MetersPerSec2;
    Ok(v)
}

/// Convert an angular-rate vector from deg/s to rad/s.
pub fn deg_to_rad(w: &Vec3) -> Result<Vec3, GeomError> {
    w.expect_unit(Unit::DegreesPerSec)?;
    let mut v = w.scaled(PI / 180.0);
    v.unit = Unit::RadiansPerSec;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_g_on_z_is_standard_gravity() {
        let a = Vec3::new(0.0, 0.0, 1.0, Unit::G);
        let v = g_to_ms2(&a).unwrap();
        assert_eq!(v.components(), [0.0, 0.0, 9.80665]);
        assert_eq!(v.unit, Unit::MetersPerSec2);
    }

    #[test]
    fn zero_converts_to_zero() {
        assert_eq!(
            g_to_ms2(&Vec3::zero(Unit::G)).unwrap().components(),
            [0.0; 3]
        );
        assert_eq!(
            deg_to_rad(&Vec3::zero(Unit::DegreesPerSec))
                .unwrap()
                .components(),
            [0.0; 3]
        );
    }

    #[test]
    fn scaling_is_linear() {
        let a = Vec3::new(2.0, 0.0, 0.0, Unit::G);
        let v = g_to_ms2(&a).unwrap();
        assert!((v.x - 19.6133).abs() < 1e-12);
    }

    #[test]
    fn half_turn_rate_is_pi() {
        let w = Vec3::new(180.0, 0.0, 90.0, Unit::DegreesPerSec);
        let v = deg_to_rad(&w).unwrap();
        assert!((v.x - PI).abs() < 1e-12);
        assert!((v.z - PI / 2.0).abs() < 1e-12);
        assert_eq!(v.unit, Unit::RadiansPerSec);
    }

    #[test]
    fn wrong_unit_is_rejected() {
        let a = Vec3::new(1.0, 0.0, 0.0, Unit::Tesla);
        assert!(matches!(
            g_to_ms2(&a),
            Err(GeomError::UnitMismatch { .. })
        ));
        let w = Vec3::new(1.0, 0.0, 0.0, Unit::RadiansPerSec);
        assert!(matches!(
            deg_to_rad(&w),
            Err(GeomError::UnitMismatch { .. })
        ));
    }
}
