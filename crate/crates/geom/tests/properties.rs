use airloc_geom::{deg_to_rad, g_to_ms2, EulerAngles, Quaternion, Unit, Vec3};
use proptest::prelude::*;

fn unit_quaternion() -> impl Strategy<Value = Quaternion> {
    // Rejection-free sampling: normalize a random non-tiny 4-vector.
    (
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
    )
        .prop_filter_map("norm too small", |(w, x, y, z)| {
            Quaternion::new(w, x, y, z).normalized().ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    // Round trip through Euler angles recovers the rotation: q and -q encode
    // the same rotation, so compare up to sign.
    #[test]
    fn euler_round_trip_recovers_rotation(q in unit_quaternion()) {
        let e = q.to_euler();
        // Stay away from the gimbal-lock singularity where roll is collapsed
        // into yaw by convention.
        prop_assume!(e.pitch.abs() < std::f64::consts::FRAC_PI_2 - 1e-3);
        let r = Quaternion::from_euler(&e);
        let sign = if q.dot(&r) >= 0.0 { 1.0 } else { -1.0 };
        prop_assert!((q.w - sign * r.w).abs() < 1e-6);
        prop_assert!((q.x - sign * r.x).abs() < 1e-6);
        prop_assert!((q.y - sign * r.y).abs() < 1e-6);
        prop_assert!((q.z - sign * r.z).abs() < 1e-6);
    }

    #[test]
    fn multiplication_is_associative(
        a in unit_quaternion(),
        b in unit_quaternion(),
        c in unit_quaternion(),
    ) {
        let lhs = a.multiply(&b).multiply(&c);
        let rhs = a.multiply(&b.multiply(&c));
        prop_assert!((lhs.w - rhs.w).abs() < 1e-9);
        prop_assert!((lhs.x - rhs.x).abs() < 1e-9);
        prop_assert!((lhs.y - rhs.y).abs() < 1e-9);
        prop_assert!((lhs.z - rhs.z).abs() < 1e-9);
    }

    #[test]
    fn product_norm_is_norm_product(
        a in unit_quaternion(),
        b in unit_quaternion(),
        s in 0.1f64..3.0,
        t in 0.1f64..3.0,
    ) {
        let p = a.scaled(s).multiply(&b.scaled(t));
        prop_assert!((p.norm() - s * t).abs() < 1e-9);
    }

    #[test]
    fn rotation_preserves_norm_and_dot(
        q in unit_quaternion(),
        v in (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0),
        u in (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0),
    ) {
        let v = Vec3::new(v.0, v.1, v.2, Unit::Meters);
        let u = Vec3::new(u.0, u.1, u.2, Unit::Meters);
        let rv = q.rotate(&v).unwrap();
        let ru = q.rotate(&u).unwrap();
        prop_assert!((rv.norm() - v.norm()).abs() < 1e-9);
        prop_assert!((rv.dot(&ru).unwrap() - v.dot(&u).unwrap()).abs() < 1e-8);
        prop_assert_eq!(rv.unit, v.unit);
    }

    // Unit conversions are linear maps: f(alpha * v) = alpha * f(v), up to
    // the one-ulp reordering of the two multiplications.
    #[test]
    fn conversions_are_linear(
        v in (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0),
        alpha in -5.0f64..5.0,
    ) {
        let close = |a: &Vec3, b: &Vec3| {
            a.unit == b.unit
                && (a.x - b.x).abs() <= 1e-12 * (1.0 + a.x.abs())
                && (a.y - b.y).abs() <= 1e-12 * (1.0 + a.y.abs())
                && (a.z - b.z).abs() <= 1e-12 * (1.0 + a.z.abs())
        };

        let a = Vec3::new(v.0, v.1, v.2, Unit::G);
        let lhs = g_to_ms2(&a.scaled(alpha)).unwrap();
        let rhs = g_to_ms2(&a).unwrap().scaled(alpha);
        prop_assert!(close(&lhs, &rhs));

        let w = Vec3::new(v.0, v.1, v.2, Unit::DegreesPerSec);
        let lhs = deg_to_rad(&w.scaled(alpha)).unwrap();
        let rhs = deg_to_rad(&w).unwrap().scaled(alpha);
        prop_assert!(close(&lhs, &rhs));
    }
}

#[test]
fn euler_to_quat_matches_axis_angle_composition() {
    let e = EulerAngles::new(0.4, -0.3, 1.1);
    let qz = Quaternion::from_axis_angle([0.0, 0.0, 1.0], e.yaw);
    let qy = Quaternion::from_axis_angle([0.0, 1.0, 0.0], e.pitch);
    let qx = Quaternion::from_axis_angle([1.0, 0.0, 0.0], e.roll);
    let composed = qz.multiply(&qy).multiply(&qx);
    let direct = Quaternion::from_euler(&e);
    assert!((composed.w - direct.w).abs() < 1e-12);
    assert!((composed.x - direct.x).abs() < 1e-12);
    assert!((composed.y - direct.y).abs() < 1e-12);
    assert!((composed.z - direct.z).abs() < 1e-12);
}
