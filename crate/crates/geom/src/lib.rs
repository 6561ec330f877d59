//! Geometric and physical-unit primitives shared by the airloc pipeline.
//!
//! Everything here is a plain value: quaternions, unit-tagged 3-vectors and
//! Euler angles are `Copy`, operations are pure functions, and nothing holds
//! interior mutability, so all of it is safe to use from any thread.
//!
//! Conventions (fixed across the whole workspace):
//! - Quaternions are stored scalar-first `(w, x, y, z)` and compose with the
//!   Hamilton product.
//! - Euler angles use the intrinsic Z-Y-X (yaw, pitch, roll) convention with
//!   yaw, roll in `(-pi, pi]` and pitch in `[-pi/2, pi/2]`.
//! - The world frame is z-up; a level, upright sensor measures +1 g on its
//!   z axis and yaw 0 points along world x.

mod error;
mod euler;
mod quaternion;
mod units;
mod vector;

pub use error::GeomError;
pub use euler::{wrap_angle, EulerAngles};
pub use quaternion::Quaternion;
pub use units::{deg_to_rad, g_to_ms2, STANDARD_GRAVITY};
pub use vector::{Unit, Vec3};
