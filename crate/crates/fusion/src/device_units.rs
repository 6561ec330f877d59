//! Fixed-point grid of the simulated IMU hardware.
//!
//! Sensor readings travel over the radio link as 32-bit fixed-point device
//! units. The tick sizes below define that grid; the simulator emits values
//! already snapped to it so that quantize/dequantize round trips are exact.

/// Accelerometer resolution: one tick = 1 micro-g.
pub const ACCEL_TICK_G: f64 = 1e-6;
/// Gyroscope resolution: one tick = 1 milli-degree/s.
pub const GYRO_TICK_DPS: f64 = 1e-3;
/// Magnetometer resolution: one tick = 1 nanotesla.
pub const MAG_TICK_TESLA: f64 = 1e-9;
/// Timestamp resolution: one tick = 1 microsecond.
pub const TIME_TICK_SECONDS: f64 = 1e-6;

/// Nearest tick count for a physical value, or `None` when the value is not
/// finite or overflows `i64`.
pub fn value_to_ticks(value: f64, tick: f64) -> Option<i64> {
    let scaled = (value / tick).round();
    if !scaled.is_finite() || scaled.abs() >= i64::MAX as f64 {
        return None;
    }
    Some(scaled as i64)
}

/// Physical value of a tick count.
pub fn ticks_to_value(ticks: i64, tick: f64) -> f64 {
    ticks as f64 * tick
}

/// Snap a value to the device grid. Values produced by this function survive
/// a `value_to_ticks`/`ticks_to_value` round trip bit-exactly.
pub fn snap_to_grid(value: f64, tick: f64) -> f64 {
    match value_to_ticks(value, tick) {
        Some(t) => ticks_to_value(t, tick),
        None => value,
    }
}
