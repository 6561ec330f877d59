use std::io::{BufRead, BufReader, Read, Write};

use airloc_geom::{Unit, Vec3};

use crate::FusionError;

/// One timestamped 9-DoF reading in raw device units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImuSample {
    /// Seconds, strictly increasing within a trace.
    pub t: f64,
    /// Accelerometer reading in g.
    pub accel: Vec3,
    /// Gyroscope reading in deg/s.
    pub gyro: Vec3,
    /// Magnetometer reading in tesla.
    pub mag: Vec3,
}

impl ImuSample {
    pub fn new(t: f64, accel: [f64; 3], gyro: [f64; 3], mag: [f64; 3]) -> Self {
        ImuSample {
            t,
            accel: Vec3::new(accel[0], accel[1], accel[2], Unit::G),
            gyro: Vec3::new(gyro[0], gyro[1], gyro[2], Unit::DegreesPerSec),
            mag: Vec3::new(mag[0], mag[1], mag[2], Unit::Tesla),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.accel.is_finite() && self.gyro.is_finite() && self.mag.is_finite()
    }
}

/// An ordered sequence of IMU samples.
///
/// The container itself is transparent; [`ImuTrace::validate`] checks the
/// trace invariants (non-empty, strictly increasing time, finite values) and
/// is called by every consumer that requires them.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ImuTrace {
    pub samples: Vec<ImuSample>,
}

/// Shared CSV header for IMU traces. Columns are seconds, g, deg/s and
/// microtesla; on-disk mag values are scaled from the in-memory tesla.
pub const TRACE_CSV_HEADER: &str = "t,ax,ay,az,gx,gy,gz,mx,my,mz";

const MICROTESLA_PER_TESLA: f64 = 1e6;

impl ImuTrace {
    pub fn new(samples: Vec<ImuSample>) -> Self {
        ImuTrace { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn validate(&self) -> Result<(), FusionError> {
        if self.samples.is_empty() {
            return Err(FusionError::EmptyTrace);
        }
        for (i, s) in self.samples.iter().enumerate() {
            if !s.is_finite() {
                return Err(FusionError::NonFiniteSample { index: i });
            }
            if i > 0 && s.t <= self.samples[i - 1].t {
                return Err(FusionError::NonMonotonicTimestamps { index: i });
            }
        }
        Ok(())
    }

    /// Write the trace in the shared CSV format (LF line endings).
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<(), FusionError> {
        writeln!(w, "{TRACE_CSV_HEADER}")?;
        for s in &self.samples {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{}",
                s.t,
                s.accel.x,
                s.accel.y,
                s.accel.z,
                s.gyro.x,
                s.gyro.y,
                s.gyro.z,
                s.mag.x * MICROTESLA_PER_TESLA,
                s.mag.y * MICROTESLA_PER_TESLA,
                s.mag.z * MICROTESLA_PER_TESLA,
            )?;
        }
        Ok(())
    }

    /// Read a trace from the shared CSV format and validate it.
    pub fn read_csv<R: Read>(r: R) -> Result<Self, FusionError> {
        let reader = BufReader::new(r);
        let mut samples = Vec::new();
        let mut lines = reader.lines().enumerate();

        let header = match lines.next() {
            Some((_, line)) => line?,
            None => return Err(FusionError::EmptyTrace),
        };
        if header.trim_end() != TRACE_CSV_HEADER {
            return Err(FusionError::CsvParse {
                line: 1,
                message: format!("expected header `{TRACE_CSV_HEADER}`, got `{header}`"),
            });
        }

        for (idx, line) in lines {
            let line = line?;
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 10 {
                return Err(FusionError::CsvParse {
                    line: line_no,
                    message: format!("expected 10 fields, got {}", fields.len()),
                });
            }
            let mut v = [0f64; 10];
            for (v, field) in v.iter_mut().zip(&fields) {
                *v = field.trim().parse().map_err(|e| FusionError::CsvParse {
                    line: line_no,
                    message: format!("bad number `{field}`: {e}"),
                })?;
            }
            samples.push(ImuSample::new(
                v[0],
                [v[1], v[2], v[3]],
                [v[4], v[5], v[6]],
                [
                    v[7] / MICROTESLA_PER_TESLA,
                    v[8] / MICROTESLA_PER_TESLA,
                    v[9] / MICROTESLA_PER_TESLA,
                ],
            ));
        }

        let trace = ImuTrace::new(samples);
        trace.validate()?;
        Ok(trace)
    }
}
