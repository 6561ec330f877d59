use crate::vector::Unit;

/// Errors raised by geometric and unit operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    /// Normalizing a quaternion whose norm is (numerically) zero.
    #[error("cannot normalize a zero quaternion")]
    ZeroQuaternion,

    /// An operation required a unit quaternion but got one with this norm.
    #[error("quaternion is not unit norm (|q| = {norm})")]
    NotUnitQuaternion { norm: f64 },

    /// A vector carried a different unit tag than the operation expects.
    #[error("unit mismatch: expected {expected}, got {found}")]
    UnitMismatch { expected: Unit, found: Unit },

    /// A value that must be finite was NaN or infinite.
    #[error("non-finite component in {context}")]
    NonFinite { context: &'static str },
}
