//! Slice-regular functions over the octonions.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod series;
pub mod tolerance;
pub mod verify;
pub mod zeros;

pub use algebra::{Frame, Octonion, UnitImaginary};
pub use error::{Error, Result};
pub use series::{Regular, RegularRational, SliceSeries};
