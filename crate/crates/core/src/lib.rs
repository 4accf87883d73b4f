pub mod analysis;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod matfunc;
pub mod schwarz;
pub mod steppers;
pub use error::{Error, Result};
