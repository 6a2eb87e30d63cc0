pub mod canonical;
pub mod classify;
pub mod error;
pub mod formats;
pub mod restrict;
pub mod solver;
pub mod zmatrix;

pub use error::{Error, ErrorClass, Result};
