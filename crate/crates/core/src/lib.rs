pub mod error;
pub mod graded;
pub mod gring;
pub mod koszul;
pub mod linalg;
pub mod mpoly;
pub mod nilhecke;
pub mod omega;
pub mod potential;
pub mod report;
pub mod runner;
pub mod text;
pub mod verma;
pub mod zastava;

pub use error::{Error, Result};
