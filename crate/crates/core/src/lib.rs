//! Exact computations around elliptic conjugacy classes of Weyl groups,
//! C-small classes, Springer symbols and j-induction.

pub mod cli;
pub mod error;
pub mod field;
pub mod fixedpoint;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod representations;

pub use error::{Error, Result};
pub mod isometry;
pub mod label;
pub mod springer;
pub mod weyl;
