pub mod algebra;
pub mod bar;
pub mod cli;
pub mod complex;
pub mod error;
pub mod fm;
pub mod gamma;
pub mod isogeny;
pub mod subgroups;

pub use error::{Error, Result};
