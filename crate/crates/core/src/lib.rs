pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod ideal_file;
pub mod lab;
pub mod local;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
