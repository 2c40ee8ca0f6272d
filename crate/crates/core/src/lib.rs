pub mod algebra;
pub mod cli;
pub mod compactification;
pub mod error;
pub mod family;
pub mod lines;
pub mod metabelian;
pub mod omega_builder;
pub mod varieties;
pub mod verify;

pub use error::{Error, Result};
