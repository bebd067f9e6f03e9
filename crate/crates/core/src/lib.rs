pub mod certify;
pub mod cli;
pub mod error;
pub mod permgrp;
pub mod quotient;
pub mod rep;
pub mod surface;
pub mod symhom;
pub mod words;

pub use error::{Error, Result};
