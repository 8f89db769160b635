//! Exact construction, verification and cataloguing of Davenport–Zannier
//! polynomial pairs, together with the weighted plane trees that index them.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod hall;
pub mod polycore;
pub mod seriesgen;
pub mod specfun;
pub mod treecombi;
pub mod verify;

pub use error::{DzError, Result};
