//! Schnyder decompositions of d-angulations, their duals on d-regular
//! plane graphs, and grid drawings of 4-regular plane graphs of mincut 4.

pub mod cli;
pub mod drawing;
pub mod duality;
pub mod error;
pub mod even;
pub mod orientation;
pub mod planar_map;
pub mod sampler;
pub mod schnyder;

pub use error::{Error, Result};
