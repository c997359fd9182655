pub mod arith;
pub mod arrangement;
pub mod certifier;
pub mod cli;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod interpolation;
pub mod io;
pub mod render;
pub mod splitting;
