//! Command-line layer over `fanideal-core`: JSON formats, instance
//! generation, verification campaigns and the decomposition check.

pub mod campaign;
pub mod cli;
pub mod decompose;
pub mod formats;
pub mod generate;
