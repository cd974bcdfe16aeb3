//! Decide universal theorems of synthetic plane geometries by translating
//! them into field arithmetic.

pub mod formula;
pub mod gtc;
pub mod poly;
pub mod ptr;
pub mod scheme;
pub mod segment;
pub mod structure;
pub mod theories;
