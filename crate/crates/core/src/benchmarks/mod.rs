//! Catalog of objective functions with their domains and known optima.

pub mod functions;
mod registry;

pub use registry::{registry, BenchmarkFunction, CatalogEntry, Category, Registry};
