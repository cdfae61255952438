pub mod bounds;
pub mod cli;
pub mod exactmath;
pub mod feasibility;
pub mod field;
pub mod scheme;
pub mod towers;
