//! The series-expansion machinery: moment integrals, generating-function
//! identities, and the multi-sum reduction pipeline.

pub mod genfun;
pub mod moments;
pub mod pipeline;

pub use pipeline::{pipeline_reduce, pipeline_relation, pipeline_value, Outcome};
