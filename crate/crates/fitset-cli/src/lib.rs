//! Library surface of the `fitset` tool: corpus loading, the verification
//! suites, and the report document. The binary in `main.rs` is a thin
//! command-line layer over these.

pub mod corpus;
pub mod report;
pub mod suites;
