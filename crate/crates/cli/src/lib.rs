//! Command-line front end for `golden-core`: number and polynomial tables,
//! evaluation, Fibonomial triangles, Golden binomials and identity checks,
//! rendered as JSON, CSV, LaTeX or plain text.

pub mod commands;
pub mod document;
pub mod render;

pub use document::OutputDocument;
pub use render::{render, Format};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// An identity check failed.
    pub const VERIFICATION_FAILED: u8 = 1;
    /// Bad arguments or unwritable output.
    pub const USAGE: u8 = 2;
}
