//! Command-line surface and the algebra file formats.
//!
//! Exit codes: 0 success, 1 a check or precondition failed, 2 malformed
//! input or usage. Results go to stdout, diagnostics to stderr.

mod commands;
pub mod format;

pub use commands::{run, Cli};
pub use format::{
    assemble, check_raw, parse_frl, parse_raw, render_frl, render_json, render_raw,
    split_documents, to_raw, FrlError, RawAlgebra,
};
