//! Parser and driver for the `ncgb` command-line tool.

pub mod parse;
pub mod run;

pub use parse::{parse_job, parse_poly, parse_poly_list, Job, ParseError, ParseErrorKind};
pub use run::{execute, render_json, render_text, run, OutputFormat, Report, RunError, RunOptions};
