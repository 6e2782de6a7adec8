//! Command-line driver for `ordram-core`: text formats, a SAT cross-solver
//! and report rendering.
//!
//! [`run_with`] is the whole program; the binary only forwards its
//! arguments and standard streams.

pub mod cli;
mod commands;
pub mod formats;
pub mod report;
pub mod sat;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::cli::Cli;
use crate::commands::Ctx;

/// Parses `args` (program name first), runs the command and returns the
/// exit status: 0 success, 1 violated property or runtime failure, 2 usage
/// error.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let msg = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(msg.as_bytes()) } else { out.write_all(msg.as_bytes()) };
            return e.exit_code();
        }
    };
    let ctx = Ctx::from_global(&cli.global);
    let result = commands::dispatch(&cli.command, &ctx).and_then(|r| Ok((r.render(cli.global.format)?, r.violation)));
    match result {
        Ok((body, violation)) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, &body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(err, "error: {msg}");
                return 1;
            }
            i32::from(violation)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
