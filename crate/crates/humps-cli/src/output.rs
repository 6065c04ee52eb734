//! Record emission: JSON lines by default, CSV on request. One record type
//! per invocation, so the CSV header is stable within a run.

use std::io::{self, Write};

use serde::Serialize;

use crate::records::Diagnostic;

/// Exit codes used by every subcommand.
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

/// A failure that ends the run with a diagnostic instead of records.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: String,
    pub detail: String,
}

impl Failure {
    pub fn domain(error: impl Into<String>, detail: impl ToString) -> Failure {
        Failure {
            code: EXIT_DOMAIN,
            error: error.into(),
            detail: detail.to_string(),
        }
    }

    pub fn cap(detail: impl ToString) -> Failure {
        Failure {
            code: EXIT_CAP,
            error: "CapExceeded".into(),
            detail: detail.to_string(),
        }
    }

    /// Serializes the diagnostic to stderr and hands back the exit code.
    pub fn report(self) -> u8 {
        let diagnostic = Diagnostic {
            error: self.error,
            detail: self.detail,
        };
        let line = serde_json::to_string(&diagnostic).expect("diagnostics serialize");
        eprintln!("{line}");
        self.code
    }
}

fn swallow_broken_pipe(result: io::Result<()>) -> io::Result<()> {
    match result {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn emit_csv<T: Serialize>(records: impl IntoIterator<Item = T>) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(io::stdout().lock());
    for record in records {
        writer.serialize(record).map_err(io::Error::other)?;
    }
    writer.flush()
}

fn emit_jsonl<T: Serialize>(records: impl IntoIterator<Item = T>) -> io::Result<()> {
    let mut writer = io::BufWriter::new(io::stdout().lock());
    for record in records {
        serde_json::to_writer(&mut writer, &record)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()
}

/// Writes all records to stdout in the chosen format.
pub fn emit<T: Serialize>(csv_mode: bool, records: impl IntoIterator<Item = T>) -> io::Result<()> {
    let result = if csv_mode {
        emit_csv(records)
    } else {
        emit_jsonl(records)
    };
    swallow_broken_pipe(result)
}
