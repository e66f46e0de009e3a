use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use super::Failure;
use crate::piecewise::StepFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Reads a step function; parse errors carry line and column.
pub(super) fn read_step(path: &Path) -> Result<StepFunction, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        // serde_json appends "at line L column C".
        Failure::Input(format!("malformed step function in {}: {e}", path.display()))
    })
}

pub(super) fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::Input(format!("serialization failed: {e}")))
}

/// Shortest decimal that reads back to the same double.
pub(super) fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// Output file or stdout, with its chosen format.
pub(super) struct Sink<'a> {
    out: Box<dyn Write + 'a>,
    format: Format,
}

impl<'a> Sink<'a> {
    /// `explicit` wins, then the file extension, then `default`.
    pub(super) fn open(
        path: Option<&Path>,
        explicit: Option<Format>,
        default: Format,
        stdout: &'a mut dyn Write,
    ) -> Result<Self, Failure> {
        let from_ext = path.and_then(|p| p.extension()).and_then(|e| e.to_str()).and_then(|e| {
            match e.to_ascii_lowercase().as_str() {
                "csv" => Some(Format::Csv),
                "json" | "jsonl" => Some(Format::Json),
                _ => None,
            }
        });
        let format = explicit.or(from_ext).unwrap_or(default);
        let out: Box<dyn Write + 'a> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).map_err(|e| Failure::Input(format!("cannot create {}: {e}", p.display())))?,
            )),
            None => Box::new(stdout),
        };
        Ok(Self { out, format })
    }

    pub(super) fn format(&self) -> Format {
        self.format
    }

    /// One JSON value per line.
    pub(super) fn json<T: Serialize>(&mut self, v: &T) -> Result<(), Failure> {
        let line = to_json(v)?;
        writeln!(self.out, "{line}")?;
        Ok(())
    }

    pub(super) fn csv(
        &mut self,
        header: &[&str],
        rows: impl IntoIterator<Item = Vec<f64>>,
    ) -> Result<(), Failure> {
        self.csv_strings(header, rows.into_iter().map(|r| r.into_iter().map(fmt_f64).collect()))
    }

    pub(super) fn csv_strings(
        &mut self,
        header: &[&str],
        rows: impl IntoIterator<Item = Vec<String>>,
    ) -> Result<(), Failure> {
        let mut w = csv::Writer::from_writer(&mut self.out);
        let err = |e: csv::Error| Failure::Input(format!("CSV write failed: {e}"));
        w.write_record(header).map_err(err)?;
        for r in rows {
            w.write_record(&r).map_err(err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub(super) fn finish(mut self) -> Result<(), Failure> {
        self.out.flush()?;
        Ok(())
    }
}
