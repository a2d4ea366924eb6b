use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use num_complex::Complex64;

/// Writes `bytes` to `path` through a temporary file in the same directory, or to stdout.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes).context("writing stdout")?;
        return out.flush().context("writing stdout");
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// CSV table with `{}`-formatted (shortest round-trip) floats.
pub struct Csv {
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Result<Self> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        writer.write_record(header)?;
        Ok(Self { writer })
    }

    pub fn row(&mut self, fields: &[Field]) -> Result<()> {
        let mut record = Vec::with_capacity(fields.len() + 1);
        for f in fields {
            match *f {
                Field::Int(v) => record.push(v.to_string()),
                Field::Real(v) => record.push(real(v)),
                Field::Complex(z) => {
                    record.push(real(z.re));
                    record.push(real(z.im));
                }
                Field::Empty => record.push(String::new()),
            }
        }
        self.writer.write_record(&record)?;
        Ok(())
    }

    pub fn finish(self) -> Result<Vec<u8>> {
        self.writer.into_inner().map_err(|e| anyhow::anyhow!("flushing csv: {}", e.error()))
    }
}

/// Shortest round-trip decimal; negative zero prints as `0`.
fn real(v: f64) -> String {
    (v + 0.0).to_string()
}

pub enum Field {
    Int(usize),
    Real(f64),
    /// Two columns, real then imaginary part.
    Complex(Complex64),
    Empty,
}

pub fn json<T: serde::Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}
