use std::io::Write;

use serde::Serialize;

use crate::CliError;

/// Envelope of every JSON document the tool writes.
#[derive(Debug, Serialize)]
pub struct OutputRecord<T: Serialize> {
    pub kind: &'static str,
    pub payload: T,
    pub meta: Meta,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    #[serde(rename = "tool-version")]
    pub tool_version: &'static str,
    pub seed: Option<u64>,
    /// Only filled in on request, so repeated runs stay byte-identical.
    pub timestamp: Option<String>,
}

impl Meta {
    pub fn new(seed: Option<u64>, stamp: bool) -> Result<Self, CliError> {
        let timestamp = if stamp {
            let now = time::OffsetDateTime::now_utc();
            Some(
                now.format(&time::format_description::well_known::Rfc3339)
                    .map_err(|e| CliError::Io(std::io::Error::other(e)))?,
            )
        } else {
            None
        };
        Ok(Meta {
            tool_version: env!("CARGO_PKG_VERSION"),
            seed,
            timestamp,
        })
    }
}

pub fn write_json<T: Serialize>(
    out: &mut impl Write,
    kind: &'static str,
    payload: T,
    meta: &Meta,
) -> Result<(), CliError> {
    let record = OutputRecord {
        kind,
        payload,
        meta: meta.clone(),
    };
    serde_json::to_writer(&mut *out, &record)?;
    writeln!(out)?;
    Ok(())
}

/// CSV with a header row; floats use the shortest decimal that round-trips.
pub fn write_csv<W: Write>(
    out: &mut W,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<f64>>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(f64::to_string))?;
    }
    w.flush()?;
    Ok(())
}
