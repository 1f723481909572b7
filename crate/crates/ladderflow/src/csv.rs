//! CSV serialization of sweep records.
//!
//! Layout: one leading comment line
//! `# ladderflow v<version> seed=<seed> n=<n> mode=<mode> rng=<id>` (fixed
//! sweeps append their preset/fixed angles), a header row
//! `index,phi_1,...,phi_m,d_meas_last,d_meas_secondlast,concurrence,branch_count`,
//! then one row per record. Angles and correlation values are printed with
//! 17 significant digits so that re-parsing reproduces the records exactly.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use ladderflow_core::experiments::SweepRecord;

use crate::DriverError;

/// Metadata recorded in the leading comment line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvMeta {
    pub seed: u64,
    pub n: u32,
    pub mode: String,
    /// Extra `key=value` tokens (preset name, fixed angles).
    pub extras: Vec<(String, String)>,
}

/// 17-significant-digit rendering; round-trips any f64 exactly.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write the full CSV document to `w`.
pub fn write_csv(
    w: &mut impl Write,
    meta: &CsvMeta,
    records: &[SweepRecord],
) -> io::Result<()> {
    write!(
        w,
        "# ladderflow v{} seed={} n={} mode={} rng={}",
        env!("CARGO_PKG_VERSION"),
        meta.seed,
        meta.n,
        meta.mode,
        crate::sweep::RNG_ID,
    )?;
    for (key, value) in &meta.extras {
        write!(w, " {key}={value}")?;
    }
    writeln!(w)?;

    let m = meta.n as usize - 3;
    write!(w, "index")?;
    for i in 1..=m {
        write!(w, ",phi_{i}")?;
    }
    writeln!(w, ",d_meas_last,d_meas_secondlast,concurrence,branch_count")?;

    for record in records {
        write!(w, "{}", record.index)?;
        for angle in &record.angles {
            write!(w, ",{}", format_value(*angle))?;
        }
        writeln!(
            w,
            ",{},{},{},{}",
            format_value(record.d_meas_last),
            format_value(record.d_meas_secondlast),
            format_value(record.concurrence),
            record.branch_count
        )?;
    }
    Ok(())
}

/// Write atomically: the document goes to `<path>.tmp` first and is renamed
/// into place only on success, so failures never leave partial output.
pub fn write_csv_file(
    path: &Path,
    meta: &CsvMeta,
    records: &[SweepRecord],
) -> Result<(), DriverError> {
    let tmp = path.with_extension("tmp");
    {
        let mut file = io::BufWriter::new(fs::File::create(&tmp)?);
        write_csv(&mut file, meta, records)?;
        file.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parse a CSV document produced by [`write_csv`].
pub fn read_csv(r: impl BufRead) -> Result<(String, Vec<SweepRecord>), DriverError> {
    let mut lines = r.lines();
    let comment = lines
        .next()
        .transpose()?
        .ok_or_else(|| DriverError::Csv(String::from("missing comment line")))?;
    if !comment.starts_with("# ladderflow ") {
        return Err(DriverError::Csv(String::from("first line is not a ladderflow comment")));
    }
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| DriverError::Csv(String::from("missing header row")))?;
    let columns: Vec<&str> = header.split(',').collect();
    if columns.first() != Some(&"index") || columns.len() < 5 {
        return Err(DriverError::Csv(format!("unexpected header row '{header}'")));
    }
    let m = columns.len() - 5;

    let mut records = Vec::new();
    for line in lines {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns.len() {
            return Err(DriverError::Csv(format!(
                "row has {} fields, expected {}",
                fields.len(),
                columns.len()
            )));
        }
        let parse_f = |s: &str| {
            s.parse::<f64>().map_err(|_| DriverError::Csv(format!("bad float '{s}'")))
        };
        let index = fields[0]
            .parse::<u64>()
            .map_err(|_| DriverError::Csv(format!("bad index '{}'", fields[0])))?;
        let angles = fields[1..1 + m].iter().map(|s| parse_f(s)).collect::<Result<_, _>>()?;
        records.push(SweepRecord {
            index,
            angles,
            d_meas_last: parse_f(fields[1 + m])?,
            d_meas_secondlast: parse_f(fields[2 + m])?,
            concurrence: parse_f(fields[3 + m])?,
            branch_count: fields[4 + m]
                .parse::<u32>()
                .map_err(|_| DriverError::Csv(format!("bad branch count '{}'", fields[4 + m])))?,
        });
    }
    Ok((comment, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_records() -> Vec<SweepRecord> {
        vec![
            SweepRecord {
                index: 0,
                angles: vec![0.1, core::f64::consts::TAU - 1e-16],
                d_meas_last: 0.123456789012345678,
                d_meas_secondlast: 1e-300,
                concurrence: 0.0,
                branch_count: 8,
            },
            SweepRecord {
                index: 1,
                angles: vec![5.0, 1.0 / 3.0],
                d_meas_last: 0.9999999999999999,
                d_meas_secondlast: 2.0f64.sqrt() / 2.0,
                concurrence: f64::MIN_POSITIVE,
                branch_count: 7,
            },
        ]
    }

    #[test]
    fn round_trips_records_exactly() {
        let meta = CsvMeta { seed: 11, n: 5, mode: String::from("random"), extras: vec![] };
        let mut buf = Vec::new();
        write_csv(&mut buf, &meta, &sample_records()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# ladderflow v"));
        assert!(text.contains("seed=11 n=5 mode=random rng=chacha12"));
        let (_, parsed) = read_csv(text.as_bytes()).unwrap();
        assert_eq!(parsed, sample_records());
    }

    #[test]
    fn header_row_matches_contract() {
        let meta = CsvMeta { seed: 0, n: 6, mode: String::from("fixed"), extras: vec![] };
        let mut buf = Vec::new();
        write_csv(&mut buf, &meta, &[]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let header = text.lines().nth(1).unwrap();
        assert_eq!(
            header,
            "index,phi_1,phi_2,phi_3,d_meas_last,d_meas_secondlast,concurrence,branch_count"
        );
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(read_csv("nonsense\n".as_bytes()).is_err());
        assert!(read_csv("# ladderflow v0 seed=0 n=4 mode=random rng=x\nbad\n".as_bytes()).is_err());
    }
}
