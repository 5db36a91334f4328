//! Plot-ready CSV emission for grid scans.
//!
//! The schema is fixed: `index,re_s,im_s,log_mod,arg,extra,error`. Numbers
//! are written in scientific notation with 17 significant digits, enough
//! to round-trip any `f64` bit pattern, so downstream regression diffs are
//! exact. A point whose evaluation fails keeps its row — coordinates and
//! the error message — with the value columns empty; a scan never aborts
//! on a per-point domain error.

use std::io::{self, Write};

/// One evaluated grid point: either `(log_mod, arg, optional margin)` or
/// an error message.
pub struct Row {
    pub index: usize,
    pub re: f64,
    pub im: f64,
    pub outcome: Result<(f64, f64, Option<f64>), String>,
}

/// `f64` at 17 significant digits (lossless round-trip).
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Quotes a CSV field if it contains a delimiter, quote, or newline.
fn escape(field: &str) -> String {
    if field.contains(['"', ',', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Writes the header and all rows in index order.
pub fn write_rows<W: Write>(mut w: W, rows: &[Row]) -> io::Result<()> {
    writeln!(w, "index,re_s,im_s,log_mod,arg,extra,error")?;
    for row in rows {
        match &row.outcome {
            Ok((log_mod, arg, extra)) => writeln!(
                w,
                "{},{},{},{},{},{},",
                row.index,
                sig17(row.re),
                sig17(row.im),
                sig17(*log_mod),
                sig17(*arg),
                extra.map(sig17).unwrap_or_default(),
            )?,
            Err(message) => writeln!(
                w,
                "{},{},{},,,,{}",
                row.index,
                sig17(row.re),
                sig17(row.im),
                escape(message),
            )?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_round_trips_f64_exactly() {
        for &x in &[
            std::f64::consts::PI,
            -1.0 / 3.0,
            1e-300,
            6.02e23,
            0.1 + 0.2,
        ] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn error_rows_keep_coordinates_and_quote_commas() {
        let rows = vec![
            Row {
                index: 0,
                re: 1.0,
                im: 0.0,
                outcome: Ok((0.5, -0.25, None)),
            },
            Row {
                index: 1,
                re: 2.0,
                im: 3.0,
                outcome: Err("bad, \"quoted\" point".into()),
            },
        ];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "index,re_s,im_s,log_mod,arg,extra,error");
        assert!(lines[1].starts_with("0,1.0000000000000000e0,"));
        assert!(lines[1].ends_with(",,"), "empty extra and error: {}", lines[1]);
        assert!(lines[2].contains("\"bad, \"\"quoted\"\" point\""));
        assert!(lines[2].contains(",,,,"), "empty value columns");
    }
}
