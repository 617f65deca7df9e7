//! JSON output with every float written to 17 significant digits.
//!
//! serde_json writes NaN and infinities as `null`; callers validate
//! finiteness before serializing.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

use crate::CliError;

/// `{:.16e}`: 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

struct ExactFloats;

impl Formatter for ExactFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON followed by a newline.
pub fn to_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, ExactFloats);
    value.serialize(&mut ser)?;
    let mut s = String::from_utf8(buf).expect("serde_json emits UTF-8");
    s.push('\n');
    Ok(s)
}
