use std::io::{self, Read, Write};

use serde::{Deserialize, Serialize};

use crate::numerics::RngStream;

/// Magic prefix of the binary column format.
pub const BINARY_MAGIC: &[u8; 8] = b"SEPLAB01";

/// Which measure of a pair a batch was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Plus => "plus",
            Label::Minus => "minus",
        }
    }

    /// Sign carried by the label: `+1` for plus, `−1` for minus.
    pub fn sign(self) -> f64 {
        match self {
            Label::Plus => 1.0,
            Label::Minus => -1.0,
        }
    }
}

/// A reproducible batch of points drawn from one measure of a pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub points: Vec<Vec<f64>>,
    pub label: Label,
    /// The stream the batch was drawn from; replaying it reproduces the
    /// batch bit for bit.
    pub rng_fingerprint: RngStream,
}

impl SampleBatch {
    /// Ambient dimension of the points.
    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    /// CSV serialisation: header `x1,...,xd,label`, one row per point.
    ///
    /// Values use the shortest round-trip decimal form, `.` as the decimal
    /// separator and `\n` line endings, so output is byte-identical across
    /// runs and platforms.
    pub fn to_csv(&self) -> String {
        let d = self.dim();
        let mut out = String::new();
        for i in 1..=d {
            if i > 1 {
                out.push(',');
            }
            out.push_str(&format!("x{i}"));
        }
        out.push_str(",label\n");
        for p in &self.points {
            for (i, v) in p.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{v}"));
            }
            out.push(',');
            out.push_str(self.label.as_str());
            out.push('\n');
        }
        out
    }

    /// Binary column format: magic, `n`, `d`, label byte, stream fingerprint,
    /// then the data column-major as little-endian f64.
    pub fn write_binary(&self, w: &mut impl Write) -> io::Result<()> {
        let n = self.points.len() as u64;
        let d = self.dim() as u64;
        w.write_all(BINARY_MAGIC)?;
        w.write_all(&n.to_le_bytes())?;
        w.write_all(&d.to_le_bytes())?;
        w.write_all(&[match self.label {
            Label::Plus => 0u8,
            Label::Minus => 1u8,
        }])?;
        w.write_all(&self.rng_fingerprint.seed.to_le_bytes())?;
        w.write_all(&self.rng_fingerprint.stream_id.to_le_bytes())?;
        for j in 0..d as usize {
            for p in &self.points {
                w.write_all(&p[j].to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Inverse of [`SampleBatch::write_binary`].
    pub fn read_binary(r: &mut impl Read) -> io::Result<Self> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != BINARY_MAGIC {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "bad magic"));
        }
        let mut u64buf = [0u8; 8];
        let mut read_u64 = |r: &mut dyn Read| -> io::Result<u64> {
            r.read_exact(&mut u64buf)?;
            Ok(u64::from_le_bytes(u64buf))
        };
        let n = read_u64(r)? as usize;
        let d = read_u64(r)? as usize;
        let mut lb = [0u8; 1];
        r.read_exact(&mut lb)?;
        let label = match lb[0] {
            0 => Label::Plus,
            1 => Label::Minus,
            _ => return Err(io::Error::new(io::ErrorKind::InvalidData, "bad label")),
        };
        let mut buf = [0u8; 8];
        r.read_exact(&mut buf)?;
        let seed = u64::from_le_bytes(buf);
        r.read_exact(&mut buf)?;
        let stream_id = u64::from_le_bytes(buf);
        let mut points = vec![vec![0.0f64; d]; n];
        for j in 0..d {
            for p in points.iter_mut() {
                r.read_exact(&mut buf)?;
                p[j] = f64::from_le_bytes(buf);
            }
        }
        Ok(Self { points, label, rng_fingerprint: RngStream::new(seed, stream_id) })
    }
}
