//! `KLT1` binary table cache.
//!
//! Layout: the four bytes `KLT1`, `p` as a little-endian `u64`, then the
//! `p - 1` values `K_p(1,1), …, K_p(p-1,1)` as little-endian IEEE-754 doubles.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use super::KloostermanTable;
use crate::error::{Error, Result};
use crate::modarith::check_prime;

pub const MAGIC: [u8; 4] = *b"KLT1";

const HEADER_LEN: usize = 12;

pub fn write_table<W: Write>(table: &KloostermanTable<f64>, mut w: W) -> Result<()> {
    let mut buf = Vec::with_capacity(HEADER_LEN + 8 * table.values().len());
    buf.extend_from_slice(&MAGIC);
    buf.extend_from_slice(&table.p().to_le_bytes());
    for v in table.values() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    w.write_all(&buf)?;
    w.flush()?;
    Ok(())
}

pub fn read_table<R: Read>(mut r: R) -> Result<KloostermanTable<f64>> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    parse(&bytes)
}

fn parse(bytes: &[u8]) -> Result<KloostermanTable<f64>> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Format(format!("file is {} bytes, shorter than the header", bytes.len())));
    }
    if bytes[..4] != MAGIC {
        return Err(Error::Format(format!("bad magic {:?}", &bytes[..4])));
    }
    let p = u64::from_le_bytes(bytes[4..12].try_into().expect("8-byte slice"));
    check_prime(p).map_err(|e| Error::Format(format!("header modulus: {e}")))?;
    let payload = &bytes[HEADER_LEN..];
    let expected = (p - 1) as usize * 8;
    if payload.len() != expected {
        return Err(Error::Format(format!("payload is {} bytes, expected {expected} for p = {p}", payload.len())));
    }
    let values = payload.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk"))).collect();
    KloostermanTable::from_values(p, values)
}

pub fn save_table(table: &KloostermanTable<f64>, path: impl AsRef<Path>) -> Result<()> {
    let file = fs::File::create(path)?;
    write_table(table, std::io::BufWriter::new(file))
}

pub fn load_table(path: impl AsRef<Path>) -> Result<KloostermanTable<f64>> {
    parse(&fs::read(path)?)
}
