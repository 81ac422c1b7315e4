//! Catalog file format, version 1.
//!
//! Byte layout (all integers little-endian):
//!
//! ```text
//! offset  size  field
//! 0       8     magic "TRIFGCAT"
//! 8       4     version (u32) = 1
//! 12      4     n (u32)
//! 16      1     mirror mode: 0 = off, 1 = on
//! 17      3     reserved, zero
//! 20      8     node count (u64)
//! 28      8     undirected edge count (u64)
//! 36      8     seed node index (u64)
//! 44      4     code length in digits (u32), always 7n - 12
//! 48      -     code table: node_count x code_len digits (u16 each),
//!               nodes in ascending code order
//! -       -     adjacency: per node, varint degree followed by the sorted
//!               neighbor ids delta-encoded (varint first id, then varint
//!               gaps); varints are LEB128
//! last    32    SHA-256 of every preceding byte
//! ```
//!
//! Node ids are code ranks, so a catalog's serialization is unique: two
//! catalogs with the same nodes and edges produce identical bytes.

use crate::canon::{CanonicalCode, MirrorMode};
use crate::flipgraph::FlipGraphCatalog;
use sha2::{Digest, Sha256};
use std::path::Path;
use thiserror::Error;

const MAGIC: &[u8; 8] = b"TRIFGCAT";
const VERSION: u32 = 1;
const CHECKSUM_LEN: usize = 32;

#[derive(Debug, Error)]
pub enum CatalogIoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("not a catalog file (bad magic)")]
    BadMagic,
    #[error("unsupported catalog version {0}")]
    UnsupportedVersion(u32),
    #[error("file truncated: needed {needed} more bytes")]
    Truncated { needed: usize },
    #[error("checksum mismatch: file is corrupt")]
    ChecksumMismatch,
    #[error("catalog was enumerated with mirror {file}, requested {requested}")]
    ModeMismatch { file: MirrorMode, requested: MirrorMode },
    #[error("catalog too large for format v1: {0}")]
    TooLarge(String),
    #[error("corrupt catalog: {0}")]
    Corrupt(String),
}

fn push_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            break;
        }
        out.push(byte | 0x80);
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Result<&'a [u8], CatalogIoError> {
        if self.pos + len > self.bytes.len() {
            return Err(CatalogIoError::Truncated { needed: self.pos + len - self.bytes.len() });
        }
        let slice = &self.bytes[self.pos..self.pos + len];
        self.pos += len;
        Ok(slice)
    }

    fn u32(&mut self) -> Result<u32, CatalogIoError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, CatalogIoError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn u16(&mut self) -> Result<u16, CatalogIoError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn varint(&mut self) -> Result<u64, CatalogIoError> {
        let mut x = 0u64;
        let mut shift = 0u32;
        loop {
            let byte = self.take(1)?[0];
            if shift >= 63 && byte > 1 {
                return Err(CatalogIoError::Corrupt("varint overflow".into()));
            }
            x |= u64::from(byte & 0x7f) << shift;
            if byte & 0x80 == 0 {
                return Ok(x);
            }
            shift += 7;
        }
    }
}

/// Serializes a catalog to the v1 byte layout.
pub fn to_bytes(cat: &FlipGraphCatalog) -> Result<Vec<u8>, CatalogIoError> {
    if cat.n() >= u16::MAX as usize {
        return Err(CatalogIoError::TooLarge(format!("n = {}", cat.n())));
    }
    let code_len = 7 * cat.n() - 12;
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(cat.n() as u32).to_le_bytes());
    out.push(match cat.mirror_mode() {
        MirrorMode::Off => 0,
        MirrorMode::On => 1,
    });
    out.extend_from_slice(&[0u8; 3]);
    out.extend_from_slice(&(cat.node_count() as u64).to_le_bytes());
    out.extend_from_slice(&(cat.edge_count() as u64).to_le_bytes());
    out.extend_from_slice(&(cat.seed_index() as u64).to_le_bytes());
    out.extend_from_slice(&(code_len as u32).to_le_bytes());
    for code in cat.codes() {
        debug_assert_eq!(code.digits().len(), code_len);
        for &digit in code.digits() {
            out.extend_from_slice(&(digit as u16).to_le_bytes());
        }
    }
    for id in 0..cat.node_count() {
        let row = cat.neighbors(id);
        push_varint(&mut out, row.len() as u64);
        let mut prev = 0u64;
        for (i, &w) in row.iter().enumerate() {
            let w = w as u64;
            push_varint(&mut out, if i == 0 { w } else { w - prev });
            prev = w;
        }
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    Ok(out)
}

/// Deserializes and verifies a v1 catalog. When `expect_mirror` is given,
/// a catalog enumerated under the other mode is rejected.
pub fn from_bytes(
    bytes: &[u8],
    expect_mirror: Option<MirrorMode>,
) -> Result<FlipGraphCatalog, CatalogIoError> {
    if bytes.len() < MAGIC.len() {
        return Err(CatalogIoError::Truncated { needed: MAGIC.len() - bytes.len() });
    }
    if &bytes[..MAGIC.len()] != MAGIC {
        return Err(CatalogIoError::BadMagic);
    }
    if bytes.len() < MAGIC.len() + 4 + CHECKSUM_LEN {
        return Err(CatalogIoError::Truncated {
            needed: MAGIC.len() + 4 + CHECKSUM_LEN - bytes.len(),
        });
    }
    let payload = &bytes[..bytes.len() - CHECKSUM_LEN];
    let stored = &bytes[bytes.len() - CHECKSUM_LEN..];
    let digest = Sha256::digest(payload);
    if digest.as_slice() != stored {
        return Err(CatalogIoError::ChecksumMismatch);
    }

    let mut r = Reader { bytes: payload, pos: MAGIC.len() };
    let version = r.u32()?;
    if version != VERSION {
        return Err(CatalogIoError::UnsupportedVersion(version));
    }
    let n = r.u32()? as usize;
    let mirror = match r.take(1)?[0] {
        0 => MirrorMode::Off,
        1 => MirrorMode::On,
        other => return Err(CatalogIoError::Corrupt(format!("mirror byte {other}"))),
    };
    r.take(3)?;
    if let Some(requested) = expect_mirror {
        if requested != mirror {
            return Err(CatalogIoError::ModeMismatch { file: mirror, requested });
        }
    }
    let node_count = r.u64()? as usize;
    let edge_count = r.u64()? as usize;
    let seed_index = r.u64()? as usize;
    let code_len = r.u32()? as usize;
    if n < 4 || code_len != 7 * n - 12 {
        return Err(CatalogIoError::Corrupt(format!("code length {code_len} for n={n}")));
    }
    if seed_index >= node_count {
        return Err(CatalogIoError::Corrupt("seed index out of range".into()));
    }
    let mut codes = Vec::with_capacity(node_count);
    for _ in 0..node_count {
        let mut digits = Vec::with_capacity(code_len);
        for _ in 0..code_len {
            digits.push(r.u16()? as u32);
        }
        codes.push(CanonicalCode::from_parts(mirror, digits));
    }
    if !codes.windows(2).all(|w| w[0] < w[1]) {
        return Err(CatalogIoError::Corrupt("codes not strictly sorted".into()));
    }
    let mut adjacency = Vec::with_capacity(node_count);
    let mut directed = 0usize;
    for _ in 0..node_count {
        let deg = r.varint()? as usize;
        if deg > 3 * n - 6 {
            return Err(CatalogIoError::Corrupt(format!("degree {deg} too large")));
        }
        let mut row = Vec::with_capacity(deg);
        let mut prev = 0u64;
        for i in 0..deg {
            let delta = r.varint()?;
            let id = if i == 0 { delta } else { prev + delta };
            if id >= node_count as u64 || (i > 0 && delta == 0) {
                return Err(CatalogIoError::Corrupt("bad neighbor id".into()));
            }
            row.push(id as u32);
            prev = id;
        }
        directed += deg;
        adjacency.push(row);
    }
    if r.pos != payload.len() {
        return Err(CatalogIoError::Corrupt("trailing bytes".into()));
    }
    if directed != 2 * edge_count {
        return Err(CatalogIoError::Corrupt("edge count disagrees with adjacency".into()));
    }
    Ok(FlipGraphCatalog::from_parts(n, mirror, codes, adjacency, seed_index))
}

pub fn save(cat: &FlipGraphCatalog, path: impl AsRef<Path>) -> Result<(), CatalogIoError> {
    std::fs::write(path, to_bytes(cat)?)?;
    Ok(())
}

pub fn load(
    path: impl AsRef<Path>,
    expect_mirror: Option<MirrorMode>,
) -> Result<FlipGraphCatalog, CatalogIoError> {
    from_bytes(&std::fs::read(path)?, expect_mirror)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flipgraph::{enumerate, EnumerateOptions};

    fn catalog(n: usize, mirror: MirrorMode) -> FlipGraphCatalog {
        enumerate(n, EnumerateOptions { mirror, ..EnumerateOptions::default() }).unwrap()
    }

    #[test]
    fn roundtrip_identity() {
        let cat = catalog(6, MirrorMode::On);
        let bytes = to_bytes(&cat).unwrap();
        let back = from_bytes(&bytes, None).unwrap();
        assert_eq!(back, cat);
    }

    #[test]
    fn serialization_is_stable() {
        let a = to_bytes(&catalog(6, MirrorMode::On)).unwrap();
        let b = to_bytes(&catalog(6, MirrorMode::On)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncation_detected() {
        let bytes = to_bytes(&catalog(6, MirrorMode::On)).unwrap();
        let cut = &bytes[..bytes.len() - 40];
        assert!(matches!(
            from_bytes(cut, None),
            Err(CatalogIoError::Truncated { .. }) | Err(CatalogIoError::ChecksumMismatch)
        ));
    }

    #[test]
    fn corruption_detected() {
        let mut bytes = to_bytes(&catalog(6, MirrorMode::On)).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 0xff;
        assert!(matches!(from_bytes(&bytes, None), Err(CatalogIoError::ChecksumMismatch)));
    }

    #[test]
    fn bad_magic_detected() {
        let mut bytes = to_bytes(&catalog(6, MirrorMode::On)).unwrap();
        bytes[0] = b'X';
        assert!(matches!(from_bytes(&bytes, None), Err(CatalogIoError::BadMagic)));
    }

    #[test]
    fn mode_mismatch_detected() {
        let bytes = to_bytes(&catalog(5, MirrorMode::On)).unwrap();
        match from_bytes(&bytes, Some(MirrorMode::Off)) {
            Err(CatalogIoError::ModeMismatch { file: MirrorMode::On, requested: MirrorMode::Off }) => {}
            other => panic!("expected mode mismatch, got {other:?}"),
        }
    }

    #[test]
    fn file_roundtrip() {
        let dir = std::env::temp_dir().join("triflip-storage-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("n6.cat");
        let cat = catalog(6, MirrorMode::On);
        save(&cat, &path).unwrap();
        let back = load(&path, Some(MirrorMode::On)).unwrap();
        assert_eq!(back, cat);
        std::fs::remove_file(&path).ok();
    }
}
