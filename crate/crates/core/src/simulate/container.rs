//! Binary ensemble container and its JSON sidecar.
//!
//! Layout (little-endian):
//!
//! ```text
//! "GGBM"  u16 version
//! f64 beta  f64 alpha  u32 d  u32 n_steps  f64 horizon  u64 n_paths  u64 seed
//! f64 × n_paths·d·(n_steps+1)   path-major, then component, then time
//! ```
//!
//! The sidecar `<file>.json` repeats the configuration in readable form.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::error::{Error, Result};
use crate::formfactor::GgbmParams;
use crate::simulate::{PathEnsemble, SimConfig};

pub const MAGIC: &[u8; 4] = b"GGBM";
pub const FORMAT_VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 8 + 8 + 4 + 4 + 8 + 8 + 8;

/// `<file>.json`
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

/// Write the container and its sidecar.
pub fn save_ensemble(ens: &PathEnsemble, path: &Path) -> Result<()> {
    let c = ens.config();
    let d = u32::try_from(c.d).map_err(|_| Error::Format("dimension does not fit in u32".into()))?;
    let n_steps = u32::try_from(c.n_steps).map_err(|_| Error::Format("n_steps does not fit in u32".into()))?;

    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&FORMAT_VERSION.to_le_bytes())?;
    w.write_all(&c.params.beta().to_le_bytes())?;
    w.write_all(&c.params.alpha().to_le_bytes())?;
    w.write_all(&d.to_le_bytes())?;
    w.write_all(&n_steps.to_le_bytes())?;
    w.write_all(&c.horizon.to_le_bytes())?;
    w.write_all(&(c.n_paths as u64).to_le_bytes())?;
    w.write_all(&c.seed.to_le_bytes())?;
    for v in ens.data() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;

    let sidecar = json!({
        "format": "ggbm-ensemble",
        "version": FORMAT_VERSION,
        "layout": ["path", "component", "time"],
        "byte_order": "little",
        "header_bytes": HEADER_LEN,
        "values": ens.data().len(),
        "config": c,
    });
    let mut s = BufWriter::new(File::create(sidecar_path(path))?);
    serde_json::to_writer_pretty(&mut s, &sidecar)?;
    s.write_all(b"\n")?;
    s.flush()?;
    Ok(())
}

/// Read a container; the sidecar is not needed.
pub fn load_ensemble(path: &Path) -> Result<PathEnsemble> {
    let mut r = BufReader::new(File::open(path)?);
    let mut header = [0u8; HEADER_LEN];
    r.read_exact(&mut header).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => Error::Format("file shorter than header".into()),
        _ => Error::Io(e),
    })?;
    if &header[..4] != MAGIC {
        return Err(Error::Format("bad magic bytes".into()));
    }
    let mut pos = 4;
    let mut take = |n: usize| {
        let s = &header[pos..pos + n];
        pos += n;
        s
    };
    let version = u16::from_le_bytes(take(2).try_into().unwrap());
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    let f64_at = |b: &[u8]| f64::from_le_bytes(b.try_into().unwrap());
    let beta = f64_at(take(8));
    let alpha = f64_at(take(8));
    let d = u32::from_le_bytes(take(4).try_into().unwrap()) as usize;
    let n_steps = u32::from_le_bytes(take(4).try_into().unwrap()) as usize;
    let horizon = f64_at(take(8));
    let n_paths = u64::from_le_bytes(take(8).try_into().unwrap());
    let seed = u64::from_le_bytes(take(8).try_into().unwrap());

    let params = GgbmParams::new(beta, alpha).map_err(|e| Error::Format(e.to_string()))?;
    let n_paths = usize::try_from(n_paths).map_err(|_| Error::Format("n_paths too large".into()))?;
    let config = SimConfig::new(params, d, n_steps, horizon, n_paths, seed).map_err(|e| Error::Format(e.to_string()))?;

    let count = n_paths
        .checked_mul(config.path_len())
        .ok_or_else(|| Error::Format("ensemble size overflows".into()))?;
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    if bytes.len() != count * 8 {
        return Err(Error::Format(format!(
            "expected {} data bytes, found {}",
            count * 8,
            bytes.len()
        )));
    }
    let data = bytes.chunks_exact(8).map(f64_at).collect();
    PathEnsemble::from_parts(config, data).map_err(|e| Error::Format(e.to_string()))
}
