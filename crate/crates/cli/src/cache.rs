//! Analysis-report cache, keyed by a content digest of the group.
//!
//! The key hashes the canonical table text (so two presentation files that
//! realize the same labeled table share an entry) together with the group's
//! name and the witness flag, both of which change the report body. Entries
//! are the machine rendering of the report; a hit is re-parsed into a
//! [`Report`] so either output style can be rendered from it. Anything
//! unreadable is treated as a miss — the cache can only ever be a speedup,
//! never a source of truth.

use std::path::{Path, PathBuf};

use outc_core::report::Report;
use outc_core::Result;
use sha2::{Digest, Sha256};

use crate::db::LoadedGroup;

/// `--cache` wins; otherwise `OUTC_CACHE_DIR`; otherwise caching is off.
pub fn resolve_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("OUTC_CACHE_DIR").map(PathBuf::from))
}

fn entry_path(dir: &Path, g: &LoadedGroup, witness: bool) -> PathBuf {
    let mut h = Sha256::new();
    h.update(g.name.as_bytes());
    h.update([0u8, witness as u8]);
    h.update(g.table.to_table_string().as_bytes());
    let digest = h.finalize();
    let mut name = String::with_capacity(64);
    for byte in digest {
        name.push_str(&format!("{byte:02x}"));
    }
    dir.join(format!("{name}.report"))
}

fn parse_entry(text: &str) -> Option<Report> {
    let mut r = Report::new();
    for line in text.lines() {
        let (k, v) = line.split_once(": ")?;
        r.push(k, v);
    }
    if r.is_empty() {
        None
    } else {
        Some(r)
    }
}

pub fn lookup(dir: Option<&Path>, g: &LoadedGroup, witness: bool) -> Option<Report> {
    let dir = dir?;
    let text = std::fs::read_to_string(entry_path(dir, g, witness)).ok()?;
    parse_entry(&text)
}

pub fn store(dir: Option<&Path>, g: &LoadedGroup, witness: bool, report: &Report) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    std::fs::create_dir_all(dir)?;
    std::fs::write(entry_path(dir, g, witness), report.render_machine())?;
    Ok(())
}
