//! Shared corpus loading for the integration tests: every bundled
//! presentation is enumerated once per test binary and memoized.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use once_cell::sync::Lazy;
use outc_core::coset::{realize_presentation, DEFAULT_MAX_COSETS};
use outc_core::group::Elem;
use outc_core::presentation::parse_presentation_file;
use outc_core::GroupTable;

pub struct CorpusEntry {
    pub table: GroupTable,
    /// Images of the presentation's generators in the table.
    pub gens: Vec<Elem>,
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub static CORPUS: Lazy<BTreeMap<String, CorpusEntry>> = Lazy::new(|| {
    let dir = corpus_dir().join("presentations");
    let mut paths: Vec<PathBuf> = fs::read_dir(&dir)
        .expect("corpus/presentations directory")
        .map(|e| e.expect("directory entry").path())
        .filter(|p| p.extension().and_then(|s| s.to_str()) == Some("pres"))
        .collect();
    paths.sort();
    let mut out = BTreeMap::new();
    for path in paths {
        let text = fs::read_to_string(&path).expect("readable presentation file");
        let (name, pres) = parse_presentation_file(&text)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let name = name.unwrap_or_else(|| {
            path.file_stem().expect("file stem").to_string_lossy().into_owned()
        });
        let real = realize_presentation(&pres, DEFAULT_MAX_COSETS)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let entry = CorpusEntry { table: real.table, gens: real.gen_images };
        assert!(out.insert(name.clone(), entry).is_none(), "duplicate corpus name {name}");
    }
    out
});

pub fn group(name: &str) -> &'static CorpusEntry {
    CORPUS
        .get(name)
        .unwrap_or_else(|| panic!("corpus group {name} missing"))
}

/// Load a directory of `.pres` / `.tbl` group files into (name, table)
/// pairs, sorted by name — the shape `scan_database` takes.
pub fn load_group_dir(dir: &std::path::Path) -> Vec<(String, GroupTable)> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.expect("directory entry").path())
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let ext = path.extension().and_then(|s| s.to_str());
        let stem = || path.file_stem().expect("file stem").to_string_lossy().into_owned();
        match ext {
            Some("pres") => {
                let text = fs::read_to_string(&path).expect("readable file");
                let (name, pres) = parse_presentation_file(&text)
                    .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
                let real = realize_presentation(&pres, DEFAULT_MAX_COSETS)
                    .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
                out.push((name.unwrap_or_else(stem), real.table));
            }
            Some("tbl") => {
                let text = fs::read_to_string(&path).expect("readable file");
                let table = outc_core::group::parse_table_str(&text)
                    .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
                out.push((stem(), table));
            }
            _ => {}
        }
    }
    out
}
