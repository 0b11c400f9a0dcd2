//! Loading group files — single files and database directories.
//!
//! Two on-disk forms are understood: dense multiplication tables (`.tbl`)
//! and finite presentations (`.pres`), the latter realized through coset
//! enumeration. Directory loads are sorted by file name and enforce unique
//! group names, so everything downstream is deterministic.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use outc_core::coset::realize_presentation;
use outc_core::group::parse_table_str;
use outc_core::presentation::parse_presentation_file;
use outc_core::{Elem, Error, GroupTable, Result};

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Decide by extension: `.tbl` is a table, `.pres` a presentation.
    Auto,
    Table,
    Presentation,
}

/// One resolved input group.
pub struct LoadedGroup {
    pub name: String,
    /// `"table"` or `"presentation"` — which reader produced the group.
    pub source: &'static str,
    pub table: GroupTable,
    /// Generator names and their element images, when the input was a
    /// presentation. Tables carry no distinguished generators.
    pub gens: Option<(Vec<String>, Vec<Elem>)>,
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn decide(path: &Path, format: Format) -> Result<Format> {
    match format {
        Format::Auto => match path.extension().and_then(|e| e.to_str()) {
            Some("tbl") => Ok(Format::Table),
            Some("pres") => Ok(Format::Presentation),
            _ => Err(Error::Input(format!(
                "cannot infer the format of {} from its extension; pass --format",
                path.display()
            ))),
        },
        other => Ok(other),
    }
}

pub fn load_file(path: &Path, format: Format, max_cosets: usize) -> Result<LoadedGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Input(format!("cannot read {}: {e}", path.display()))
    })?;
    match decide(path, format)? {
        Format::Table => {
            let table = parse_table_str(&text)?;
            Ok(LoadedGroup {
                name: file_stem(path),
                source: "table",
                table,
                gens: None,
            })
        }
        Format::Presentation => {
            let (name, pres) = parse_presentation_file(&text)?;
            let gen_names = pres.gens.clone();
            let realized = realize_presentation(&pres, max_cosets)?;
            Ok(LoadedGroup {
                name: name.unwrap_or_else(|| file_stem(path)),
                source: "presentation",
                table: realized.table,
                gens: Some((gen_names, realized.gen_images)),
            })
        }
        Format::Auto => unreachable!("decide() never returns Auto"),
    }
}

/// Load every `.pres` / `.tbl` file directly under `dir`, sorted by file
/// name. Names must be unique across the directory.
pub fn load_dir(dir: &Path, format: Format, max_cosets: usize) -> Result<Vec<LoadedGroup>> {
    if !dir.is_dir() {
        return Err(Error::Input(format!("not a directory: {}", dir.display())));
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| {
            p.is_file()
                && matches!(
                    p.extension().and_then(|e| e.to_str()),
                    Some("pres") | Some("tbl")
                )
        })
        .collect();
    paths.sort();

    let mut groups = Vec::with_capacity(paths.len());
    for path in &paths {
        let g = load_file(path, format, max_cosets)?;
        if groups.iter().any(|seen: &LoadedGroup| seen.name == g.name) {
            return Err(Error::Input(format!(
                "duplicate group name {:?} in {}",
                g.name,
                dir.display()
            )));
        }
        groups.push(g);
    }
    Ok(groups)
}
