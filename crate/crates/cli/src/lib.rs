//! Command-line front end for `lgkit`: table and polynomial files, reports,
//! heatmaps, and the subcommands that tie them to the library.

pub mod cli;
pub mod plot;
pub mod polyfile;
pub mod report;
pub mod tablefile;

use std::fs;
use std::path::Path;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("USAGE: {0}")]
    Usage(String),
    #[error("IO_ERROR: {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    InFile { path: String, source: lgkit::Error },
    #[error(transparent)]
    Core(#[from] lgkit::Error),
}

impl CliError {
    pub fn in_file(path: &Path, source: lgkit::Error) -> Self {
        CliError::InFile {
            path: path.display().to_string(),
            source,
        }
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn core(&self) -> Option<&lgkit::Error> {
        match self {
            CliError::InFile { source, .. } | CliError::Core(source) => Some(source),
            _ => None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.core() {
            Some(e) if e.is_internal() => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Writes through a sibling temporary file and a rename, so readers never see
/// a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let name = path
        .file_name()
        .ok_or_else(|| CliError::Usage(format!("not a file path: {}", path.display())))?;
    let tmp = path.with_file_name(format!(
        ".{}.{}.tmp",
        name.to_string_lossy(),
        std::process::id()
    ));
    fs::write(&tmp, bytes).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::io(path, e)
    })
}
