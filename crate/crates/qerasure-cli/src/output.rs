//! Deterministic output formatting: RFC 4180 CSV (CRLF records, fixed
//! 6-decimal floats) and pretty JSON.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.6}")
}

/// Assemble a CSV document with CRLF record separators.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push_str("\r\n");
    for row in rows {
        out.push_str(&row.join(","));
        out.push_str("\r\n");
    }
    out
}

pub fn json_document<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable report");
    text.push('\n');
    text
}

/// Resolve the output destination: relative paths land under
/// QERASURE_OUT_DIR when that is set.
fn resolve(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("QERASURE_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

pub fn emit(out: &Option<PathBuf>, content: &str) -> io::Result<()> {
    match out {
        None => io::stdout().write_all(content.as_bytes()),
        Some(path) => {
            let target = resolve(path);
            if let Some(parent) = target.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)?;
                }
            }
            fs::write(target, content)
        }
    }
}
