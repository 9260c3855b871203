//! Run manifests: every subcommand writes a JSON manifest next to its
//! output so exact-arithmetic runs can be reproduced byte-for-byte with
//! `rerun --manifest <path>`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    /// Full argument vector after the binary name, exactly as parsed.
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub version: String,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(subcommand: &str, argv: &[String], seed: Option<u64>, outputs: &[PathBuf]) -> Self {
        RunManifest {
            subcommand: subcommand.to_string(),
            argv: argv.to_vec(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: outputs
                .iter()
                .map(|p| p.to_string_lossy().into_owned())
                .collect(),
        }
    }

    /// Writes the manifest next to the primary output (path + ".manifest.json").
    pub fn write_beside(&self, primary: &Path) -> std::io::Result<PathBuf> {
        let mut name = primary.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        let path = primary.with_file_name(name);
        fs::write(&path, serde_json::to_string_pretty(self).expect("serializable") + "\n")?;
        Ok(path)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Default output directory: $LOGCONC_OUT_DIR or the current directory.
pub fn default_out_dir() -> PathBuf {
    std::env::var_os("LOGCONC_OUT_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("report.txt");
        std::fs::write(&out, "x").unwrap();
        let m = RunManifest::new(
            "certify",
            &["certify".into(), "--select".into(), "all".into()],
            None,
            &[out.clone()],
        );
        let mp = m.write_beside(&out).unwrap();
        let back = RunManifest::load(&mp).unwrap();
        assert_eq!(back.subcommand, "certify");
        assert_eq!(back.argv.len(), 3);
        assert_eq!(back.outputs, m.outputs);
    }
}
