//! Run manifests: a JSON sidecar recording what a run consumed and produced,
//! with SHA-256 digests, so any artifact can be re-checked byte for byte.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    /// A path, or a pseudo-label like `<stdin>` / `<stdout>`.
    pub path: String,
    pub sha256: String,
}

pub fn digest_file(path: &Path) -> io::Result<FileDigest> {
    let bytes = fs::read(path)?;
    Ok(FileDigest { path: path.display().to_string(), sha256: sha256_hex(&bytes) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub elapsed_ms: u64,
}

impl RunManifest {
    pub fn new(command: impl IntoIterator<Item = String>) -> Self {
        RunManifest {
            tool: "barker".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into_iter().collect(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn record_input_bytes(&mut self, label: &str, bytes: &[u8]) {
        self.inputs.push(FileDigest { path: label.to_string(), sha256: sha256_hex(bytes) });
    }

    pub fn record_input_file(&mut self, path: &Path) -> io::Result<()> {
        self.inputs.push(digest_file(path)?);
        Ok(())
    }

    pub fn record_output_bytes(&mut self, label: &str, bytes: &[u8]) {
        self.outputs.push(FileDigest { path: label.to_string(), sha256: sha256_hex(bytes) });
    }

    pub fn record_output_file(&mut self, path: &Path) -> io::Result<()> {
        self.outputs.push(digest_file(path)?);
        Ok(())
    }

    /// `x.json` → `x.json.manifest.json`, keeping the original name intact.
    pub fn sidecar_path(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_os_string();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn write_to(&self, path: &Path) -> io::Result<()> {
        let json = serde_json::to_string_pretty(self).expect("manifest serializes");
        fs::write(path, json + "\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha256_matches_the_reference_vector() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn file_digests_round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("input.txt");
        fs::write(&input, b"abc").unwrap();

        let mut manifest = RunManifest::new(["barker".to_string(), "check".to_string()]);
        manifest.record_input_file(&input).unwrap();
        manifest.record_output_bytes("<stdout>", b"ok\n");
        manifest.elapsed_ms = 7;

        let target = dir.path().join("run.manifest.json");
        manifest.write_to(&target).unwrap();
        let back: RunManifest =
            serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
        assert_eq!(back, manifest);
        assert_eq!(back.inputs[0].sha256, sha256_hex(b"abc"));
        assert_eq!(back.version, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn sidecar_names_append_a_suffix() {
        assert_eq!(
            RunManifest::sidecar_path(Path::new("out/cert15.json")),
            PathBuf::from("out/cert15.json.manifest.json")
        );
    }
}
