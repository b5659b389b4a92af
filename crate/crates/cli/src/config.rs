//! Key=value configuration files mirroring the command-line flags.
//! Flags win when both specify a value.

use std::collections::BTreeMap;

use anyhow::{bail, Context};

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    pub entries: BTreeMap<String, String>,
}

const KNOWN_KEYS: &[&str] = &[
    "s", "tau", "grid", "family", "samples", "dlines", "seed", "format", "out",
];

impl FileConfig {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line {}: expected key=value, got {line:?}", lineno + 1);
            };
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                bail!("config line {}: unknown key {key:?}", lineno + 1);
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(FileConfig { entries })
    }

    pub fn load(path: &std::path::Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        FileConfig::parse(&text)
    }

    pub fn get_f64(&self, key: &str) -> anyhow::Result<Option<f64>> {
        self.entries
            .get(key)
            .map(|v| v.parse::<f64>().with_context(|| format!("config key {key}={v:?}")))
            .transpose()
    }

    pub fn get_usize(&self, key: &str) -> anyhow::Result<Option<usize>> {
        self.entries
            .get(key)
            .map(|v| v.parse::<usize>().with_context(|| format!("config key {key}={v:?}")))
            .transpose()
    }

    pub fn get_u64(&self, key: &str) -> anyhow::Result<Option<u64>> {
        self.entries
            .get(key)
            .map(|v| v.parse::<u64>().with_context(|| format!("config key {key}={v:?}")))
            .transpose()
    }

    pub fn get_bool(&self, key: &str) -> anyhow::Result<Option<bool>> {
        self.entries
            .get(key)
            .map(|v| match v.as_str() {
                "true" | "1" | "yes" => Ok(true),
                "false" | "0" | "no" => Ok(false),
                other => bail!("config key {key}: expected a boolean, got {other:?}"),
            })
            .transpose()
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }
}

/// Parse "a,b,c" into exactly `N` floats.
pub fn parse_floats<const N: usize>(text: &str, what: &str) -> anyhow::Result<[f64; N]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        bail!("{what}: expected {N} comma-separated values, got {}", parts.len());
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .with_context(|| format!("{what}: bad number {part:?}"))?;
    }
    Ok(out)
}
