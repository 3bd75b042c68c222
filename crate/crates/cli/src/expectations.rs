//! The versioned golden-count table and strict-mode comparison.

use anyhow::{anyhow, bail, Context, Result};
use std::collections::HashMap;

const RAW: &str = include_str!("../data/expected_counts.txt");

/// Parsed expectation table: pipeline name to key/value-list pairs.
pub struct Expectations {
    entries: HashMap<String, HashMap<String, Vec<usize>>>,
}

impl Expectations {
    pub fn load() -> Result<Self> {
        let mut entries = HashMap::new();
        for (idx, raw) in RAW.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let pipeline = parts
                .next()
                .ok_or_else(|| anyhow!("expected_counts.txt line {}: empty entry", idx + 1))?
                .to_string();
            let mut fields = HashMap::new();
            for part in parts {
                let (key, values) = part.split_once('=').ok_or_else(|| {
                    anyhow!("expected_counts.txt line {}: bad field {part:?}", idx + 1)
                })?;
                let values: Vec<usize> = values
                    .split(',')
                    .map(|v| v.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .with_context(|| {
                        format!("expected_counts.txt line {}: bad numbers in {part:?}", idx + 1)
                    })?;
                fields.insert(key.to_string(), values);
            }
            entries.insert(pipeline, fields);
        }
        Ok(Expectations { entries })
    }

    fn field(&self, pipeline: &str, key: &str) -> Result<&[usize]> {
        self.entries
            .get(pipeline)
            .and_then(|fields| fields.get(key))
            .map(|v| v.as_slice())
            .ok_or_else(|| anyhow!("no golden expectation for {pipeline} {key}"))
    }

    /// Compares one observed sequence against the table; `Err` describes the
    /// mismatch for the diagnostics stream.
    pub fn check(&self, pipeline: &str, key: &str, observed: &[usize]) -> Result<()> {
        let expected = self.field(pipeline, key)?;
        if expected != observed {
            bail!("{pipeline}: {key} mismatch, expected {expected:?}, got {observed:?}");
        }
        Ok(())
    }
}
