//! Flat `key = value` text format used for config files and run manifests.
//!
//! Lines are `key = value`; `#` starts a comment; blank lines are ignored.
//! Keys are case-insensitive and stored lowercased. Order is preserved on
//! write so manifests diff cleanly.

use std::path::Path;

#[derive(Debug, Clone, Default)]
pub struct KvFile {
    pub entries: Vec<(String, String)>,
}

impl KvFile {
    pub fn parse(text: &str, origin: &str) -> Result<KvFile, String> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                format!("{origin} line {}: expected `key = value`, got `{raw}`", idx + 1)
            })?;
            let key = key.trim().to_ascii_lowercase();
            if key.is_empty() {
                return Err(format!("{origin} line {}: empty key", idx + 1));
            }
            entries.push((key, value.trim().to_string()));
        }
        Ok(KvFile { entries })
    }

    pub fn load(path: &Path) -> Result<KvFile, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        KvFile::parse(&text, &path.display().to_string())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn parsed<T: std::str::FromStr>(&self, key: &str, origin: &str) -> Result<Option<T>, String> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("{origin}: field `{key}` has malformed value `{v}`")),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}
