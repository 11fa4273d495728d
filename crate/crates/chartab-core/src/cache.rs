//! On-disk sequence cache: one JSON file per (family, params, method, N)
//! key, with values as decimal strings so nothing is truncated to 64 bits.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::sequences::SequenceReport;
use crate::{Error, Int};

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

pub fn cache_path(dir: &Path, family: &str, params: &str, method: &str, max_n: u32) -> PathBuf {
    let key = format!(
        "{}-{}-{}-{}.json",
        sanitize(family),
        sanitize(params),
        sanitize(method),
        max_n
    );
    dir.join(key)
}

pub fn store(dir: &Path, report: &SequenceReport) -> Result<PathBuf, Error> {
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let path = cache_path(
        dir,
        &report.family,
        &report.params,
        &report.method,
        report.values.len().saturating_sub(1) as u32,
    );
    let doc = json!({
        "family": report.family,
        "params": report.params,
        "method": report.method,
        "values": report.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    fs::write(&path, format!("{:#}\n", doc)).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(path)
}

pub fn load(
    dir: &Path,
    family: &str,
    params: &str,
    method: &str,
    max_n: u32,
) -> Result<Option<Vec<Int>>, Error> {
    let path = cache_path(dir, family, params, method, max_n);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).map_err(|e| Error::Cache(e.to_string()))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{path:?}: {e}")))?;
    let values = doc["values"]
        .as_array()
        .ok_or_else(|| Error::Cache(format!("{path:?}: missing values array")))?;
    let parsed: Result<Vec<Int>, Error> = values
        .iter()
        .map(|v| {
            let s = v
                .as_str()
                .ok_or_else(|| Error::Cache(format!("{path:?}: non-string value")))?;
            Int::from_str(s).map_err(|e| Error::Cache(format!("{path:?}: {e}")))
        })
        .collect();
    Ok(Some(parsed?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("chartab-cache-test-{}", std::process::id()));
        let report = SequenceReport {
            family: "A".into(),
            params: String::new(),
            method: "direct".into(),
            values: vec![Int::from(1), Int::from(1), Int::from(2)],
            elapsed_ms: 0,
        };
        store(&dir, &report).unwrap();
        let loaded = load(&dir, "A", "", "direct", 2).unwrap().unwrap();
        assert_eq!(loaded, report.values);
        assert!(load(&dir, "B", "", "direct", 2).unwrap().is_none());
        std::fs::remove_dir_all(&dir).ok();
    }
}
