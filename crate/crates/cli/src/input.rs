//! Reading files, stdin and the versioned JSON envelope.

use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::{CliError, CliResult, Context, FORMAT_TAG};

impl Context<'_> {
    /// Contents of `path`, or of stdin for `-` (at most once per run).
    pub(crate) fn read(&mut self, path: &str) -> CliResult<String> {
        if path == "-" {
            let stdin = self.stdin.take().ok_or_else(|| CliError::usage("stdin ('-') can be read only once"))?;
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("reading {path}: {e}")))
    }

    /// A JSON document from `path`, version header checked and removed.
    pub(crate) fn json<T: DeserializeOwned>(&mut self, path: &str) -> CliResult<T> {
        let text = self.read(path)?;
        parse_json(&text).map_err(|e| CliError::input(format!("{path}: {}", e.message)))
    }

    /// Pre-order size cap: the flag, else the environment, else the default.
    pub(crate) fn max_elements(&self, flag: Option<usize>) -> CliResult<usize> {
        if let Some(n) = flag {
            return Ok(n);
        }
        match &self.max_elements_env {
            None => Ok(isodist::poset::DEFAULT_MAX_ELEMENTS),
            Some(v) => v.trim().parse().map_err(|_| {
                CliError::usage(format!("{} must be a non-negative integer, got {v:?}", crate::MAX_ELEMENTS_VAR))
            }),
        }
    }
}

/// Parse JSON, rejecting any `"format"` other than the current one.
pub(crate) fn parse_json<T: DeserializeOwned>(text: &str) -> CliResult<T> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed JSON: {e}")))?;
    strip_header(&mut value)?;
    serde_json::from_value(value).map_err(|e| CliError::input(e.to_string()))
}

fn strip_header(value: &mut Value) -> CliResult<()> {
    if let Value::Object(map) = value {
        if let Some(tag) = map.remove("format") {
            if tag.as_str() != Some(FORMAT_TAG) {
                return Err(CliError::input(format!("unsupported format {tag}; expected \"{FORMAT_TAG}\"")));
            }
        }
    }
    Ok(())
}
