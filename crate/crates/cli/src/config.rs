//! `key=value` configuration files merged under command-line flags.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::Path;

use clap::parser::ValueSource;
use clap::{ArgAction, ArgMatches, Command};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("{path}: {msg}")]
    Read { path: String, msg: String },
    #[error("config line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("config key {0:?} is not an option of this command")]
    UnknownKey(String),
    #[error("config key {key:?}: {value:?} is not true or false")]
    NotBool { key: String, value: String },
}

/// Parses `key=value` lines. Blank lines and lines starting with `#` are
/// ignored; keys use the long flag name (`-` and `_` are interchangeable).
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line: i + 1,
            msg: "expected key=value".into(),
        })?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() {
            return Err(ConfigError::Syntax { line: i + 1, msg: "empty key".into() });
        }
        if map.insert(key.clone(), v.trim().to_string()).is_some() {
            return Err(ConfigError::Syntax { line: i + 1, msg: format!("duplicate key {key:?}") });
        }
    }
    Ok(map)
}

pub fn load_config(path: &Path) -> Result<BTreeMap<String, String>, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::Read { path: path.display().to_string(), msg: e.to_string() })?;
    parse_config(&text)
}

fn given(matches: &ArgMatches, id: &str) -> bool {
    matches!(matches.value_source(id), Some(ValueSource::CommandLine | ValueSource::EnvVariable))
}

/// Extra arguments supplying every config value whose flag was not given
/// on the command line (or through the environment). `sub` is the resolved
/// subcommand and `top` the root command, whose global flags are also
/// accepted.
pub fn config_args(
    config: &BTreeMap<String, String>,
    top: &Command,
    top_matches: &ArgMatches,
    sub: &Command,
    sub_matches: &ArgMatches,
) -> Result<Vec<OsString>, ConfigError> {
    let mut extra = Vec::new();
    for (key, value) in config {
        let found = sub
            .get_arguments()
            .map(|a| (a, sub_matches))
            .chain(top.get_arguments().map(|a| (a, top_matches)))
            .find(|(a, _)| a.get_long() == Some(key.as_str()));
        let Some((arg, matches)) = found else {
            return Err(ConfigError::UnknownKey(key.clone()));
        };
        if key == "config" {
            return Err(ConfigError::UnknownKey(key.clone()));
        }
        if given(matches, arg.get_id().as_str()) {
            continue;
        }
        if matches!(arg.get_action(), ArgAction::SetTrue) {
            match value.as_str() {
                "true" => extra.push(format!("--{key}").into()),
                "false" => {}
                _ => return Err(ConfigError::NotBool { key: key.clone(), value: value.clone() }),
            }
        } else {
            extra.push(format!("--{key}={value}").into());
        }
    }
    Ok(extra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_pairs() {
        let m = parse_config("# run\nseed = 7\n\ntrials=20\nbudget_nodes=5\n").unwrap();
        assert_eq!(m.get("seed").map(String::as_str), Some("7"));
        assert_eq!(m.get("budget-nodes").map(String::as_str), Some("5"));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn rejects_bad_lines() {
        assert_eq!(
            parse_config("seed 7\n"),
            Err(ConfigError::Syntax { line: 1, msg: "expected key=value".into() })
        );
        assert!(parse_config("a=1\na=2\n").is_err());
        assert!(parse_config("=1\n").is_err());
    }
}
