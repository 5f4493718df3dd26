//! `key=value` configuration files that mirror command-line flags.
//!
//! Keys are long flag names (`_` and `-` are interchangeable). A flag given
//! on the command line always wins over the file. Keys that belong to a
//! different subcommand are ignored, so one file can serve several commands;
//! a key that no command accepts is an error.

use std::ffi::OsString;
use std::path::Path;

use anyhow::{bail, Context};
use clap::{ArgAction, Command};

pub fn parse(text: &str) -> anyhow::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .with_context(|| format!("config line {}: expected key=value, found `{line}`", i + 1))?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() {
            bail!("config line {}: empty key", i + 1);
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

/// Value of `--config` in `argv`, if present.
fn config_path(argv: &[OsString]) -> Option<OsString> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(p.into());
        }
    }
    None
}

/// The deepest subcommand named in `argv`.
fn selected<'a>(root: &'a Command, argv: &[OsString]) -> &'a Command {
    let mut cmd = root;
    for a in argv.iter().skip(1) {
        let s = a.to_string_lossy();
        if let Some(sub) = cmd.find_subcommand(s.as_ref()) {
            cmd = sub;
        }
    }
    cmd
}

fn long_flags(cmd: &Command) -> impl Iterator<Item = (&str, bool)> {
    cmd.get_arguments().filter_map(|a| {
        let long = a.get_long()?;
        let flag = matches!(a.get_action(), ArgAction::SetTrue | ArgAction::SetFalse);
        Some((long, flag))
    })
}

fn accepted_anywhere(cmd: &Command, key: &str) -> bool {
    long_flags(cmd).any(|(l, _)| l == key) || cmd.get_subcommands().any(|s| accepted_anywhere(s, key))
}

fn given(argv: &[OsString], key: &str) -> bool {
    let flag = format!("--{key}");
    let prefix = format!("--{key}=");
    argv.iter().any(|a| {
        let s = a.to_string_lossy();
        s == flag || s.starts_with(&prefix)
    })
}

/// Appends the config file's entries to `argv` as flags, unless already given.
pub fn merge(root: &Command, mut argv: Vec<OsString>) -> anyhow::Result<Vec<OsString>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let path = Path::new(&path);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    let cmd = selected(root, &argv);
    let mut extra = Vec::new();
    for (key, value) in parse(&text)? {
        if key == "config" {
            bail!("config files cannot include other config files");
        }
        if !accepted_anywhere(root, &key) {
            bail!("config key `{key}` matches no flag");
        }
        let Some((_, is_flag)) = long_flags(cmd).find(|(l, _)| *l == key) else {
            continue;
        };
        if given(&argv, &key) {
            continue;
        }
        if is_flag {
            match value.as_str() {
                "true" => extra.push(OsString::from(format!("--{key}"))),
                "false" => {}
                other => bail!("config key `{key}` takes true or false, found `{other}`"),
            }
        } else {
            extra.push(OsString::from(format!("--{key}")));
            extra.push(OsString::from(value));
        }
    }
    argv.extend(extra);
    Ok(argv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::{Arg, ArgAction};

    fn cli() -> Command {
        Command::new("t")
            .arg(Arg::new("config").long("config").global(true))
            .subcommand(
                Command::new("run")
                    .arg(Arg::new("seed").long("seed"))
                    .arg(Arg::new("fast").long("fast").action(ArgAction::SetTrue)),
            )
            .subcommand(Command::new("other").arg(Arg::new("alpha").long("alpha")))
    }

    fn args(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn parses_pairs_and_comments() {
        let kv = parse("# c\nseed = 4\n\nrandom_seed=1\n").unwrap();
        assert_eq!(kv, vec![("seed".into(), "4".into()), ("random-seed".into(), "1".into())]);
        assert!(parse("novalue\n").is_err());
    }

    #[test]
    fn flags_win_and_foreign_keys_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.cfg");
        std::fs::write(&path, "seed=9\nfast=true\nalpha=3\n").unwrap();
        let p = path.to_str().unwrap();
        let merged = merge(&cli(), args(&["t", "run", "--config", p, "--seed", "1"])).unwrap();
        assert_eq!(merged, args(&["t", "run", "--config", p, "--seed", "1", "--fast"]));
        std::fs::write(&path, "bogus=1\n").unwrap();
        assert!(merge(&cli(), args(&["t", "run", "--config", p])).is_err());
    }
}
