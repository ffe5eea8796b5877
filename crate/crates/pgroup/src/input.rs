//! Loading presentations and reading words from the command line.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use pgroup_core::corpus::lookup;
use pgroup_core::{parse, Element, Group, PcPresentation, Word};

/// Prefix selecting a built-in corpus group instead of a file.
pub const CORPUS_PREFIX: &str = "corpus:";

/// A presentation together with a display name for reports.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub presentation: PcPresentation,
}

/// Reads `source`, which is either a path to a presentation file or
/// `corpus:NAME` for a registry group.
pub fn load(source: &str) -> Result<Loaded> {
    if let Some(name) = source.strip_prefix(CORPUS_PREFIX) {
        let spec = lookup(name).ok_or_else(|| anyhow!("no corpus group named `{name}`"))?;
        let presentation = spec.build()?;
        return Ok(Loaded {
            name: spec.name(),
            presentation,
        });
    }
    let path = Path::new(source);
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {source}"))?;
    let presentation = parse(&text).with_context(|| source.to_string())?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    Ok(Loaded { name, presentation })
}

/// Splits a comma-separated list at the top level, so that commas inside
/// commutator brackets stay with their word.
pub fn split_words(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            bail!("unbalanced `]` in `{text}`");
        }
    }
    if depth != 0 {
        bail!("unbalanced `[` in `{text}`");
    }
    parts.push(text[start..].trim());
    if parts.iter().any(|p| p.is_empty()) {
        bail!("empty word in list `{text}`");
    }
    Ok(parts)
}

/// Collects one word, with commutator brackets allowed.
pub fn element(group: &Group, text: &str) -> Result<Element> {
    let word = Word::parse(text, group.presentation().names(), true)
        .with_context(|| format!("in word `{text}`"))?;
    Ok(group.normal_form(&word)?)
}

pub fn elements(group: &Group, list: &str) -> Result<Vec<Element>> {
    split_words(list)?
        .into_iter()
        .map(|w| element(group, w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_keep_their_commas() {
        assert_eq!(split_words("a^3, [a,b]^2 ,c").unwrap(), ["a^3", "[a,b]^2", "c"]);
        assert!(split_words("[a,b").is_err());
        assert!(split_words("a,,b").is_err());
    }

    #[test]
    fn corpus_sources() {
        let loaded = load("corpus:example1_p3").unwrap();
        assert_eq!(loaded.name, "example1_p3");
        assert_eq!(loaded.presentation.candidate_order(), 81);
        assert!(load("corpus:nothing").is_err());
    }
}
