//! Line-oriented braid corpora: `id | Bn: letters | key=value,...`.
//!
//! Blank lines and lines starting with `#` are ignored. Recognized keys are
//! `chi_L`, `fibered_sqp`, `braid_index_b`, `writhe_w` and `description`
//! (short forms `chi`, `b`, `w`, `desc` are accepted). `description` may
//! contain commas as long as it is the last key.

use std::collections::HashSet;
use std::path::Path;

use braidkit::BraidWord;
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// The corpus shipped with the tool.
pub const DEFAULT_CORPUS: &str = include_str!("../data/corpus.txt");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub chi_l: Option<i64>,
    pub fibered_sqp: Option<bool>,
    pub braid_index_b: Option<i64>,
    pub writhe_w: Option<i64>,
    pub description: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub braid: BraidWord,
    pub metadata: Metadata,
    pub line: usize,
}

impl CorpusEntry {
    pub fn fibered_sqp(&self) -> bool {
        self.metadata.fibered_sqp.unwrap_or(false)
    }

    /// `(b, w)` when both geography constants are known.
    pub fn geography(&self) -> Option<(i64, i64)> {
        Some((self.metadata.braid_index_b?, self.metadata.writhe_w?))
    }
}

pub fn load_corpus(path: &Path) -> CliResult<Vec<CorpusEntry>> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_corpus(&text)
}

pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS).expect("shipped corpus parses")
}

pub fn parse_corpus(text: &str) -> CliResult<Vec<CorpusEntry>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry = parse_line(trimmed, line)?;
        if !seen.insert(entry.id.clone()) {
            return Err(CliError::Corpus { line, msg: format!("duplicate id {:?}", entry.id) });
        }
        out.push(entry);
    }
    Ok(out)
}

fn parse_line(s: &str, line: usize) -> CliResult<CorpusEntry> {
    let bad = |msg: String| CliError::Corpus { line, msg };
    let mut fields = s.splitn(3, '|').map(str::trim);
    let id = fields.next().unwrap_or_default();
    if id.is_empty() || id.contains(char::is_whitespace) {
        return Err(bad(format!("bad id {id:?}")));
    }
    let braid_text = fields.next().ok_or_else(|| bad("expected `id | Bn: letters`".into()))?;
    let braid: BraidWord = braid_text.parse().map_err(|e: braidkit::Error| bad(e.to_string()))?;
    let metadata = match fields.next() {
        Some(m) if !m.is_empty() => parse_metadata(m).map_err(bad)?,
        _ => Metadata::default(),
    };
    Ok(CorpusEntry { id: id.to_string(), braid, metadata, line })
}

fn parse_metadata(s: &str) -> Result<Metadata, String> {
    let mut md = Metadata::default();
    let mut rest = s;
    while !rest.trim().is_empty() {
        let (key, tail) = rest.split_once('=').ok_or_else(|| format!("expected key=value in {rest:?}"))?;
        let key = key.trim();
        if matches!(key, "description" | "desc") {
            md.description = Some(tail.trim().to_string());
            break;
        }
        let (value, next) = tail.split_once(',').unwrap_or((tail, ""));
        let value = value.trim();
        let int = || value.parse::<i64>().map_err(|_| format!("{key}: bad integer {value:?}"));
        match key {
            "chi_L" | "chi" => md.chi_l = Some(int()?),
            "braid_index_b" | "b" => md.braid_index_b = Some(int()?),
            "writhe_w" | "w" => md.writhe_w = Some(int()?),
            "fibered_sqp" => {
                md.fibered_sqp = Some(value.parse().map_err(|_| format!("fibered_sqp: bad boolean {value:?}"))?)
            }
            _ => return Err(format!("unknown key {key:?}")),
        }
        rest = next;
    }
    Ok(md)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_metadata() {
        let c = parse_corpus(
            "# comment\n\ntref | B2: 1 1 1 | chi=-1, fibered_sqp=true, b=2, w=3, desc=trefoil, right-handed\nu | B1: \n",
        )
        .unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].line, 3);
        assert_eq!(c[0].metadata.chi_l, Some(-1));
        assert_eq!(c[0].geography(), Some((2, 3)));
        assert_eq!(c[0].metadata.description.as_deref(), Some("trefoil, right-handed"));
        assert!(c[1].braid.is_empty());
        assert_eq!(c[1].metadata, Metadata::default());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_corpus("a | B2: 1\nb | B3: 1 x\n").unwrap_err();
        assert!(matches!(e, CliError::Corpus { line: 2, .. }), "{e}");
        let e = parse_corpus("a | B2: 1\na | B2: -1\n").unwrap_err();
        assert!(matches!(e, CliError::Corpus { line: 2, .. }));
        let e = parse_corpus("a | B2: 1 | chi=x\n").unwrap_err();
        assert!(matches!(e, CliError::Corpus { line: 1, .. }));
    }

    #[test]
    fn default_corpus_is_large_enough() {
        assert!(default_corpus().len() >= 8);
    }
}
