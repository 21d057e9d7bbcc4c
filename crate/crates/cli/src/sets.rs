//! Displacement-set parsing and rendering.

use anyhow::{bail, Context};
use std::collections::BTreeSet;

/// Parse a comma-separated integer set, with or without braces:
/// `"{-2,-1,1,2}"`, `"0, 1"`, `"{}"`.  Whitespace is ignored.
pub fn parse_set(input: &str) -> anyhow::Result<BTreeSet<i64>> {
    let trimmed = input.trim();
    let inner = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (Some(_), false) => bail!("unclosed '{{' in set {trimmed:?}"),
        (None, true) => bail!("unopened '}}' in set {trimmed:?}"),
        (None, false) => trimmed,
    };
    let mut out = BTreeSet::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            if inner.trim().is_empty() {
                break; // empty set
            }
            bail!("empty element in set {trimmed:?}");
        }
        let value: i64 = part
            .parse()
            .with_context(|| format!("set element {part:?} is not an integer"))?;
        out.insert(value);
    }
    Ok(out)
}

/// Canonical braced rendering, e.g. `{-2,-1,1,2}`; `{}` for the empty set.
pub fn braced(s: &BTreeSet<i64>) -> String {
    let inner: Vec<String> = s.iter().map(i64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Filesystem-safe rendering used as the cache key, e.g. `-2_-1_1_2`.
pub fn file_key(s: &BTreeSet<i64>) -> String {
    if s.is_empty() {
        return "empty".into();
    }
    let inner: Vec<String> = s.iter().map(i64::to_string).collect();
    inner.join("_")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_braced_bare_negative_and_empty_sets() {
        let expect: BTreeSet<i64> = [-2, -1, 1, 2].into_iter().collect();
        assert_eq!(parse_set("{-2,-1,1,2}").unwrap(), expect);
        assert_eq!(parse_set(" -2, -1 ,1,2 ").unwrap(), expect);
        assert_eq!(parse_set("{}").unwrap(), BTreeSet::new());
        assert_eq!(parse_set("").unwrap(), BTreeSet::new());
        assert_eq!(parse_set("{ }").unwrap(), BTreeSet::new());
        assert_eq!(braced(&expect), "{-2,-1,1,2}");
        assert_eq!(braced(&BTreeSet::new()), "{}");
        assert_eq!(file_key(&expect), "-2_-1_1_2");
    }

    #[test]
    fn rejects_malformed_sets() {
        assert!(parse_set("{0,1").is_err());
        assert!(parse_set("0,1}").is_err());
        assert!(parse_set("0,,1").is_err());
        assert!(parse_set("0,x").is_err());
    }
}
