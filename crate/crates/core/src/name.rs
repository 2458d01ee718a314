//! Deterministic, collision-free naming for constructed cells. Every
//! construction derives the names of its output cells from the names of its
//! input cells, so equality of constructed structures is syntactic.

/// Escapes the delimiter characters used by compound names.
pub fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if matches!(c, '\\' | ',' | '(' | ')' | '[' | ']' | '{' | '}' | ';' | ':' | '=') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// `(a,b)` with escaped components; injective on pairs.
pub fn pair(a: &str, b: &str) -> String {
    format!("({},{})", esc(a), esc(b))
}

/// `(a,b,...)` for longer tuples.
pub fn tuple(parts: &[&str]) -> String {
    let body: Vec<String> = parts.iter().map(|p| esc(p)).collect();
    format!("({})", body.join(","))
}

/// Canonical name for a finite map, `{k=v;...}` over sorted keys.
pub fn graph<'a>(entries: impl IntoIterator<Item = (&'a str, &'a str)>) -> String {
    let body: Vec<String> = entries
        .into_iter()
        .map(|(k, v)| format!("{}={}", esc(k), esc(v)))
        .collect();
    format!("{{{}}}", body.join(";"))
}

/// Qualified cell name `src>tgt:name`, unique across the hom-categories of a
/// bicategory.
pub fn qualified(src: &str, tgt: &str, name: &str) -> String {
    format!("{}>{}:{}", esc(src), esc(tgt), esc(name))
}

/// Inverse of [`pair`]: splits `(a,b)` at the top-level comma and unescapes.
pub fn unpair(s: &str) -> Option<(String, String)> {
    let parts = untuple(s)?;
    if parts.len() != 2 {
        return None;
    }
    let mut it = parts.into_iter();
    Some((it.next().unwrap(), it.next().unwrap()))
}

/// Inverse of [`tuple`] (on nonempty component names).
pub fn untuple(s: &str) -> Option<Vec<String>> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let mut parts = Vec::new();
    let mut cur = String::new();
    let mut chars = inner.chars();
    loop {
        match chars.next() {
            None => break,
            Some('\\') => cur.push(chars.next()?),
            Some(',') => parts.push(std::mem::take(&mut cur)),
            Some(c) => cur.push(c),
        }
    }
    parts.push(cur);
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_is_injective_on_tricky_names() {
        assert_ne!(pair("a,b", "c"), pair("a", "b,c"));
        assert_ne!(pair("a(", "b"), pair("a", "(b"));
    }

    #[test]
    fn graph_sorted_entries_are_stable() {
        let g = graph(vec![("x", "1"), ("y", "2")]);
        assert_eq!(g, "{x=1;y=2}");
    }

    #[test]
    fn unpair_round_trips() {
        let p = pair("a,b", "c(d)");
        assert_eq!(unpair(&p), Some(("a,b".to_string(), "c(d)".to_string())));
        let t = tuple(&["x", "y=z", "w"]);
        assert_eq!(
            untuple(&t),
            Some(vec!["x".to_string(), "y=z".to_string(), "w".to_string()])
        );
    }
}
