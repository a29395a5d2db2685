//! Text input for walks and forests.

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::walk::{VertexId, Walk};

/// Parses `"12324522"` (one digit per vertex) or a comma/space separated
/// label list such as `"10,2,10"`.
pub fn parse_walk(text: &str) -> Result<Walk> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty walk".into()));
    }
    if t.bytes().all(|b| b.is_ascii_digit()) {
        return Walk::new(t.bytes().map(|b| VertexId(u64::from(b - b'0'))).collect());
    }
    let labels = t
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map(VertexId)
                .map_err(|_| Error::Parse(format!("bad vertex label {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Walk::new(labels).map_err(|_| Error::Parse(format!("no vertices in {t:?}")))
}

/// Parses walks separated by `|`; `"()"` is the unit.
pub fn parse_forest(text: &str) -> Result<Forest> {
    let t = text.trim();
    if t == "()" {
        return Ok(Forest::unit());
    }
    t.split('|').map(parse_walk).collect::<Result<Vec<_>>>().map(Forest::new)
}
