//! The family file format.
//!
//! ```text
//! # sepham family v1
//! # kind=paths n=6 construction=bipartite-crossing:exact seed=none
//! 3 6 2 5 1 4
//! ...
//! ```
//!
//! One member per line as space-separated 1-based vertices, cycles in
//! canonical rotation.

use crate::error::{Error, Result};
use crate::family::{Family, Kind, Meta};
use crate::objects::Vertex;

pub const MAGIC: &str = "# sepham family v1";

pub fn serialize(f: &Family) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    let seed = f.meta.seed.map_or("none".to_string(), |s| s.to_string());
    out.push_str(&format!(
        "# kind={} n={} construction={} seed={}\n",
        f.kind(),
        f.n(),
        f.meta.construction,
        seed
    ));
    for m in f.members() {
        let line: Vec<String> = m.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn parse(text: &str) -> Result<Family> {
    let mut lines = text.lines();
    if lines.next().map(str::trim_end) != Some(MAGIC) {
        return Err(parse_err(1, format!("expected `{MAGIC}`")));
    }
    let header = lines
        .next()
        .and_then(|l| l.strip_prefix("# "))
        .ok_or_else(|| parse_err(2, "missing `# kind=... n=...` header"))?;

    let (mut kind, mut n, mut construction, mut seed) = (None, None, None, None);
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(2, format!("malformed field `{field}`")))?;
        match key {
            "kind" => {
                kind = Some(
                    value
                        .parse::<Kind>()
                        .map_err(|e| parse_err(2, e.to_string()))?,
                )
            }
            "n" => {
                n = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| parse_err(2, format!("bad n `{value}`")))?,
                )
            }
            "construction" => construction = Some(value.to_string()),
            "seed" => {
                seed = Some(if value == "none" {
                    None
                } else {
                    Some(
                        value
                            .parse::<u64>()
                            .map_err(|_| parse_err(2, format!("bad seed `{value}`")))?,
                    )
                })
            }
            _ => return Err(parse_err(2, format!("unknown field `{key}`"))),
        }
    }
    let kind = kind.ok_or_else(|| parse_err(2, "missing kind"))?;
    let n = n.ok_or_else(|| parse_err(2, "missing n"))?;
    let construction = construction.ok_or_else(|| parse_err(2, "missing construction"))?;
    let seed = seed.ok_or_else(|| parse_err(2, "missing seed"))?;

    let mut members = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 3;
        if line.trim().is_empty() {
            continue;
        }
        let member = line
            .split_whitespace()
            .map(|t| {
                t.parse::<Vertex>()
                    .map_err(|_| parse_err(lineno, format!("bad vertex `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        members.push(member);
    }
    Family::new(n, kind, members, Meta::new(construction, seed)).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => parse_err(0, other.to_string()),
    })
}
