//! A line-oriented text format for marked posets.
//!
//! ```text
//! # the six-element example
//! [elements]
//! z1 z2 y x z3 z4
//! [covers]
//! z1 < z2
//! z2 < y
//! x < z3
//! z3 < z4
//! [mark]
//! x = x
//! y = y
//! ```
//!
//! Grammar, line by line after stripping `#` comments and surrounding
//! whitespace (blank lines are ignored):
//!
//! - `[elements]`, `[covers]`, `[mark]` open a section; each appears at most
//!   once, `[elements]` first.
//! - In `[elements]`: whitespace-separated names matching `[A-Za-z0-9_]+`,
//!   possibly over several lines; names are distinct.
//! - In `[covers]`: `a < b` with both names declared. Any acyclic relation is
//!   accepted; its transitive closure is the order.
//! - In `[mark]`: exactly `x = NAME` and `y = NAME`, once each, distinct.
//!
//! Element ids follow declaration order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::{MarkedPoset, Poset};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Elements,
    Covers,
    Mark,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into tokens with their 1-based columns (in characters).
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col_start = 0;
    for (col, (i, c)) in line.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((col_start + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
            col_start = col;
        }
    }
    if let Some(s) = start {
        out.push((col_start + 1, &line[s..]));
    }
    out
}

/// Separates `a<b` and `x=a` into three tokens even without spaces.
fn split_ops(tok: Vec<(usize, &str)>) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    for (col, t) in tok {
        let mut last = 0;
        let mut ccol = col;
        for (i, c) in t.char_indices() {
            if c == '<' || c == '=' {
                if i > last {
                    out.push((ccol - t[last..i].chars().count(), &t[last..i]));
                }
                out.push((ccol, &t[i..i + 1]));
                last = i + 1;
            }
            ccol += 1;
        }
        if last < t.len() {
            out.push((ccol - t[last..].chars().count(), &t[last..]));
        }
    }
    out
}

/// Parses a marked poset. Parse problems give [`Error::Parse`]; a cyclic
/// relation or `x ≥ y` give the corresponding structural errors.
pub fn parse(text: &str) -> Result<MarkedPoset> {
    let mut section = Section::None;
    let mut seen = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut mark_x: Option<usize> = None;
    let mut mark_y: Option<usize> = None;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let toks = split_ops(tokens(content));
        let (col0, first) = toks[0];
        if first.starts_with('[') {
            let next = match content.trim() {
                "[elements]" => Section::Elements,
                "[covers]" => Section::Covers,
                "[mark]" => Section::Mark,
                other => return Err(err(line_no, col0, format!("unknown section header {other}"))),
            };
            if seen.contains(&next) {
                return Err(err(line_no, col0, "section appears twice"));
            }
            if next != Section::Elements && !seen.contains(&Section::Elements) {
                return Err(err(line_no, col0, "[elements] must come first"));
            }
            seen.push(next);
            section = next;
            continue;
        }
        let lookup = |col: usize, name: &str| -> Result<usize> {
            if !valid_name(name) {
                return Err(err(line_no, col, format!("invalid name {name:?}")));
            }
            index
                .get(name)
                .copied()
                .ok_or_else(|| err(line_no, col, format!("undeclared element {name}")))
        };
        match section {
            Section::None => return Err(err(line_no, col0, "content outside of a section")),
            Section::Elements => {
                for (col, name) in tokens(content) {
                    if !valid_name(name) {
                        return Err(err(line_no, col, format!("invalid name {name:?}")));
                    }
                    if index.contains_key(name) {
                        return Err(err(line_no, col, format!("duplicate element {name}")));
                    }
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                }
            }
            Section::Covers => {
                if toks.len() != 3 || toks[1].1 != "<" {
                    let col = toks.get(1).map_or(col0 + first.len(), |t| t.0);
                    return Err(err(line_no, col, "expected a line of the form `a < b`"));
                }
                let a = lookup(toks[0].0, toks[0].1)?;
                let b = lookup(toks[2].0, toks[2].1)?;
                covers.push((a, b));
            }
            Section::Mark => {
                if toks.len() != 3 || toks[1].1 != "=" {
                    let col = toks.get(1).map_or(col0 + first.len(), |t| t.0);
                    return Err(err(line_no, col, "expected `x = NAME` or `y = NAME`"));
                }
                let z = lookup(toks[2].0, toks[2].1)?;
                let slot = match toks[0].1 {
                    "x" => &mut mark_x,
                    "y" => &mut mark_y,
                    other => {
                        return Err(err(line_no, col0, format!("unknown mark {other:?}, expected x or y")))
                    }
                };
                if slot.is_some() {
                    return Err(err(line_no, col0, format!("mark {} given twice", toks[0].1)));
                }
                *slot = Some(z);
            }
        }
    }
    let end = last_line.max(1);
    if !seen.contains(&Section::Elements) {
        return Err(err(end, 1, "missing [elements] section"));
    }
    let (Some(x), Some(y)) = (mark_x, mark_y) else {
        return Err(err(end, 1, "missing x or y mark"));
    };
    if x == y {
        return Err(Error::MarkViolation(format!("x and y are both {}", names[x])));
    }
    let p = Poset::from_cover_relations(names.len(), &covers, Some(names))?;
    MarkedPoset::new(p, x, y)
}

/// Element names used when rendering: the poset's labels when they are
/// valid and distinct, otherwise `p0, p1, ...`.
fn render_names(p: &Poset) -> Vec<String> {
    if let Some(labels) = p.labels() {
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == labels.len() && labels.iter().all(|l| valid_name(l)) {
            return labels.to_vec();
        }
    }
    (0..p.len()).map(|z| format!("p{z}")).collect()
}

/// Renders `m` with its Hasse diagram as the cover list.
pub fn render(m: &MarkedPoset) -> String {
    let p = m.poset();
    let names = render_names(p);
    let mut out = String::from("[elements]\n");
    out.push_str(&names.join(" "));
    out.push_str("\n[covers]\n");
    for (a, b) in p.hasse() {
        out.push_str(&format!("{} < {}\n", names[a], names[b]));
    }
    out.push_str(&format!(
        "[mark]\nx = {}\ny = {}\n",
        names[m.x()],
        names[m.y()]
    ));
    out
}
