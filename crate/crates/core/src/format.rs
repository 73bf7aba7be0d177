//! Plain-text formats.
//!
//! Edge lists:
//!
//! ```text
//! # comment
//! p <vertex_count>
//! <u> <v>
//! l <vertex> <subset-as-hex>
//! m <role> <vertex>...
//! ```
//!
//! Representations:
//!
//! ```text
//! rep k=<k> n=<n>
//! v <vertex> <subset-as-hex>
//! part <index> <subset-as-hex>
//! ```
//!
//! Subsets are written as the hexadecimal value of their bit mask, bit `i`
//! standing for ground element `i + 1`.

use std::fmt::Write;

use crate::constructions::{MarkedGraph, Role};
use crate::cubicality::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partite::Representation;
use crate::subset::{VertexSubset, MAX_GROUND_SET};

pub const FORMAT_VERSION: &str = "1";

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn number(t: &Token, line: usize) -> Result<usize> {
    t.text
        .parse()
        .map_err(|_| err(line, t.column, format!("expected a non-negative integer, found {:?}", t.text)))
}

fn hex(t: &Token, line: usize) -> Result<u32> {
    let digits = t.text.strip_prefix("0x").unwrap_or(t.text);
    let bits = u32::from_str_radix(digits, 16)
        .map_err(|_| err(line, t.column, format!("expected a hex subset, found {:?}", t.text)))?;
    if bits >> MAX_GROUND_SET != 0 {
        return Err(err(line, t.column, "subset uses elements beyond the ground set cap"));
    }
    Ok(bits)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty() && !t[0].text.starts_with('#'))
}

/// Parses the edge-list format, including optional label and mark lines.
pub fn parse_graph(text: &str) -> Result<MarkedGraph> {
    let mut count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, u32)> = Vec::new();
    let mut marks: Vec<(usize, Role, Vec<usize>)> = Vec::new();
    let mut last_line = 0;
    for (line, toks) in content_lines(text) {
        last_line = line;
        let head = &toks[0];
        match head.text {
            "p" => {
                if count.is_some() {
                    return Err(err(line, head.column, "duplicate 'p' line"));
                }
                let [_, c] = &toks[..] else {
                    return Err(err(line, head.column, "expected 'p <vertex_count>'"));
                };
                count = Some(number(c, line)?);
            }
            "l" => {
                let [_, v, s] = &toks[..] else {
                    return Err(err(line, head.column, "expected 'l <vertex> <subset-as-hex>'"));
                };
                labels.push((line, number(v, line)?, hex(s, line)?));
            }
            "m" => {
                if toks.len() < 2 {
                    return Err(err(line, head.column, "expected 'm <role> <vertex>...'"));
                }
                let role: Role = toks[1]
                    .text
                    .parse()
                    .map_err(|e: Error| err(line, toks[1].column, e.to_string()))?;
                let vs = toks[2..].iter().map(|t| number(t, line)).collect::<Result<_>>()?;
                marks.push((line, role, vs));
            }
            _ => {
                if count.is_none() {
                    return Err(err(line, head.column, "edge before the 'p <vertex_count>' line"));
                }
                let [u, v] = &toks[..] else {
                    return Err(err(line, head.column, "expected an edge 'u v'"));
                };
                let (a, b) = (number(u, line)?, number(v, line)?);
                let limit = count.unwrap();
                if a >= limit || b >= limit || a == b {
                    let col = if a >= limit || a == b { u.column } else { v.column };
                    return Err(err(line, col, format!("invalid edge ({a}, {b}) for {limit} vertices")));
                }
                edges.push((a, b));
            }
        }
    }
    let Some(count) = count else {
        return Err(err(last_line.max(1), 1, "missing 'p <vertex_count>' line"));
    };
    let mut graph = Graph::new(count, edges).map_err(|e| err(last_line.max(1), 1, e.to_string()))?;
    if !labels.is_empty() {
        let mut table = vec![None; count];
        for &(line, v, bits) in &labels {
            if v >= count {
                return Err(err(line, 3, format!("label for missing vertex {v}")));
            }
            table[v] = Some(bits);
        }
        let Some(missing) = table.iter().position(Option::is_none) else {
            let bits: Vec<u32> = table.into_iter().map(Option::unwrap).collect();
            let n = bits.iter().map(|b| 32 - b.leading_zeros() as usize).max().unwrap_or(0);
            let subsets = bits.iter().map(|&b| VertexSubset::from_bits_unchecked(b, n)).collect();
            graph = graph
                .with_labels(subsets, n)
                .map_err(|e| err(labels[0].0, 1, e.to_string()))?;
            return attach_marks(graph, marks);
        };
        return Err(err(labels[0].0, 1, format!("vertex {missing} has no label")));
    }
    attach_marks(graph, marks)
}

fn attach_marks(graph: Graph, marks: Vec<(usize, Role, Vec<usize>)>) -> Result<MarkedGraph> {
    let mut out = MarkedGraph::plain(graph);
    for (line, role, vs) in marks {
        let mut all = out.mark(role).to_vec();
        all.extend(vs);
        out = out.with_mark(role, all).map_err(|e| err(line, 1, e.to_string()))?;
    }
    Ok(out)
}

pub fn write_graph(g: &MarkedGraph) -> String {
    let mut s = String::new();
    writeln!(s, "p {}", g.graph.vertex_count()).unwrap();
    for &(u, v) in g.graph.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    if let Some(labels) = g.graph.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(s, "l {v} {}", l.to_hex()).unwrap();
        }
    }
    for (role, vs) in g.marks() {
        let list: Vec<String> = vs.iter().map(ToString::to_string).collect();
        writeln!(s, "m {role} {}", list.join(" ")).unwrap();
    }
    s
}

pub fn write_embedding(e: &Embedding) -> String {
    let mut s = String::new();
    writeln!(s, "# embedding n={}", e.n).unwrap();
    for (v, img) in e.images.iter().enumerate() {
        writeln!(s, "v {v} {}", img.to_hex()).unwrap();
    }
    s
}

pub fn write_representation(r: &Representation) -> String {
    let mut s = String::new();
    writeln!(s, "rep k={} n={}", r.k, r.n).unwrap();
    for (v, img) in r.images.iter().enumerate() {
        writeln!(s, "v {v} {}", img.to_hex()).unwrap();
    }
    for (i, p) in r.parts.iter().enumerate() {
        writeln!(s, "part {i} {}", p.to_hex()).unwrap();
    }
    s
}

fn key_value(t: &Token, key: &str, line: usize) -> Result<usize> {
    let value = t
        .text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| err(line, t.column, format!("expected '{key}=<value>'")))?;
    value
        .parse()
        .map_err(|_| err(line, t.column + key.len() + 1, format!("bad value {value:?}")))
}

pub fn parse_representation(text: &str) -> Result<Representation> {
    let mut header: Option<(usize, usize)> = None;
    let mut images: Vec<(usize, usize, u32)> = Vec::new();
    let mut parts: Vec<(usize, usize, u32)> = Vec::new();
    let mut last_line = 1;
    for (line, toks) in content_lines(text) {
        last_line = line;
        let head = &toks[0];
        match head.text {
            "rep" => {
                let [_, k, n] = &toks[..] else {
                    return Err(err(line, head.column, "expected 'rep k=<k> n=<n>'"));
                };
                let n_val = key_value(n, "n", line)?;
                if n_val > MAX_GROUND_SET {
                    return Err(err(line, n.column, format!("n = {n_val} exceeds the cap {MAX_GROUND_SET}")));
                }
                header = Some((key_value(k, "k", line)?, n_val));
            }
            "v" | "part" => {
                if header.is_none() {
                    return Err(err(line, head.column, "missing 'rep k=<k> n=<n>' header"));
                }
                let [_, i, s] = &toks[..] else {
                    return Err(err(line, head.column, format!("expected '{} <index> <subset-as-hex>'", head.text)));
                };
                let entry = (line, number(i, line)?, hex(s, line)?);
                if head.text == "v" {
                    images.push(entry);
                } else {
                    parts.push(entry);
                }
            }
            other => return Err(err(line, head.column, format!("unknown line type {other:?}"))),
        }
    }
    let Some((k, n)) = header else {
        return Err(err(last_line, 1, "missing 'rep k=<k> n=<n>' header"));
    };
    let collect = |entries: &[(usize, usize, u32)], what: &str| -> Result<Vec<VertexSubset>> {
        let mut table = vec![None; entries.len()];
        for &(line, i, bits) in entries {
            if i >= entries.len() || table[i].is_some() {
                return Err(err(line, 1, format!("{what} indices must be 0..{} without repeats", entries.len())));
            }
            if bits >> n != 0 {
                return Err(err(line, 1, format!("{what} {i} lies outside the ground set [{n}]")));
            }
            table[i] = Some(VertexSubset::from_bits_unchecked(bits, n));
        }
        Ok(table.into_iter().map(Option::unwrap).collect())
    };
    Ok(Representation {
        k,
        n,
        images: collect(&images, "vertex")?,
        parts: collect(&parts, "part")?,
    })
}
