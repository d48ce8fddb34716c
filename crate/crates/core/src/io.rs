//! Graph file formats: edge lists, graph6 and DOT export.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex indices. Repeated lines are parallel edges and their order
//! fixes the edge ids. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, Vertex};

/// An edge list as read from a file; may still contain loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGraph {
    pub n: usize,
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl RawGraph {
    pub fn has_loops(&self) -> bool {
        self.pairs.iter().any(|&(u, v)| u == v)
    }

    pub fn to_multigraph(&self) -> Result<Multigraph> {
        Multigraph::new(self.n, self.pairs.iter().copied())
    }
}

impl From<&Multigraph> for RawGraph {
    fn from(g: &Multigraph) -> Self {
        RawGraph {
            n: g.vertex_count(),
            pairs: g.edges().iter().map(|e| (e.u, e.v)).collect(),
        }
    }
}

pub fn parse_edge_list(text: &str) -> Result<RawGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let (n, m) =
        two_numbers(header).ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
    let mut pairs = Vec::with_capacity(m);
    for (no, line) in lines {
        let (u, v) = two_numbers(line).ok_or_else(|| {
            Error::Parse(format!("line {}: expected `u v`, got `{line}`", no + 1))
        })?;
        if u >= n || v >= n {
            return Err(Error::Parse(format!(
                "line {}: vertex out of range",
                no + 1
            )));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            pairs.len()
        )));
    }
    Ok(RawGraph { n, pairs })
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}

/// graph6 encoding of a simple graph.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Parse("graph6 can only encode simple graphs".into()));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::Parse("graph too large for graph6".into()));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

pub fn from_graph6(s: &str) -> Result<Multigraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("invalid graph6 string".into()));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported graph6 size prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed}",
            rest.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, pairs)
}

/// Reads a graph file; `.g6` files are graph6, everything else an edge
/// list.
pub fn read_graph_file(path: &Path) -> Result<RawGraph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "g6") {
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::Parse("empty graph6 file".into()))?;
        Ok(RawGraph::from(&from_graph6(line)?))
    } else {
        parse_edge_list(&text)
    }
}

pub fn to_dot(g: &Multigraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(s, "  {v};");
    }
    for (id, e) in g.edges().iter().enumerate() {
        let _ = writeln!(s, "  {} -- {} [label=\"{id}\"];", e.u, e.v);
    }
    s.push_str("}\n");
    s
}
