//! graph6 and adjacency-list JSON encodings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Standard graph6 encoding (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(word + 63);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((word << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let trimmed = s.trim();
    let (body, offset) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(offset + i, format!("byte {b} outside graph6 range")));
        }
    }
    let (n, mut pos) = match bytes {
        [] => return Err(Error::parse(offset, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(offset + 2, "truncated order field"));
            }
            (rest[..6].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(offset + 1, "truncated order field"));
            }
            (rest[..3].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::parse(
            offset + pos,
            format!(
                "expected {needed} adjacency bytes for order {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 6;
    let mut word = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit == 6 {
                word = bytes[pos] - 63;
                pos += 1;
                bit = 0;
            }
            if (word >> (5 - bit)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if bit < 6 && word & ((1u8 << (6 - bit)) - 1) != 0 {
        return Err(Error::parse(offset + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        let labels = (0..g.order())
            .filter_map(|v| g.label(v).map(|l| (v, l.to_string())))
            .collect();
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels,
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::from_edges(j.n, &edges)?;
        for (v, l) in j.labels {
            if v >= j.n {
                return Err(Error::BadVertex(v, j.n));
            }
            g.set_label(v, l);
        }
        Ok(g)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON serializes")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    Graph::try_from(j)
}
