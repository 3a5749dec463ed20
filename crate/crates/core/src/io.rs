// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Edge-list and coloring text formats.
//!
//! Graph files: `#` comments and blank lines are ignored; the first other
//! line must be `p <n> <m>`, followed by exactly `m` lines `<u> <v>` with
//! 0-indexed vertex ids. Coloring files: one `<u> <v> <color>` line per
//! edge, in edge-id order when written by this crate.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::coloring::{Color, BLANK};
use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> IoError + '_ {
    move |source| IoError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn parse_fields<const N: usize>(line_no: usize, text: &str) -> Result<[u64; N], IoError> {
    let mut out = [0u64; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected {N} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line_no, format!("invalid integer {tok:?}")))?;
    }
    if fields.next().is_some() {
        return Err(parse_err(line_no, format!("expected {N} integers")));
    }
    Ok(out)
}

fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = io::Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)))
        .filter(|r| match r {
            Ok((_, l)) => {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            }
            Err(_) => true,
        })
}

pub fn parse_graph<R: BufRead>(reader: R) -> Result<Graph, IoError> {
    let io_plain = |source| IoError::Io {
        path: "<input>".into(),
        source,
    };
    let mut lines = content_lines(reader);
    let (header_line, header) = match lines.next() {
        Some(r) => r.map_err(io_plain)?,
        None => return Err(parse_err(1, "missing `p <n> <m>` header")),
    };
    let rest = header
        .trim()
        .strip_prefix('p')
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(header_line, "missing `p <n> <m>` header"))?;
    let [n, m] = parse_fields::<2>(header_line, rest)?;
    if n > u32::MAX as u64 {
        return Err(parse_err(header_line, "vertex count too large"));
    }
    let (n, m) = (n as usize, m as usize);

    let mut edges = Vec::with_capacity(m.min(1 << 24));
    let mut line_of = Vec::with_capacity(m.min(1 << 24));
    for r in lines {
        let (no, text) = r.map_err(io_plain)?;
        if edges.len() == m {
            return Err(parse_err(no, format!("more than {m} edges")));
        }
        let [u, v] = parse_fields::<2>(no, &text)?;
        if u >= n as u64 || v >= n as u64 {
            return Err(parse_err(no, format!("vertex id out of range 0..{n}")));
        }
        edges.push((u as VertexId, v as VertexId));
        line_of.push(no);
    }
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|source| {
        let index = match &source {
            GraphError::SelfLoop { index, .. }
            | GraphError::Duplicate { index, .. }
            | GraphError::OutOfRange { index, .. } => *index,
            GraphError::TooLarge(_) => 0,
        };
        IoError::Graph {
            line: line_of.get(index).copied().unwrap_or(header_line),
            source,
        }
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    let file = File::open(path).map_err(io_err(path))?;
    parse_graph(BufReader::new(file))
}

pub fn format_graph<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "p {} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), IoError> {
    let file = File::create(path).map_err(io_err(path))?;
    format_graph(g, BufWriter::new(file)).map_err(io_err(path))
}

pub fn format_coloring<W: Write>(g: &Graph, colors: &[Color], mut w: W) -> io::Result<()> {
    for (&(u, v), &c) in g.edges().iter().zip(colors) {
        writeln!(w, "{u} {v} {c}")?;
    }
    w.flush()
}

pub fn write_coloring(g: &Graph, colors: &[Color], path: &Path) -> Result<(), IoError> {
    let file = File::create(path).map_err(io_err(path))?;
    format_coloring(g, colors, BufWriter::new(file)).map_err(io_err(path))
}

/// Reads `<u> <v> <color>` lines against `g`, in any order. Edges absent
/// from the file, or given color 0, come back [`BLANK`].
pub fn parse_coloring<R: BufRead>(g: &Graph, reader: R) -> Result<Vec<Color>, IoError> {
    let index: HashMap<(VertexId, VertexId), usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| ((u.min(v), u.max(v)), e))
        .collect();
    let mut colors = vec![BLANK; g.edge_count()];
    let mut assigned = vec![false; g.edge_count()];
    for r in content_lines(reader) {
        let (no, text) = r.map_err(|source| IoError::Io {
            path: "<input>".into(),
            source,
        })?;
        let [u, v, c] = parse_fields::<3>(no, &text)?;
        let key = (u.min(v), u.max(v));
        if key.1 > u32::MAX as u64 || c > u32::MAX as u64 {
            return Err(parse_err(no, "value out of range"));
        }
        let e = *index
            .get(&(key.0 as VertexId, key.1 as VertexId))
            .ok_or_else(|| parse_err(no, format!("({u},{v}) is not an edge of the graph")))?;
        if std::mem::replace(&mut assigned[e], true) {
            return Err(parse_err(no, format!("edge ({u},{v}) listed twice")));
        }
        colors[e] = c as Color;
    }
    Ok(colors)
}

pub fn read_coloring(g: &Graph, path: &Path) -> Result<Vec<Color>, IoError> {
    let file = File::open(path).map_err(io_err(path))?;
    parse_coloring(g, BufReader::new(file))
}
