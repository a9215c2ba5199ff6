//! DIMACS edge format: `c` comment lines, one `p edge <n> <m>` line, then
//! `e <u> <v>` lines with 1-based vertex numbers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Serializes `g` with edges in lexicographic order.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u() + 1, e.v() + 1).unwrap();
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Dimacs {
            line: line_no,
            message,
        };
        let line = raw.trim();
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                let rest: Vec<&str> = fields.collect();
                let [kind, n, m] = rest[..] else {
                    return Err(err(format!("malformed problem line {line:?}")));
                };
                if kind != "edge" && kind != "col" {
                    return Err(err(format!("unsupported problem type {kind:?}")));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| err(format!("bad vertex count {n:?}")))?;
                m.parse::<usize>()
                    .map_err(|_| err(format!("bad edge count {m:?}")))?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err("edge line before problem line".into()))?;
                let rest: Vec<&str> = fields.collect();
                let [a, b] = rest[..] else {
                    return Err(err(format!("malformed edge line {line:?}")));
                };
                let parse = |s: &str| -> Result<usize> {
                    let x: usize = s.parse().map_err(|_| err(format!("bad vertex {s:?}")))?;
                    if x == 0 || x > g.n() {
                        return Err(err(format!(
                            "vertex {x} out of range 1..={} (numbering is 1-based)",
                            g.n()
                        )));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (parse(a)?, parse(b)?);
                g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    graph.ok_or(Error::Dimacs {
        line: 0,
        message: "missing problem line".into(),
    })
}
