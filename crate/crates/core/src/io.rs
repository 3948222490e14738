//! File formats: JSON graphs, edge-list text, DOT export and trace JSON.
//!
//! JSON graphs look like `{"n": 5, "edges": [[1, 2], ...]}` with 1-based
//! ids. Orientations set `"directed": true` and list `[tail, head]` pairs;
//! Mycielski graphs add `"roles": {"v": [...], "x": [...], "w": id}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cleaning::{BrushAllocation, CleaningTrace, Outcome};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};
use crate::mycielski::{MycielskiGraph, Partition};
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub v: Vec<usize>,
    pub x: Vec<usize>,
    pub w: usize,
}

impl Roles {
    fn from_partition(p: &Partition) -> Self {
        Roles {
            v: p.originals().iter().map(|v| v.get()).collect(),
            x: p.shadows().iter().map(|v| v.get()).collect(),
            w: p.apex().get(),
        }
    }

    fn to_partition(&self, n: usize) -> Result<Partition> {
        let p = Partition::new(self.v.len());
        if Roles::from_partition(&p) != *self || 2 * self.v.len() + 1 != n {
            return Err(Error::Parse("roles must be v = 1..k, x = k+1..2k, w = 2k+1".into()));
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub directed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Roles>,
}

/// A parsed graph file with whatever extra structure it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedGraph {
    pub graph: SimpleGraph,
    pub orientation: Option<Orientation>,
    pub partition: Option<Partition>,
}

impl GraphFile {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphFile {
            n: g.order(),
            edges: g.edge_pairs().into_iter().map(|(u, v)| [u, v]).collect(),
            directed: false,
            roles: None,
        }
    }

    pub fn from_orientation(o: &Orientation) -> Self {
        GraphFile {
            n: o.base().order(),
            edges: o.arcs().into_iter().map(|(t, h)| [t, h]).collect(),
            directed: true,
            roles: None,
        }
    }

    pub fn from_mycielski(m: &MycielskiGraph) -> Self {
        GraphFile { roles: Some(Roles::from_partition(&m.partition)), ..Self::from_graph(&m.graph) }
    }

    pub fn load(&self) -> Result<LoadedGraph> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = SimpleGraph::from_edge_list(self.n, &pairs)?;
        let orientation = if self.directed {
            Some(Orientation::from_arcs(graph.clone(), &pairs)?)
        } else {
            None
        };
        let partition = self.roles.as_ref().map(|r| r.to_partition(self.n)).transpose()?;
        Ok(LoadedGraph { graph, orientation, partition })
    }
}

pub fn graph_to_json(g: &SimpleGraph) -> Value {
    serde_json::to_value(GraphFile::from_graph(g)).expect("serialisable")
}

pub fn parse_graph_json(text: &str) -> Result<LoadedGraph> {
    serde_json::from_str::<GraphFile>(text)?.load()
}

/// First line `n`, then one `u v` pair per line. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("vertex count: {e}")))?;
    let mut pairs = Vec::new();
    for line in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
        match nums[..] {
            [u, v] => pairs.push((u, v)),
            _ => return Err(Error::Parse(format!("expected `u v`, got {line:?}"))),
        }
    }
    SimpleGraph::from_edge_list(n, &pairs)
}

pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edge_pairs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// JSON if the text starts with `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<LoadedGraph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        Ok(LoadedGraph { graph: parse_edge_list(text)?, orientation: None, partition: None })
    }
}

pub fn load_graph(path: &Path) -> Result<LoadedGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// Allocation JSON: `{"<vertex>": count, ...}`; missing vertices hold 0.
pub fn parse_allocation(n: usize, text: &str) -> Result<BrushAllocation> {
    let raw: BTreeMap<String, u32> = serde_json::from_str(text)?;
    let mut map = BTreeMap::new();
    for (k, v) in raw {
        let id: usize = k.trim_start_matches('v').parse().map_err(|_| Error::Parse(format!("bad vertex key {k:?}")))?;
        map.insert(id, v);
    }
    BrushAllocation::from_map(n, &map)
}

fn label(v: usize, partition: Option<&Partition>) -> String {
    match partition {
        Some(p) => p.role(VertexId::new(v)).label(),
        None => format!("v{v}"),
    }
}

/// DOT for an undirected graph; shadow and apex labels when `partition` is given.
pub fn to_dot(g: &SimpleGraph, partition: Option<&Partition>) -> String {
    dot("graph", "--", g.order(), &g.edge_pairs(), partition)
}

pub fn orientation_to_dot(o: &Orientation, partition: Option<&Partition>) -> String {
    dot("digraph", "->", o.base().order(), &o.arcs(), partition)
}

fn dot(kind: &str, op: &str, n: usize, pairs: &[(usize, usize)], partition: Option<&Partition>) -> String {
    let mut out = format!("{kind} G {{\n");
    for v in 1..=n {
        let _ = writeln!(out, "  {};", label(v, partition));
    }
    for &(u, v) in pairs {
        let _ = writeln!(out, "  {} {op} {};", label(u, partition), label(v, partition));
    }
    out.push_str("}\n");
    out
}

pub fn trace_to_json(trace: &CleaningTrace) -> Value {
    let events: Vec<Value> = trace
        .events
        .iter()
        .map(|e| {
            let cleaned: Vec<[usize; 2]> =
                e.dispatched.iter().map(|r| [e.vertex.get(), r.get()]).collect();
            json!({"vertex": e.vertex, "cleaned": cleaned, "surplus": e.surplus_retained})
        })
        .collect();
    let mut out = json!({
        "initial": trace.initial,
        "events": events,
        "outcome": if trace.is_cleaned() { "cleaned" } else { "stuck" },
        "end": trace.end,
    });
    if let Outcome::Stuck { dirty, blocked } = &trace.outcome {
        let dirty: Vec<[usize; 2]> = dirty.iter().map(|&(u, v)| [u, v]).collect();
        out["dirty"] = json!(dirty);
        if let Some(b) = blocked {
            out["blocked"] = json!(b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleaning::{clean, Policy};
    use crate::jaco::JacoGraph;
    use crate::mycielski::mycielskian;

    #[test]
    fn json_graph() {
        let g = SimpleGraph::cycle(4);
        let text = graph_to_json(&g).to_string();
        assert_eq!(text, r#"{"edges":[[1,2],[1,4],[2,3],[3,4]],"n":4}"#);
        assert_eq!(parse_graph_json(&text).unwrap().graph, g);
        assert!(parse_graph_json(r#"{"n": 2, "edges": [[1, 1]]}"#).is_err());
        assert!(parse_graph_json(r#"{"n": 2}"#).is_err());
    }

    #[test]
    fn json_orientation_keeps_arcs() {
        let j = JacoGraph::build(5).unwrap();
        let file = GraphFile::from_orientation(j.orientation());
        let text = serde_json::to_string(&file).unwrap();
        let loaded = parse_graph_json(&text).unwrap();
        assert_eq!(loaded.orientation.as_ref(), Some(j.orientation()));
    }

    #[test]
    fn json_roles() {
        let m = mycielskian(&SimpleGraph::path(3));
        let v = serde_json::to_value(GraphFile::from_mycielski(&m)).unwrap();
        assert_eq!(v["roles"], json!({"v": [1, 2, 3], "x": [4, 5, 6], "w": 7}));
        let loaded = parse_graph_json(&v.to_string()).unwrap();
        assert_eq!(loaded.partition, Some(m.partition));
        let mut bad = v.clone();
        bad["roles"]["w"] = json!(6);
        assert!(parse_graph_json(&bad.to_string()).is_err());
    }

    #[test]
    fn edge_list_text() {
        let g = parse_edge_list("# triangle\n3\n1 2\n2 3\n\n3 1\n").unwrap();
        assert_eq!(g, SimpleGraph::cycle(3));
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3\n1 2 3\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("x\n").is_err());
        assert_eq!(parse_graph("2\n1 2\n").unwrap().graph.size(), 1);
    }

    #[test]
    fn allocations() {
        let a = parse_allocation(5, r#"{"1": 1, "3": 1}"#).unwrap();
        assert_eq!(a.counts(), &[1, 0, 1, 0, 0]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"1":1,"3":1}"#);
        assert!(parse_allocation(2, r#"{"3": 1}"#).is_err());
        assert!(parse_allocation(2, r#"{"a": 1}"#).is_err());
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&SimpleGraph::path(2), None);
        assert_eq!(dot, "graph G {\n  v1;\n  v2;\n  v1 -- v2;\n}\n");
        let m = mycielskian(&SimpleGraph::path(2));
        let dot = to_dot(&m.graph, Some(&m.partition));
        assert!(dot.contains("x1 -- w;"));
        assert!(dot.contains("v1 -- x2;"));
        let j = JacoGraph::build(3).unwrap();
        assert!(orientation_to_dot(j.orientation(), None).starts_with("digraph G {"));
        assert!(orientation_to_dot(j.orientation(), None).contains("v2 -> v3;"));
    }

    #[test]
    fn trace_json() {
        let p3 = SimpleGraph::path(3);
        let beta = BrushAllocation::from_pairs(3, &[(1, 1)]).unwrap();
        let t = clean(&p3, &beta, &Policy::Greedy).unwrap();
        let v = trace_to_json(&t);
        assert_eq!(v["outcome"], "cleaned");
        assert_eq!(v["events"][0], json!({"vertex": 1, "cleaned": [[1, 2]], "surplus": 0}));
        assert_eq!(v["end"], json!({"3": 1}));
        let stuck = clean(&p3, &BrushAllocation::from_pairs(3, &[(2, 1)]).unwrap(), &Policy::Greedy).unwrap();
        let v = trace_to_json(&stuck);
        assert_eq!(v["outcome"], "stuck");
        assert_eq!(v["dirty"], json!([[1, 2], [2, 3]]));
    }
}
