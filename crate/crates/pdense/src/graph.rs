//! Compact undirected graph plus the node-set type used by every algorithm.
//!
//! Labels are arbitrary strings interned to dense `u32` indices in
//! first-appearance order; all algorithms work on the dense indices and
//! results are translated back to labels at the output boundary.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable simple undirected graph in CSR form.
#[derive(Clone, Debug)]
pub struct Graph {
    xadj: Vec<usize>,
    adj: Vec<u32>,
    labels: Vec<String>,
    index: HashMap<String, u32>,
}

/// Result of parsing an edge list: the graph plus input diagnostics.
#[derive(Debug)]
pub struct ParseOutcome {
    pub graph: Graph,
    /// Lines of the form `u u` that were dropped.
    pub self_loops_dropped: usize,
    /// Repeated edges (in either orientation) collapsed into one.
    pub duplicates_collapsed: usize,
}

impl Graph {
    /// Number of nodes.
    pub fn n(&self) -> u32 {
        self.labels.len() as u32
    }

    /// Number of undirected edges.
    pub fn m(&self) -> u64 {
        (self.adj.len() / 2) as u64
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[self.xadj[v as usize]..self.xadj[v as usize + 1]]
    }

    pub fn degree(&self, v: u32) -> u32 {
        (self.xadj[v as usize + 1] - self.xadj[v as usize]) as u32
    }

    /// Degrees of all nodes, indexed by dense id.
    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    /// Build from dense-index edges; labels become the decimal indices.
    /// Rejects self-loops and out-of-range endpoints; duplicates collapse.
    pub fn from_index_edges(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph> {
        let mut norm: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::NodeOutOfRange { node: a, n });
            }
            if b >= n {
                return Err(Error::NodeOutOfRange { node: b, n });
            }
            if a == b {
                return Err(Error::InvalidValue(format!("self-loop at node {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        Ok(Graph::build(labels, index, &norm))
    }

    /// `edges` must be sorted, unique, normalized pairs `(u, v)` with `u < v`.
    fn build(labels: Vec<String>, index: HashMap<String, u32>, edges: &[(u32, u32)]) -> Graph {
        let n = labels.len();
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut xadj = vec![0usize; n + 1];
        for i in 0..n {
            xadj[i + 1] = xadj[i] + deg[i];
        }
        let mut adj = vec![0u32; xadj[n]];
        let mut cursor = xadj.clone();
        for &(u, v) in edges {
            adj[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adj[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for i in 0..n {
            adj[xadj[i]..xadj[i + 1]].sort_unstable();
        }
        Graph {
            xadj,
            adj,
            labels,
            index,
        }
    }

    /// Canonical edge-list serialization: one `a b` pair per line with
    /// `a <= b` as strings, lines sorted. Parsing this text and serializing
    /// again reproduces it byte for byte, so the form is a fixed point of
    /// the parse/serialize cycle.
    pub fn canonical_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.labeled_edges() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Edge set keyed by labels, sorted; used for label-level comparisons.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.m() as usize);
        for u in 0..self.n() {
            for &v in self.neighbors(u) {
                if v > u {
                    let (a, b) = (self.label(u), self.label(v));
                    if a <= b {
                        out.push((a.to_string(), b.to_string()));
                    } else {
                        out.push((b.to_string(), a.to_string()));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn intern(index: &mut HashMap<String, u32>, labels: &mut Vec<String>, label: &str) -> u32 {
    if let Some(&i) = index.get(label) {
        return i;
    }
    let i = labels.len() as u32;
    labels.push(label.to_string());
    index.insert(label.to_string(), i);
    i
}

/// Parse a whitespace- or comma-separated edge list.
///
/// Lines starting with `#` or `%` and blank lines are skipped. Each remaining
/// line must hold exactly two labels. Self-loops are dropped and duplicate
/// edges collapsed, both counted in the returned diagnostics. A file with no
/// surviving edges is an error.
pub fn parse_edge_list(input: &str) -> Result<ParseOutcome> {
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut self_loops = 0usize;
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut toks = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty());
        let (a, b) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "expected exactly two node labels".to_string(),
                })
            }
        };
        // A label beginning with a comment character could never be read
        // back from the first column of a serialized line.
        for tok in [a, b] {
            if tok.starts_with('#') || tok.starts_with('%') {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("label '{tok}' starts with a comment character"),
                });
            }
        }
        let ia = intern(&mut index, &mut labels, a);
        let ib = intern(&mut index, &mut labels, b);
        if ia == ib {
            self_loops += 1;
            continue;
        }
        edges.push((ia.min(ib), ia.max(ib)));
    }
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let duplicates_collapsed = before - edges.len();
    Ok(ParseOutcome {
        graph: Graph::build(labels, index, &edges),
        self_loops_dropped: self_loops,
        duplicates_collapsed,
    })
}

/// Node subset with O(1) membership and sorted iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    n: u32,
    members: Vec<u32>,
    bits: Vec<u64>,
}

impl NodeSet {
    /// Collect (deduplicating) indices into a set over universe `[0, n)`.
    pub fn new(n: u32, nodes: impl IntoIterator<Item = u32>) -> Result<NodeSet> {
        let mut bits = vec![0u64; (n as usize).div_ceil(64)];
        let mut members = Vec::new();
        for v in nodes {
            if v >= n {
                return Err(Error::NodeOutOfRange { node: v, n });
            }
            let (w, b) = (v as usize / 64, v as usize % 64);
            if bits[w] >> b & 1 == 0 {
                bits[w] |= 1 << b;
                members.push(v);
            }
        }
        members.sort_unstable();
        Ok(NodeSet { n, members, bits })
    }

    /// The whole vertex set `[0, n)`.
    pub fn full(n: u32) -> NodeSet {
        NodeSet::new(n, 0..n).expect("indices in range")
    }

    pub fn universe(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        v < self.n && self.bits[v as usize / 64] >> (v as usize % 64) & 1 == 1
    }

    /// Members sorted ascending.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }
}

/// Parse a node-set file: one label per line, `#`/`%` comments and blank
/// lines skipped, duplicates collapsed. Unknown labels are errors.
pub fn parse_node_set(g: &Graph, input: &str) -> Result<NodeSet> {
    let mut nodes = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut toks = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty());
        let label = match (toks.next(), toks.next()) {
            (Some(l), None) => l,
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "expected exactly one node label".to_string(),
                })
            }
        };
        match g.index_of(label) {
            Some(v) => nodes.push(v),
            None => {
                return Err(Error::UnknownLabel {
                    line: i + 1,
                    label: label.to_string(),
                })
            }
        }
    }
    NodeSet::new(g.n(), nodes)
}

/// Degrees within the induced subgraph `G[S]`, indexed by dense node id
/// (zero for nodes outside `s`).
pub fn induced_degrees(g: &Graph, s: &NodeSet) -> Vec<u32> {
    let mut deg = vec![0u32; g.n() as usize];
    for v in s.iter() {
        deg[v as usize] = g.neighbors(v).iter().filter(|&&u| s.contains(u)).count() as u32;
    }
    deg
}

/// Number of edges inside `G[S]`.
pub fn induced_edge_count(g: &Graph, s: &NodeSet) -> u64 {
    let deg = induced_degrees(g, s);
    s.iter().map(|v| deg[v as usize] as u64).sum::<u64>() / 2
}

/// Connected components of `G[S]`, each sorted, ordered by smallest member.
pub fn components_within(g: &Graph, s: &NodeSet) -> Vec<Vec<u32>> {
    let mut seen = vec![false; g.n() as usize];
    let mut out = Vec::new();
    for start in s.iter() {
        if seen[start as usize] {
            continue;
        }
        let mut comp = vec![start];
        seen[start as usize] = true;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &u in g.neighbors(v) {
                if s.contains(u) && !seen[u as usize] {
                    seen[u as usize] = true;
                    comp.push(u);
                    queue.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
