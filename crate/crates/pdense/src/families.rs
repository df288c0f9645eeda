//! Deterministic graph generators for benchmark and adversarial families,
//! plus the whole-graph minimum objective drop used to reason about peel
//! order between structures.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A generatable graph family. All generators are deterministic; node
/// numbering is contiguous and documented per family.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// Complete graph on `size` nodes, numbered `0..size`.
    Clique { size: u32 },
    /// Complete bipartite graph: left side `0..a`, right side `a..a+b`.
    CompleteBipartite { a: u32, b: u32 },
    /// `K_{copies,d}` plus `copies` disjoint cliques `K_{d+2}`. Low-degree
    /// bipartite side `0..copies`, high-degree side `copies..copies+d`,
    /// then the cliques in blocks of `d+2`. Degree peeling dismantles the
    /// bipartite part first even though it is the densest by any power
    /// mean with p > 1.
    BipartiteCliques { d: u32, copies: u32 },
    /// Nodes `0..n`, node `i` adjacent to `i+1..=min(i+k, n-1)`: interior
    /// nodes have degree `2k`. Requires `2k < n`.
    Banded { n: u32, k: u32 },
    /// One `Banded(n, k)` (nodes `0..n`) plus `copies` disjoint cliques
    /// `K_{r+1}` with `r` chosen by [`matched_clique_degree`] so that the
    /// cliques' objective drop barely exceeds the band's at the given `p`.
    /// `copies` defaults to `n`. Drives the objective-drop peel into its
    /// worst-case approximation regime.
    BandedCliques {
        p: f64,
        k: u32,
        n: u32,
        copies: Option<u32>,
    },
    /// G(n, prob) with a fixed ChaCha8 seed; pair `(i, j)`, `i < j`, drawn
    /// in row-major order.
    ErdosRenyi { n: u32, prob: f64, seed: u64 },
}

/// Smallest integer `r` with `r >= 2k/(p+1)^(1/p) + 1`: the clique degree
/// whose drop `r^p + r(r^p - (r-1)^p)` first exceeds the banded drop
/// `(2k)^p`.
pub fn matched_clique_degree(p: f64, k: u32) -> Result<u32> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::InvalidP {
            p: p.to_string(),
            reason: "clique matching requires finite p >= 1".to_string(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidFamily("band width k must be positive".to_string()));
    }
    Ok((2.0 * k as f64 / (p + 1.0).powf(1.0 / p) + 1.0).ceil() as u32)
}

fn clique_edges(base: u32, size: u32, edges: &mut Vec<(u32, u32)>) {
    for i in 0..size {
        for j in (i + 1)..size {
            edges.push((base + i, base + j));
        }
    }
}

fn banded_edges(n: u32, k: u32, edges: &mut Vec<(u32, u32)>) {
    for i in 0..n {
        let hi = (i + k).min(n - 1);
        for j in (i + 1)..=hi {
            edges.push((i, j));
        }
    }
}

/// Build the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Clique { size } => {
            if size == 0 {
                return Err(Error::InvalidFamily("clique size must be positive".to_string()));
            }
            let mut edges = Vec::new();
            clique_edges(0, size, &mut edges);
            Graph::from_index_edges(size, edges)
        }
        FamilySpec::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(Error::InvalidFamily(
                    "both bipartite sides must be non-empty".to_string(),
                ));
            }
            let mut edges = Vec::with_capacity(a as usize * b as usize);
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j));
                }
            }
            Graph::from_index_edges(a + b, edges)
        }
        FamilySpec::BipartiteCliques { d, copies } => {
            if d == 0 || copies == 0 {
                return Err(Error::InvalidFamily(
                    "bipartite-cliques requires d >= 1 and copies >= 1".to_string(),
                ));
            }
            let block = d + 2;
            let n = copies + d + copies * block;
            let mut edges =
                Vec::with_capacity((copies * d) as usize + (copies * block * (block - 1) / 2) as usize);
            for i in 0..copies {
                for j in 0..d {
                    edges.push((i, copies + j));
                }
            }
            for c in 0..copies {
                clique_edges(copies + d + c * block, block, &mut edges);
            }
            Graph::from_index_edges(n, edges)
        }
        FamilySpec::Banded { n, k } => {
            if k == 0 || 2 * k >= n {
                return Err(Error::InvalidFamily(format!(
                    "banded graph requires 0 < k < n/2, got n={n} k={k}"
                )));
            }
            let mut edges = Vec::with_capacity((k * n) as usize);
            banded_edges(n, k, &mut edges);
            Graph::from_index_edges(n, edges)
        }
        FamilySpec::BandedCliques { p, k, n, copies } => {
            if k == 0 || 2 * k >= n {
                return Err(Error::InvalidFamily(format!(
                    "banded part requires 0 < k < n/2, got n={n} k={k}"
                )));
            }
            let copies = copies.unwrap_or(n);
            if copies == 0 {
                return Err(Error::InvalidFamily("copies must be positive".to_string()));
            }
            let r = matched_clique_degree(p, k)?;
            let block = r + 1;
            let total = n as u64 + copies as u64 * block as u64;
            if total > u32::MAX as u64 {
                return Err(Error::InvalidFamily(format!(
                    "family would have {total} nodes, which overflows node ids"
                )));
            }
            let mut edges = Vec::with_capacity(
                (k as u64 * n as u64 + copies as u64 * (block as u64 * (block as u64 - 1) / 2))
                    as usize,
            );
            banded_edges(n, k, &mut edges);
            for c in 0..copies {
                clique_edges(n + c * block, block, &mut edges);
            }
            Graph::from_index_edges(total as u32, edges)
        }
        FamilySpec::ErdosRenyi { n, prob, seed } => {
            if n == 0 {
                return Err(Error::InvalidFamily("graph must have at least one node".to_string()));
            }
            if !(0.0..=1.0).contains(&prob) {
                return Err(Error::InvalidFamily(format!(
                    "edge probability must be in [0, 1], got {prob}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random_bool(prob) {
                        edges.push((i, j));
                    }
                }
            }
            // An edgeless sample cannot serialize to a parseable edge list;
            // callers retry with another seed.
            if edges.is_empty() {
                return Err(Error::NoEdges);
            }
            Graph::from_index_edges(n, edges)
        }
    }
}

/// Minimum over all nodes of the whole-graph objective drop
/// `d_v^p + sum_{u in N(v)} (d_u^p - (d_u - 1)^p)`: the smallest decrease of
/// `sum d^p` any single removal can cause. Comparing this statistic between
/// two structures predicts which one a drop-guided peel dismantles first.
pub fn delta_graph(g: &Graph, p: f64) -> Result<f64> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::InvalidP {
            p: p.to_string(),
            reason: "the drop statistic requires finite p >= 1".to_string(),
        });
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let deg = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;
    let pow: Vec<f64> = (0..=max_deg).map(|d| (d as f64).powf(p)).collect();
    let mut min = f64::INFINITY;
    for v in 0..g.n() {
        let mut acc = pow[deg[v as usize] as usize];
        for &u in g.neighbors(v) {
            let d = deg[u as usize] as usize;
            acc += pow[d] - pow[d - 1];
        }
        min = min.min(acc);
    }
    Ok(min)
}
