//! Greedy peeling engines.
//!
//! Both engines remove one node per round until the graph is empty, score
//! every intermediate set, and return the best prefix of the removal order:
//!
//! * [`simple_peel`] removes a node of minimum induced degree. At `p = 1`
//!   its best prefix is a 1/2-approximation of the densest subgraph; at
//!   `p = -inf` it recovers the maxcore exactly; for large finite `p` it can
//!   be arbitrarily bad.
//! * [`gen_peel`] removes the node whose deletion least decreases
//!   `sum_v d_v(S)^p`. Its best prefix is a `(p+1)^(1/p)`-approximation of
//!   the `M_p`-densest subgraph for `p >= 1`.
//!
//! [`core_decomposition`] computes exact core numbers in linear time, and
//! [`rescore`] / [`best_prefix`] re-evaluate an existing removal order under
//! a different exponent without re-peeling.

use std::cmp::Ordering;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::metrics::PValue;

/// Full record of one peeling run.
///
/// `order[i]` is the node removed in round `i`; `prefix_objective[i]` scores
/// the set `S_i` that was still alive at the *start* of round `i` (so
/// `S_0` is the whole graph). Entries are `None` where the objective is
/// undefined: for `p <= 0` (including `-inf`) any set containing a
/// zero-degree node is skipped.
///
/// The stored objective is `f_p(S) = sum_v d_v(S)^p / |S|` for finite
/// `p > 0` (argmax-equivalent to the p-mean and cheaper), the p-mean `M_p`
/// itself for finite `p <= 0`, and the minimum/maximum induced degree at the
/// infinite limits.
#[derive(Clone, Debug)]
pub struct PeelTrace {
    pub order: Vec<u32>,
    pub prefix_objective: Vec<Option<f64>>,
    /// Earliest index attaining the maximum defined objective.
    pub best_index: usize,
    pub best_objective: f64,
    /// The nodes still alive at the start of round `best_index`.
    pub best_set: NodeSet,
    /// Exponent the prefixes were scored under.
    pub scored_p: PValue,
}

/// Exact core numbers of every node, from min-degree peeling.
#[derive(Clone, Debug)]
pub struct CoreDecomposition {
    /// `core_number[v]` = largest k such that v belongs to the k-core.
    pub core_number: Vec<u32>,
    /// Maximum core number over all nodes.
    pub degeneracy: u32,
    /// Nodes whose core number equals the degeneracy; this set maximizes the
    /// minimum induced degree.
    pub maxcore_set: NodeSet,
}

impl CoreDecomposition {
    /// Nodes with core number at least `k` (empty when `k` exceeds the
    /// degeneracy).
    pub fn k_core(&self, k: u32) -> NodeSet {
        let n = self.core_number.len() as u32;
        let members = (0..n).filter(|&v| self.core_number[v as usize] >= k);
        NodeSet::new(n, members).expect("core members are in range")
    }
}

/// How prefixes are scored for a given exponent.
enum Regime {
    /// Finite p > 0: track `sum d^p`, report `f_p`.
    PosPower { pow: Vec<f64>, sum: f64, inv_p: f64 },
    /// Finite p < 0: track `sum d^p` over positive degrees, report `M_p`;
    /// undefined while any zero-degree node is alive.
    NegPower { pow: Vec<f64>, sum: f64, inv_p: f64 },
    /// p = 0: track `sum ln d`, report the geometric mean; undefined while
    /// any zero-degree node is alive.
    Geometric { ln: Vec<f64>, sum: f64 },
    /// p = -inf: minimum alive degree; undefined while any zero-degree node
    /// is alive (consistent with the finite p < 0 domain).
    MinDeg,
    /// p = +inf: maximum alive degree.
    MaxDeg,
}

/// Incremental scorer for the shrinking alive set.
///
/// Engines drive it with one fixed call sequence per round — score, then one
/// `neighbor_decrement` per alive neighbor in adjacency order, then
/// `remove_node` — so replaying a removal order reproduces every objective
/// bit for bit.
struct PrefixScorer {
    regime: Regime,
    /// cnt[d] = alive nodes with induced degree d.
    cnt: Vec<u32>,
    alive: usize,
    zero_count: usize,
    /// Lower bound on the minimum alive degree, advanced lazily.
    min_ptr: usize,
    /// Upper bound on the maximum alive degree, advanced lazily.
    max_ptr: usize,
}

impl PrefixScorer {
    fn new(g: &Graph, p: PValue) -> PrefixScorer {
        let degs = g.degrees();
        let max_deg = degs.iter().copied().max().unwrap_or(0) as usize;
        let mut cnt = vec![0u32; max_deg + 1];
        for &d in &degs {
            cnt[d as usize] += 1;
        }
        let zero_count = cnt[0] as usize;
        let regime = match p {
            PValue::PosInf => Regime::MaxDeg,
            PValue::NegInf => Regime::MinDeg,
            PValue::Finite(0.0) => {
                let ln: Vec<f64> = (0..=max_deg).map(|d| (d.max(1) as f64).ln()).collect();
                let sum = degs
                    .iter()
                    .filter(|&&d| d > 0)
                    .map(|&d| ln[d as usize])
                    .sum();
                Regime::Geometric { ln, sum }
            }
            PValue::Finite(v) => {
                // pow[0] is never read for v < 0 (zero degrees are excluded
                // from the sum) and is exactly 0 for v > 0.
                let pow: Vec<f64> = (0..=max_deg).map(|d| (d as f64).powf(v)).collect();
                let sum = degs
                    .iter()
                    .filter(|&&d| d > 0)
                    .map(|&d| pow[d as usize])
                    .sum();
                if v > 0.0 {
                    Regime::PosPower { pow, sum, inv_p: 1.0 / v }
                } else {
                    Regime::NegPower { pow, sum, inv_p: 1.0 / v }
                }
            }
        };
        PrefixScorer {
            regime,
            cnt,
            alive: degs.len(),
            zero_count,
            min_ptr: 0,
            max_ptr: max_deg,
        }
    }

    /// Objective of the current alive set, or `None` where undefined.
    fn score(&mut self) -> Option<f64> {
        debug_assert!(self.alive > 0);
        let alive = self.alive as f64;
        match &self.regime {
            Regime::PosPower { sum, inv_p, .. } => {
                let _ = inv_p;
                Some(sum / alive)
            }
            Regime::NegPower { sum, inv_p, .. } => {
                if self.zero_count > 0 {
                    None
                } else {
                    Some((sum / alive).powf(*inv_p))
                }
            }
            Regime::Geometric { sum, .. } => {
                if self.zero_count > 0 {
                    None
                } else {
                    Some((sum / alive).exp())
                }
            }
            Regime::MinDeg => {
                if self.zero_count > 0 {
                    None
                } else {
                    while self.cnt[self.min_ptr] == 0 {
                        self.min_ptr += 1;
                    }
                    Some(self.min_ptr as f64)
                }
            }
            Regime::MaxDeg => {
                while self.max_ptr > 0 && self.cnt[self.max_ptr] == 0 {
                    self.max_ptr -= 1;
                }
                Some(self.max_ptr as f64)
            }
        }
    }

    /// An alive neighbor of the node being removed drops from degree
    /// `old` to `old - 1`.
    fn neighbor_decrement(&mut self, old: u32) {
        let old = old as usize;
        debug_assert!(old >= 1 && self.cnt[old] > 0);
        self.cnt[old] -= 1;
        self.cnt[old - 1] += 1;
        if old - 1 < self.min_ptr {
            self.min_ptr = old - 1;
        }
        if old == 1 {
            self.zero_count += 1;
        }
        match &mut self.regime {
            Regime::PosPower { pow, sum, .. } => *sum += pow[old - 1] - pow[old],
            Regime::NegPower { pow, sum, .. } => {
                if old == 1 {
                    *sum -= pow[1];
                } else {
                    *sum += pow[old - 1] - pow[old];
                }
            }
            Regime::Geometric { ln, sum } => {
                if old == 1 {
                    *sum -= ln[1];
                } else {
                    *sum += ln[old - 1] - ln[old];
                }
            }
            Regime::MinDeg | Regime::MaxDeg => {}
        }
    }

    /// The peeled node itself leaves with current degree `d`.
    fn remove_node(&mut self, d: u32) {
        let d = d as usize;
        debug_assert!(self.cnt[d] > 0);
        self.cnt[d] -= 1;
        self.alive -= 1;
        if d == 0 {
            self.zero_count -= 1;
        }
        match &mut self.regime {
            Regime::PosPower { pow, sum, .. } => *sum -= pow[d],
            Regime::NegPower { pow, sum, .. } => {
                if d > 0 {
                    *sum -= pow[d];
                }
            }
            Regime::Geometric { ln, sum } => {
                if d > 0 {
                    *sum -= ln[d];
                }
            }
            Regime::MinDeg | Regime::MaxDeg => {}
        }
    }
}

/// Pick the earliest best defined prefix and assemble the trace.
fn finish_trace(
    g: &Graph,
    order: Vec<u32>,
    prefix_objective: Vec<Option<f64>>,
    scored_p: PValue,
) -> Result<PeelTrace> {
    debug_assert_eq!(order.len(), g.n() as usize);
    debug_assert_eq!(prefix_objective.len(), order.len());
    let mut best: Option<(usize, f64)> = None;
    for (i, entry) in prefix_objective.iter().enumerate() {
        if let Some(v) = entry {
            if best.is_none_or(|(_, b)| *v > b) {
                best = Some((i, *v));
            }
        }
    }
    let (best_index, best_objective) = best.ok_or(Error::AllPrefixesUndefined)?;
    let best_set = NodeSet::new(g.n(), order[best_index..].iter().copied())
        .expect("peel order nodes are in range");
    Ok(PeelTrace {
        order,
        prefix_objective,
        best_index,
        best_objective,
        best_set,
        scored_p,
    })
}

/// Peel by minimum induced degree, ties to the smallest node index.
///
/// Runs in `O((n + m) log n)` via a lazy binary heap. The trace is scored
/// under `p`; the removal order itself never depends on `p`.
pub fn simple_peel(g: &Graph, p: PValue) -> Result<PeelTrace> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut deg = g.degrees();
    let mut alive = vec![true; n as usize];
    let mut scorer = PrefixScorer::new(g, p);
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        (0..n).map(|v| Reverse((deg[v as usize], v))).collect();
    let mut order = Vec::with_capacity(n as usize);
    let mut prefix_objective = Vec::with_capacity(n as usize);
    while order.len() < n as usize {
        let Reverse((d, v)) = heap.pop().expect("alive nodes remain");
        if !alive[v as usize] || d != deg[v as usize] {
            continue;
        }
        prefix_objective.push(scorer.score());
        alive[v as usize] = false;
        for &u in g.neighbors(v) {
            if alive[u as usize] {
                scorer.neighbor_decrement(deg[u as usize]);
                deg[u as usize] -= 1;
                heap.push(Reverse((deg[u as usize], u)));
            }
        }
        scorer.remove_node(deg[v as usize]);
        order.push(v);
    }
    finish_trace(g, order, prefix_objective, p)
}

/// Exact core numbers via bucket-queue min-degree peeling, `O(n + m)`.
pub fn core_decomposition(g: &Graph) -> Result<CoreDecomposition> {
    let n = g.n() as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut deg: Vec<u32> = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;

    // Counting sort of nodes by degree: vert holds nodes in degree order,
    // pos[v] the position of v in vert, bin[d] the start of degree-d nodes.
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d as usize + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0u32; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n as u32 {
            let d = deg[v as usize] as usize;
            pos[v as usize] = next[d];
            vert[next[d]] = v;
            next[d] += 1;
        }
    }

    let mut core = vec![0u32; n];
    for i in 0..n {
        let v = vert[i];
        core[v as usize] = deg[v as usize];
        for &u in g.neighbors(v) {
            if deg[u as usize] > deg[v as usize] {
                // Swap u with the first node of its degree bucket, then
                // shrink the bucket so u's degree can drop by one.
                let du = deg[u as usize] as usize;
                let pu = pos[u as usize];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u as usize] = pw;
                    pos[w as usize] = pu;
                }
                bin[du] += 1;
                deg[u as usize] -= 1;
            }
        }
    }

    let degeneracy = core.iter().copied().max().unwrap_or(0);
    let members = (0..n as u32).filter(|&v| core[v as usize] == degeneracy);
    let maxcore_set = NodeSet::new(n as u32, members).expect("core members in range");
    Ok(CoreDecomposition {
        core_number: core,
        degeneracy,
        maxcore_set,
    })
}

/// Heap entry for the objective-drop queue. Ordered by `(val, node)` so
/// equal drops resolve to the smallest node index; `ver` only marks whether
/// the entry is current.
#[derive(Clone, Copy, Debug)]
struct DropEntry {
    val: f64,
    node: u32,
    ver: u32,
}

impl PartialEq for DropEntry {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && self.node == other.node
    }
}
impl Eq for DropEntry {}
impl PartialOrd for DropEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for DropEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Values are never NaN: every drop is a sum of non-NaN terms that
        // cannot pair opposite infinities.
        self.val
            .partial_cmp(&other.val)
            .expect("objective drops are never NaN")
            .then(self.node.cmp(&other.node))
    }
}

/// State of the lazy drop queue for one `gen_peel` run.
struct DropQueue {
    heap: BinaryHeap<Reverse<DropEntry>>,
    /// Current version per node; entries with an older version are stale.
    ver: Vec<u32>,
    /// Whether the node's current entry is a lower bound rather than an
    /// exact drop value.
    is_lb: Vec<bool>,
    /// Round stamp to process each dirty node once per removal.
    seen_round: Vec<u32>,
    alive_count: usize,
}

impl DropQueue {
    fn push(&mut self, e: DropEntry) {
        self.heap.push(Reverse(e));
        // Keep the heap proportional to the alive set; valid entries are at
        // most one per alive node, so compaction always shrinks it enough.
        if self.heap.len() > 4 * self.alive_count + 64 {
            let heap = std::mem::take(&mut self.heap);
            let kept: Vec<Reverse<DropEntry>> = heap
                .into_iter()
                .filter(|Reverse(e)| self.ver[e.node as usize] == e.ver)
                .collect();
            self.heap = BinaryHeap::from(kept);
        }
    }
}

/// Peel by minimum objective drop: each round removes the node `j`
/// minimizing the decrease `Delta_j` of `sum_v d_v(S)^p`, ties to the
/// smallest index.
///
/// For `p >= 1` the best prefix satisfies
/// `f_p(best) >= f_p(OPT) / (p + 1)`. Any other finite `p` is accepted and
/// runs as a heuristic with no guarantee; for `p <= 0` all isolated nodes
/// are removed up front. Infinite `p` is rejected (at `p = +inf` the whole
/// graph is already optimal; at `p = -inf` use [`simple_peel`]).
pub fn gen_peel(g: &Graph, p: f64) -> Result<PeelTrace> {
    if !p.is_finite() {
        return Err(Error::InvalidP {
            p: p.to_string(),
            reason: "objective-drop peeling requires finite p".to_string(),
        });
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut deg = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;
    let pow: Vec<f64> = (0..=max_deg).map(|d| (d as f64).powf(p)).collect();
    let mut alive = vec![true; n as usize];
    let mut scorer = PrefixScorer::new(g, PValue::Finite(p));
    let mut order: Vec<u32> = Vec::with_capacity(n as usize);
    let mut prefix_objective = Vec::with_capacity(n as usize);

    let exact_drop = |deg: &[u32], alive: &[bool], j: u32| -> f64 {
        let mut acc = pow[deg[j as usize] as usize];
        for &u in g.neighbors(j) {
            if alive[u as usize] {
                let d = deg[u as usize] as usize;
                acc += pow[d] - pow[d - 1];
            }
        }
        acc
    };

    // For p <= 0 an isolated node has an infinite (or at p = 0, unit) power
    // term and the objective is undefined anyway; remove them up front.
    if p <= 0.0 {
        for v in 0..n {
            if deg[v as usize] == 0 {
                prefix_objective.push(scorer.score());
                alive[v as usize] = false;
                scorer.remove_node(0);
                order.push(v);
            }
        }
    }

    let mut queue = DropQueue {
        heap: BinaryHeap::with_capacity(n as usize),
        ver: vec![0u32; n as usize],
        is_lb: vec![false; n as usize],
        seen_round: vec![u32::MAX; n as usize],
        alive_count: n as usize - order.len(),
    };
    for v in 0..n {
        if alive[v as usize] {
            queue.push(DropEntry {
                val: exact_drop(&deg, &alive, v),
                node: v,
                ver: 0,
            });
        }
    }

    // Mark a node whose drop value may have changed this round. For p > 0
    // the node's own power term `pow[deg]` lower-bounds its drop (neighbor
    // terms are nonnegative), so a cheap bound entry stands in until the
    // node surfaces; a node whose degree did not change and whose current
    // entry is already a bound needs nothing. For p <= 0 neighbor terms can
    // be negative, so the exact drop is recomputed eagerly.
    let mark_dirty = |queue: &mut DropQueue,
                      deg: &[u32],
                      alive: &[bool],
                      w: u32,
                      round: u32,
                      degree_changed: bool| {
        let wi = w as usize;
        if !alive[wi] || queue.seen_round[wi] == round {
            return;
        }
        queue.seen_round[wi] = round;
        if p > 0.0 {
            if !degree_changed && queue.is_lb[wi] {
                return;
            }
            queue.ver[wi] += 1;
            queue.is_lb[wi] = true;
            queue.push(DropEntry {
                val: pow[deg[wi] as usize],
                node: w,
                ver: queue.ver[wi],
            });
        } else {
            let mut acc = pow[deg[wi] as usize];
            for &u in g.neighbors(w) {
                if alive[u as usize] {
                    let d = deg[u as usize] as usize;
                    acc += pow[d] - pow[d - 1];
                }
            }
            queue.ver[wi] += 1;
            queue.is_lb[wi] = false;
            queue.push(DropEntry {
                val: acc,
                node: w,
                ver: queue.ver[wi],
            });
        }
    };

    let mut round: u32 = 0;
    while order.len() < n as usize {
        // Pop until a valid exact entry surfaces; recompute bound entries.
        let v = loop {
            let Reverse(e) = queue.heap.pop().expect("alive nodes remain queued");
            let ni = e.node as usize;
            if !alive[ni] || queue.ver[ni] != e.ver {
                continue;
            }
            if queue.is_lb[ni] {
                queue.ver[ni] += 1;
                queue.is_lb[ni] = false;
                queue.push(DropEntry {
                    val: exact_drop(&deg, &alive, e.node),
                    node: e.node,
                    ver: queue.ver[ni],
                });
                continue;
            }
            break e.node;
        };

        prefix_objective.push(scorer.score());
        alive[v as usize] = false;
        queue.alive_count -= 1;
        for &u in g.neighbors(v) {
            if alive[u as usize] {
                scorer.neighbor_decrement(deg[u as usize]);
                deg[u as usize] -= 1;
            }
        }
        scorer.remove_node(deg[v as usize]);
        order.push(v);

        // Direct neighbors first (their degree changed), then their
        // neighbors, so every degree-changed node gets a fresh entry even
        // when it is also reachable at two hops.
        for &u in g.neighbors(v) {
            mark_dirty(&mut queue, &deg, &alive, u, round, true);
        }
        for &u in g.neighbors(v) {
            if alive[u as usize] {
                for &w in g.neighbors(u) {
                    mark_dirty(&mut queue, &deg, &alive, w, round, false);
                }
            }
        }
        round += 1;
    }
    finish_trace(g, order, prefix_objective, PValue::Finite(p))
}

/// Re-score an existing removal order under a different exponent.
///
/// Replays the order through the same incremental scorer the engines use,
/// so re-scoring at the original exponent reproduces the original trace
/// exactly.
pub fn rescore(g: &Graph, order: &[u32], p: PValue) -> Result<PeelTrace> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if order.len() != n as usize {
        return Err(Error::InvalidSet(format!(
            "removal order has {} entries for a graph with {} nodes",
            order.len(),
            n
        )));
    }
    let mut alive = vec![false; n as usize];
    for &v in order {
        if v >= n {
            return Err(Error::NodeOutOfRange { node: v, n });
        }
        if alive[v as usize] {
            return Err(Error::InvalidSet(format!(
                "node {v} appears twice in the removal order"
            )));
        }
        alive[v as usize] = true;
    }
    let mut deg = g.degrees();
    let mut scorer = PrefixScorer::new(g, p);
    let mut prefix_objective = Vec::with_capacity(order.len());
    for &v in order {
        prefix_objective.push(scorer.score());
        alive[v as usize] = false;
        for &u in g.neighbors(v) {
            if alive[u as usize] {
                scorer.neighbor_decrement(deg[u as usize]);
                deg[u as usize] -= 1;
            }
        }
        scorer.remove_node(deg[v as usize]);
    }
    finish_trace(g, order.to_vec(), prefix_objective, p)
}

/// Best prefix of an existing trace's removal order under exponent `p`.
pub fn best_prefix(g: &Graph, trace: &PeelTrace, p: PValue) -> Result<(NodeSet, f64)> {
    let rescored = rescore(g, &trace.order, p)?;
    Ok((rescored.best_set, rescored.best_objective))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_degrees;
    use crate::metrics::{delta_j, fp_value};

    fn k3() -> Graph {
        Graph::from_index_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_index_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_index_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    /// K3 on {0,1,2} disjoint from K4 on {3,4,5,6}.
    fn k3_k4() -> Graph {
        Graph::from_index_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    /// Deterministic scratch graph on `n` nodes: edge (i, j) present when
    /// a fixed multiplicative hash of the pair clears a threshold.
    fn scratch_graph(n: u32, keep_mod: u64) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let h = (i as u64)
                    .wrapping_mul(0x9e3779b97f4a7c15)
                    .wrapping_add((j as u64).wrapping_mul(0xbf58476d1ce4e5b9));
                let h = (h ^ (h >> 31)).wrapping_mul(0x94d049bb133111eb);
                if (h >> 16).is_multiple_of(keep_mod) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_index_edges(n, edges).unwrap()
    }

    /// From-scratch reference peel: recomputes every drop each round with
    /// the library's own delta function.
    fn naive_gen_peel_order(g: &Graph, p: f64) -> Vec<u32> {
        let n = g.n();
        let mut alive: Vec<u32> = (0..n).collect();
        let mut order = Vec::new();
        if p <= 0.0 {
            let degs = g.degrees();
            for v in 0..n {
                if degs[v as usize] == 0 {
                    order.push(v);
                    alive.retain(|&x| x != v);
                }
            }
        }
        while !alive.is_empty() {
            let s = NodeSet::new(n, alive.iter().copied()).unwrap();
            let deg = induced_degrees(g, &s);
            let mut best: Option<(f64, u32)> = None;
            for &j in &alive {
                let d = delta_j(g, &s, &deg, j, p).unwrap();
                let better = match best {
                    None => true,
                    Some((bv, _)) => d < bv,
                };
                if better {
                    best = Some((d, j));
                }
            }
            let (_, v) = best.unwrap();
            order.push(v);
            alive.retain(|&x| x != v);
        }
        order
    }

    #[test]
    fn simple_peel_keeps_cliques_whole() {
        let t = simple_peel(&k3(), PValue::Finite(1.0)).unwrap();
        assert_eq!(t.best_set.members(), &[0, 1, 2]);
        assert_eq!(t.best_objective, 2.0);
        assert_eq!(t.best_index, 0);
        assert_eq!(t.order.len(), 3);
    }

    #[test]
    fn simple_peel_bowtie_best_is_whole_graph() {
        // Brute force over all 31 nonempty subsets puts the full bowtie
        // first at p = 1: f_1(V) = 12/5.
        let t = simple_peel(&bowtie(), PValue::Finite(1.0)).unwrap();
        assert_eq!(t.best_set.len(), 5);
        assert!((t.best_objective - 2.4).abs() < 1e-12);
    }

    #[test]
    fn simple_peel_order_ties_break_by_index() {
        // Star: leaves 1, 2 go first; then hub 0 ties leaf 3 at degree 1.
        let t = simple_peel(&star(), PValue::Finite(1.0)).unwrap();
        assert_eq!(t.order, vec![1, 2, 0, 3]);
        assert_eq!(t.prefix_objective[0], Some(1.5));
        assert_eq!(t.best_index, 0);
    }

    #[test]
    fn simple_peel_min_degree_objective_skips_isolated_prefixes() {
        let t = simple_peel(&star(), PValue::NegInf).unwrap();
        // Final prefix is a single isolated node: undefined.
        assert_eq!(t.prefix_objective[3], None);
        assert_eq!(t.best_objective, 1.0);
        assert_eq!(t.best_index, 0);
    }

    #[test]
    fn simple_peel_rejects_empty_graph() {
        let g = Graph::from_index_edges(0, []).unwrap();
        assert!(matches!(
            simple_peel(&g, PValue::Finite(1.0)),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn core_numbers_on_small_graphs() {
        let c = core_decomposition(&k3()).unwrap();
        assert_eq!(c.degeneracy, 2);
        assert_eq!(c.core_number, vec![2, 2, 2]);
        assert_eq!(c.maxcore_set.len(), 3);

        let c = core_decomposition(&star()).unwrap();
        assert_eq!(c.degeneracy, 1);
        assert_eq!(c.core_number, vec![1, 1, 1, 1]);

        let c = core_decomposition(&bowtie()).unwrap();
        assert_eq!(c.degeneracy, 2);
        assert_eq!(c.core_number, vec![2, 2, 2, 2, 2]);
        assert_eq!(c.maxcore_set.len(), 5);

        let c = core_decomposition(&k3_k4()).unwrap();
        assert_eq!(c.degeneracy, 3);
        assert_eq!(c.core_number, vec![2, 2, 2, 3, 3, 3, 3]);
        assert_eq!(c.maxcore_set.members(), &[3, 4, 5, 6]);
        assert_eq!(c.k_core(2).len(), 7);
        assert_eq!(c.k_core(3).members(), &[3, 4, 5, 6]);
        assert!(c.k_core(4).is_empty());
    }

    #[test]
    fn gen_peel_prefers_the_denser_clique() {
        let t = gen_peel(&k3_k4(), 2.0).unwrap();
        assert_eq!(t.best_set.members(), &[3, 4, 5, 6]);
        assert!((t.best_objective - 9.0).abs() < 1e-12);
        // The K3 peels first: its drop is 10 against 24 in the K4.
        assert_eq!(&t.order[..3], &[0, 1, 2]);
    }

    #[test]
    fn gen_peel_rejects_infinite_p_and_empty_graphs() {
        assert!(gen_peel(&k3(), f64::INFINITY).is_err());
        assert!(gen_peel(&k3(), f64::NEG_INFINITY).is_err());
        let g = Graph::from_index_edges(0, []).unwrap();
        assert!(matches!(gen_peel(&g, 2.0), Err(Error::EmptyGraph)));
    }

    #[test]
    fn gen_peel_at_p1_matches_simple_peel_order() {
        // At p = 1 the drop is exactly twice the degree, so both engines
        // see the same argmin and the same ties.
        for g in [k3(), star(), bowtie(), k3_k4(), scratch_graph(60, 7)] {
            let s = simple_peel(&g, PValue::Finite(1.0)).unwrap();
            let t = gen_peel(&g, 1.0).unwrap();
            assert_eq!(s.order, t.order);
            assert_eq!(s.best_index, t.best_index);
        }
    }

    #[test]
    fn gen_peel_matches_from_scratch_reference() {
        for p in [0.5, 1.0, 2.0, 3.0, -1.0, 0.0] {
            for g in [star(), bowtie(), k3_k4(), scratch_graph(40, 5)] {
                let fast = gen_peel(&g, p).unwrap();
                let slow = naive_gen_peel_order(&g, p);
                assert_eq!(fast.order, slow, "p = {p}");
            }
        }
    }

    #[test]
    fn gen_peel_handles_isolated_nodes_for_nonpositive_p() {
        // Node 3 is isolated (self-loop input collapses to nothing for it).
        let g = Graph::from_index_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = gen_peel(&g, -1.0).unwrap();
        assert_eq!(t.order[0], 3);
        assert_eq!(t.prefix_objective[0], None);
        // Once only the triangle remains the harmonic mean is defined.
        assert_eq!(t.prefix_objective[1], Some(2.0));
        assert_eq!(t.best_set.members(), &[0, 1, 2]);
    }

    #[test]
    fn rescore_reproduces_original_trace() {
        for p in [PValue::Finite(0.5), PValue::Finite(2.0), PValue::NegInf] {
            let t = simple_peel(&bowtie(), p).unwrap();
            let r = rescore(&bowtie(), &t.order, p).unwrap();
            assert_eq!(t.best_index, r.best_index);
            assert_eq!(t.prefix_objective, r.prefix_objective);
        }
        let t = gen_peel(&k3_k4(), 2.0).unwrap();
        let r = rescore(&k3_k4(), &t.order, PValue::Finite(2.0)).unwrap();
        assert_eq!(t.best_index, r.best_index);
        assert_eq!(t.prefix_objective, r.prefix_objective);
    }

    #[test]
    fn rescore_at_other_exponents() {
        let t = simple_peel(&k3(), PValue::Finite(1.0)).unwrap();
        let (set, val) = best_prefix(&k3(), &t, PValue::Finite(2.0)).unwrap();
        assert_eq!(set.len(), 3);
        assert!((val - 4.0).abs() < 1e-12);

        // Star rescored at -inf finds a prefix of min degree 1.
        let t = simple_peel(&star(), PValue::Finite(1.0)).unwrap();
        let (_, val) = best_prefix(&star(), &t, PValue::NegInf).unwrap();
        assert_eq!(val, 1.0);
    }

    #[test]
    fn rescore_validates_orders() {
        assert!(rescore(&k3(), &[0, 1], PValue::Finite(1.0)).is_err());
        assert!(rescore(&k3(), &[0, 1, 1], PValue::Finite(1.0)).is_err());
        assert!(rescore(&k3(), &[0, 1, 9], PValue::Finite(1.0)).is_err());
    }

    #[test]
    fn min_degree_best_prefix_equals_maxcore() {
        for g in [k3(), star(), bowtie(), k3_k4(), scratch_graph(80, 6)] {
            let cores = core_decomposition(&g).unwrap();
            let t = simple_peel(&g, PValue::NegInf).unwrap();
            assert_eq!(t.best_objective, cores.degeneracy as f64);
            assert_eq!(t.best_set.members(), cores.maxcore_set.members());
        }
    }

    #[test]
    fn prefix_objectives_match_direct_evaluation() {
        let g = scratch_graph(30, 4);
        let p = 2.5;
        let t = gen_peel(&g, p).unwrap();
        for (i, entry) in t.prefix_objective.iter().enumerate() {
            let s = NodeSet::new(g.n(), t.order[i..].iter().copied()).unwrap();
            let direct = fp_value(&g, &s, p).unwrap();
            let got = entry.expect("defined for p > 0");
            assert!(
                (got - direct).abs() <= 1e-9 * direct.abs().max(1.0),
                "prefix {i}: {got} vs {direct}"
            );
        }
    }

    #[test]
    fn gen_peel_greedy_invariant_on_small_graphs() {
        // At every round the removed node attains the true minimum drop.
        let g = bowtie();
        let p = 2.0;
        let t = gen_peel(&g, p).unwrap();
        let mut alive: Vec<u32> = (0..g.n()).collect();
        for &v in &t.order {
            let s = NodeSet::new(g.n(), alive.iter().copied()).unwrap();
            let deg = induced_degrees(&g, &s);
            let min = alive
                .iter()
                .map(|&j| (delta_j(&g, &s, &deg, j, p).unwrap(), j))
                .fold(None::<(f64, u32)>, |acc, cur| match acc {
                    None => Some(cur),
                    Some(best) => Some(if cur.0 < best.0 { cur } else { best }),
                })
                .unwrap();
            assert_eq!(min.1, v);
            alive.retain(|&x| x != v);
        }
    }
}
