//! Vertex connectivity, minimum vertex cuts, and cut profiles.
//!
//! Two independent algorithms compute connectivity: an exhaustive subset
//! search used at small orders (and by every brute-force scan), and a
//! Menger-style max-flow on the vertex-split digraph for larger inputs.
//! They agree everywhere by construction and the test suite checks that.
//! Complete graphs take connectivity n - 1 by convention; disconnected
//! graphs take 0.

use crate::error::{Error, Result};
use crate::graph::{full_mask, iter_bits, Graph};

/// Largest order routed to the exhaustive subset search.
const EXHAUSTIVE_LIMIT: usize = 12;

/// Next k-subset mask in ascending numeric order (Gosper's hack).
/// Runs in u128 so the step never overflows for 64-bit vertex sets.
fn next_subset(mask: u128) -> u128 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    (((r ^ mask) >> 2) / c) | r
}

/// All k-element subsets of the low `n` bit positions, ascending.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= 64);
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        if k == 0 {
            done = true;
            return Some(0);
        }
        if cur >= limit {
            return None;
        }
        let out = cur as u64;
        cur = next_subset(cur);
        if cur >= limit {
            done = true;
        }
        Some(out)
    })
}

/// Whether deleting the vertices of `cut` disconnects `g`.
/// Deleting everything or all but one vertex never counts.
pub fn is_vertex_cut(g: &Graph, cut: u64) -> bool {
    let rest = full_mask(g.n()) & !cut;
    if rest.count_ones() < 2 {
        return false;
    }
    !g.connected_within(rest)
}

/// Vertex connectivity by trying every candidate cut in ascending size.
/// Exponential in the worst case; intended for orders up to 12.
pub fn vertex_connectivity_exhaustive(g: &Graph) -> usize {
    let n = g.n();
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    // A minimum-degree vertex can always be isolated, so the search is
    // bounded by the minimum degree for non-complete graphs.
    let bound = g.min_degree();
    for k in 1..=bound {
        for cut in k_subsets(n, k) {
            if is_vertex_cut(g, cut) {
                return k;
            }
        }
    }
    bound
}

/// Vertex connectivity via vertex-disjoint path counts (max-flow on the
/// split digraph), minimized over non-adjacent pairs.
pub fn vertex_connectivity_flow(g: &Graph) -> usize {
    let n = g.n();
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(max_vertex_disjoint_paths(g, s, t));
            }
        }
    }
    best
}

/// Number of internally vertex-disjoint s-t paths, via unit-capacity
/// max flow on the standard vertex-split network: vertex u becomes
/// u_in -> u_out with capacity 1 (infinite at the endpoints), each edge
/// uv becomes u_out -> v_in and v_out -> u_in.
fn max_vertex_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let nodes = 2 * n;
    let idx_in = |u: usize| 2 * u;
    let idx_out = |u: usize| 2 * u + 1;
    let big = n as i32;

    // Dense capacity matrix; at most 128 nodes so this stays small.
    let mut cap = vec![0i32; nodes * nodes];
    for u in 0..n {
        cap[idx_in(u) * nodes + idx_out(u)] = if u == s || u == t { big } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[idx_out(u) * nodes + idx_in(v)] = big;
        cap[idx_out(v) * nodes + idx_in(u)] = big;
    }

    let source = idx_out(s);
    let sink = idx_in(t);
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path.
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..nodes {
                if parent[v] == usize::MAX && cap[u * nodes + v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        // Augment by 1: all path bottlenecks are unit vertex capacities.
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u * nodes + v] -= 1;
            cap[v * nodes + u] += 1;
            v = u;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity; dispatches on order.
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.n() <= EXHAUSTIVE_LIMIT {
        vertex_connectivity_exhaustive(g)
    } else {
        vertex_connectivity_flow(g)
    }
}

/// Every minimum vertex cut, as masks in ascending numeric order.
/// Complete graphs have none. A disconnected graph has the empty cut.
pub fn all_minimum_cuts(g: &Graph) -> Vec<u64> {
    if !g.is_connected() {
        return vec![0];
    }
    if g.is_complete() {
        return Vec::new();
    }
    let kappa = vertex_connectivity(g);
    k_subsets(g.n(), kappa)
        .filter(|&cut| is_vertex_cut(g, cut))
        .collect()
}

/// What deleting one minimum cut leaves behind.
///
/// Components are sorted by size then by mask, so `components[0]` is the
/// deterministic choice of smallest side. The sides have `s <= t` by
/// construction, where the t side is the union of all other components.
/// `v` is the lowest-index vertex on the t side with no neighbor in the
/// cut, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProfile {
    pub cut: u64,
    pub components: Vec<u64>,
    pub s: usize,
    pub t: usize,
    pub v: Option<usize>,
}

impl CutProfile {
    pub fn kappa(&self) -> usize {
        self.cut.count_ones() as usize
    }

    /// The chosen smallest component.
    pub fn s_side(&self) -> u64 {
        self.components[0]
    }

    /// Union of every component except the chosen smallest.
    pub fn t_side(&self) -> u64 {
        self.components[1..].iter().fold(0, |acc, c| acc | c)
    }
}

/// Profile of a disconnecting vertex set. Errors when deleting `cut`
/// leaves the rest connected.
pub fn cut_profile(g: &Graph, cut: u64) -> Result<CutProfile> {
    if !is_vertex_cut(g, cut) {
        return Err(Error::InvalidParams(
            "cut does not disconnect the graph".into(),
        ));
    }
    let rest = full_mask(g.n()) & !cut;
    let mut components = g.components_within(rest);
    components.sort_by_key(|c| (c.count_ones(), *c));
    let s = components[0].count_ones() as usize;
    let t = (rest.count_ones() as usize) - s;
    let t_side = components[1..].iter().fold(0u64, |acc, c| acc | c);
    let v = iter_bits(t_side).find(|&u| g.neighbors(u) & cut == 0);
    Ok(CutProfile {
        cut,
        components,
        s,
        t,
        v,
    })
}
