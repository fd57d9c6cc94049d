//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which keeps
//! neighborhood operations, BFS sweeps, and complementation branch-free.
//! All exhaustive searches in this crate run at order 8 or below, but the
//! type itself supports anything the bitmask rows can hold.

use crate::error::{Error, Result};

/// Hard cap imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph; the adjacency relation is kept symmetric and
/// irreflexive by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Bitmask with the low `n` bits set: the full vertex set.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                index: u,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Copy of the graph with edge `uv` added. Panics on invalid vertices;
    /// intended for perturbation sweeps over known-good indices.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.add_edge(u, v).expect("vertices in range");
        g
    }

    /// Copy of the graph with edge `uv` removed.
    pub fn with_edge_removed(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v).expect("vertices in range");
        g
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `u` as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] & !(full_mask(u + 1));
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|u| self.adj[u] == all & !(1 << u))
    }

    /// Complement on the same vertex set: edges become non-edges and
    /// vice versa, diagonal stays empty.
    pub fn complement(&self) -> Self {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & all & !(1 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` while staying inside `within`,
    /// as a bitmask. `start` must have its bit set in `within`.
    pub fn reachable(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                next |= self.adj[u];
                m &= m - 1;
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(full_mask(self.n))
    }

    /// Whether the subgraph induced on `within` is connected.
    /// The empty set and singletons count as connected.
    pub fn connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        let start = within.trailing_zeros() as usize;
        self.reachable(start, within) == within
    }

    /// Connected components as bitmasks, in order of their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(full_mask(self.n))
    }

    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = within;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reachable(start, within);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// BFS distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut d = 0u32;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                next |= self.adj[u];
                m &= m - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                dist[v] = d;
                f &= f - 1;
            }
        }
        dist
    }

    /// Largest pairwise distance; errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = 0u32;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                best = best.max(d);
            }
        }
        Ok(best as usize)
    }

    /// Transmission: the sum of distances over unordered vertex pairs.
    /// Errors on disconnected input.
    pub fn transmission(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut total = 0u64;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                total += d as u64;
            }
        }
        Ok(total / 2)
    }

    /// Two-coloring if one exists. The returned masks partition the vertex
    /// set; the side containing the lowest vertex of each component comes
    /// first, so the split is deterministic.
    pub fn bipartition(&self) -> Option<(u64, u64)> {
        let mut color = vec![2u8; self.n];
        let mut side = [0u64; 2];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            side[0] |= 1 << start;
            let mut frontier = 1u64 << start;
            let mut c = 0u8;
            while frontier != 0 {
                let next_c = 1 - c;
                let mut next = 0u64;
                let mut m = frontier;
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    let mut nb = self.adj[u];
                    while nb != 0 {
                        let v = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        if color[v] == c {
                            return None;
                        }
                        if color[v] == 2 {
                            color[v] = next_c;
                            side[next_c as usize] |= 1 << v;
                            next |= 1 << v;
                        }
                    }
                    m &= m - 1;
                }
                frontier = next;
                c = next_c;
            }
        }
        Some((side[0], side[1]))
    }

    /// Subgraph induced on the vertices of `mask`, relabeled to
    /// `0..mask.count_ones()` in ascending original order.
    /// The mask must select at least one vertex.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = iter_bits(mask & full_mask(self.n)).collect();
        let k = verts.len();
        debug_assert!(k >= 1, "induced subgraph needs a nonempty vertex set");
        let mut adj = vec![0u64; k];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Relabeled copy: vertex `u` of `self` becomes `perm[u]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut m = self.adj[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union: vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Plain text edge list: first line "n m", then one "u v" line per
    /// edge with 0-based endpoints.
    pub fn to_edge_list_string(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    pub fn from_edge_list_str(text: &str) -> Result<Graph> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::EdgeList("vertex count is not a number".into()))?;
        let m: usize = tokens
            .next()
            .ok_or_else(|| Error::EdgeList("missing edge count".into()))?
            .parse()
            .map_err(|_| Error::EdgeList("edge count is not a number".into()))?;
        let mut g = Graph::new(n)?;
        for _ in 0..m {
            let u: usize = tokens
                .next()
                .ok_or_else(|| Error::EdgeList("fewer edges than declared".into()))?
                .parse()
                .map_err(|_| Error::EdgeList("endpoint is not a number".into()))?;
            let v: usize = tokens
                .next()
                .ok_or_else(|| Error::EdgeList("edge line missing second endpoint".into()))?
                .parse()
                .map_err(|_| Error::EdgeList("endpoint is not a number".into()))?;
            g.add_edge(u, v)?;
        }
        if tokens.next().is_some() {
            return Err(Error::EdgeList("trailing tokens after declared edges".into()));
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bit positions of a mask, ascending.
pub fn iter_bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Complete graph K_n.
pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Edgeless graph O_n.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::new(n)
}

/// Path P_n with edges along consecutive indices.
pub fn path_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 1..n {
        g.add_edge(u - 1, u)?;
    }
    Ok(g)
}

/// Cycle C_n (n >= 3).
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(
            "n >= 3 required for a cycle".into(),
        ));
    }
    let mut g = path_graph(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Complete bipartite K_{a,b} with sides [0,a) and [a,a+b).
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction_and_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degree_sequence(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn rejects_bad_orders_and_loops() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(65).is_err());
        assert!(Graph::new(64).is_ok());
        let mut g = Graph::new(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn complement_is_involutive_small() {
        for n in 1..=5 {
            let total_pairs = n * (n - 1) / 2;
            for mask in 0u64..(1 << total_pairs) {
                let g = graph_from_pair_mask(n, mask);
                let cc = g.complement().complement();
                assert_eq!(g, cc);
                assert_eq!(
                    g.edge_count() + g.complement().edge_count(),
                    total_pairs
                );
            }
        }
    }

    // local helper mirroring the enumeration bit order
    fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::new(n).unwrap();
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> idx & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
                idx += 1;
            }
        }
        g
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete_graph(5).unwrap().diameter().unwrap(), 1);
        assert_eq!(cycle_graph(5).unwrap().diameter().unwrap(), 2);
        assert_eq!(path_graph(4).unwrap().diameter().unwrap(), 3);
        assert!(empty_graph(2).unwrap().diameter().is_err());
        assert_eq!(complete_graph(1).unwrap().diameter().unwrap(), 0);
    }

    #[test]
    fn transmission_examples() {
        // P3: two adjacent pairs plus the endpoints at distance 2.
        assert_eq!(path_graph(3).unwrap().transmission().unwrap(), 4);
        // Complete graphs: every pair at distance 1.
        assert_eq!(complete_graph(6).unwrap().transmission().unwrap(), 15);
        // Diameter-2 graphs: |pairs| + number of non-edges.
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.transmission().unwrap(), 10 + 5);
    }

    #[test]
    fn transmission_matches_pair_formula_at_diameter_two() {
        let g = complete_bipartite(2, 3).unwrap();
        let n = g.n() as u64;
        let nonedges = n * (n - 1) / 2 - g.edge_count() as u64;
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(
            g.transmission().unwrap(),
            n * (n - 1) / 2 + nonedges
        );
    }

    #[test]
    fn bipartition_examples() {
        let c4 = cycle_graph(4).unwrap();
        let (a, b) = c4.bipartition().unwrap();
        assert_eq!(a, 0b0101);
        assert_eq!(b, 0b1010);
        assert!(complete_graph(3).unwrap().bipartition().is_none());
        // Disconnected bipartite graphs still split.
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_edges.bipartition().is_some());
    }

    #[test]
    fn components_and_reachability() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![0b00011, 0b01100, 0b10000]);
        assert!(g.connected_within(0b00011));
        assert!(!g.connected_within(0b00101));
    }

    #[test]
    fn induced_and_relabeled() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        let h = g.induced_subgraph(0b10101);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);

        // perm[old] = new: the path center (old 1) becomes vertex 0.
        let p3 = path_graph(3).unwrap();
        let r = p3.relabeled(&[2, 0, 1]);
        assert_eq!(r.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(6, &[(0, 5), (1, 4), (2, 3), (0, 1)]).unwrap();
        let s = g.to_edge_list_string();
        let h = Graph::from_edge_list_str(&s).unwrap();
        assert_eq!(g, h);
        assert!(Graph::from_edge_list_str("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list_str("3 1\n0 1\n9 9\n").is_err());
        assert!(Graph::from_edge_list_str("2 1\n0 0\n").is_err());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let a = complete_graph(3).unwrap();
        let b = path_graph(2).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.n(), 5);
        assert!(u.has_edge(3, 4));
        assert!(!u.has_edge(2, 3));
        assert_eq!(u.components().len(), 2);
    }
}
