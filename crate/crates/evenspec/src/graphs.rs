//! Simple undirected graphs on up to 62 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` bitset row per
//! vertex, which keeps the hot paths (canonical labeling, enumeration)
//! allocation-free. graph6 covers the short form only, which is exactly
//! the `n <= 62` range this crate works in.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::{Error, Result};

/// Largest order representable in short-form graph6.
pub const MAX_N: usize = 62;
/// Largest order accepted by canonical labeling (the key must fit in 64
/// bits: C(9,2) = 36).
pub const CANON_MAX_N: usize = 9;
/// Largest order accepted by exhaustive enumeration.
pub const ENUM_MAX_N: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("graph order must be positive".into()));
        }
        if n > MAX_N {
            return Err(Error::Capacity(format!("graph order {n} exceeds {MAX_N}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!("cycle needs >= 3 vertices, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.add_edge(u, (u + 1) % n)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.add_edge(u - 1, u)?;
        }
        Ok(g)
    }

    /// Star K_{1,n-1} with center 0.
    pub fn star(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Invalid(format!(
                "edge ({u},{v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let u = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(u)
            }
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|v| (!self.adj[v] & full) & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union, `other`'s vertices shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(Error::Capacity(format!("union order {n} exceeds {MAX_N}")));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }
}

// ============================================================
// graph6 (short form)
// ============================================================

/// Column-major upper-triangle pair order used by graph6:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
fn pairs_colmajor(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let head = bytes[0];
    if head == 126 {
        return Err(Error::Capacity("long-form graph6 (n > 62) not supported".into()));
    }
    if !(63..=125).contains(&head) {
        return Err(Error::Graph6(format!("invalid order byte {head}")));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 not supported".into()));
    }
    let t = n * (n - 1) / 2;
    let groups = t.div_ceil(6);
    if bytes.len() != 1 + groups {
        return Err(Error::Graph6(format!(
            "expected {} bytes for order {n}, got {}",
            1 + groups,
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    for (p, (i, j)) in pairs_colmajor(n).enumerate() {
        let b = bytes[1 + p / 6];
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b}")));
        }
        if (b - 63) >> (5 - p % 6) & 1 == 1 {
            g.add_edge(i, j)?;
        }
    }
    // padding bits beyond the triangle must be zero
    if t % 6 != 0 {
        let last = bytes[1 + groups - 1] - 63;
        let pad = 6 - t % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n;
    let t = n * (n - 1) / 2;
    let mut out = vec![63 + n as u8];
    out.resize(1 + t.div_ceil(6), 63);
    for (p, (i, j)) in pairs_colmajor(n).enumerate() {
        if g.has_edge(i, j) {
            out[1 + p / 6] += 1 << (5 - p % 6);
        }
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

// ============================================================
// metrics
// ============================================================

/// BFS distance, `None` when `v` is unreachable from `u`.
pub fn distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    let (dist, _) = bfs_paths(g, u);
    dist[v].map(|d| d as usize)
}

/// Length of a shortest u-v path and whether that path is unique.
/// `None` when `v` is unreachable.
pub fn unique_shortest_path(g: &Graph, u: usize, v: usize) -> Option<(usize, bool)> {
    let (dist, count) = bfs_paths(g, u);
    dist[v].map(|d| (d as usize, count[v] == 1))
}

/// Distances and shortest-path counts from `src`. Counts saturate, which
/// is harmless: only count == 1 is ever inspected.
fn bfs_paths(g: &Graph, src: usize) -> (Vec<Option<u32>>, Vec<u64>) {
    assert!(src < g.n, "vertex out of range");
    let mut dist: Vec<Option<u32>> = vec![None; g.n];
    let mut count = vec![0u64; g.n];
    dist[src] = Some(0);
    count[src] = 1;
    let mut frontier = vec![src];
    let mut d = 0u32;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors(x) {
                match dist[y] {
                    None => {
                        dist[y] = Some(d + 1);
                        count[y] = count[x];
                        next.push(y);
                    }
                    Some(dy) if dy == d + 1 => {
                        count[y] = count[y].saturating_add(count[x]);
                    }
                    _ => {}
                }
            }
        }
        frontier = next;
        d += 1;
    }
    (dist, count)
}

// ============================================================
// products
// ============================================================

/// Tensor product where the `g` factor carries loops at the listed
/// vertices and `h` is taken loop-free. Vertex (u, u') maps to index
/// u * h.n() + u'. Pairs are adjacent iff the g-side coordinates are
/// adjacent (or equal at a loop vertex) and the h-side coordinates are
/// adjacent.
pub fn tensor_graph(g: &Graph, loops: &[usize], h: &Graph) -> Result<Graph> {
    let n = g
        .n
        .checked_mul(h.n)
        .filter(|&n| n <= MAX_N)
        .ok_or_else(|| Error::Capacity(format!("tensor order {} exceeds {MAX_N}", g.n * h.n)))?;
    let mut loop_mask = 0u64;
    for &v in loops {
        if v >= g.n {
            return Err(Error::Invalid(format!("loop vertex {v} out of range")));
        }
        loop_mask |= 1 << v;
    }
    let mut out = Graph::empty(n)?;
    for u in 0..g.n {
        for v in u..g.n {
            let g_side = if u == v {
                (loop_mask >> u) & 1 == 1
            } else {
                g.has_edge(u, v)
            };
            if !g_side {
                continue;
            }
            for (up, vp) in h.edges() {
                out.add_edge(u * h.n + up, v * h.n + vp)?;
                if u != v {
                    out.add_edge(u * h.n + vp, v * h.n + up)?;
                }
            }
        }
    }
    Ok(out)
}

// ============================================================
// canonical labeling
// ============================================================

/// Canonical key: the lexicographically minimal upper-triangle bitstring
/// over all vertex relabelings, in the same column-major pair order as
/// graph6, packed most significant bit first.
pub fn canonical_label(g: &Graph) -> Result<u64> {
    if g.n > CANON_MAX_N {
        return Err(Error::Capacity(format!(
            "canonical labeling limited to n <= {CANON_MAX_N}, got {}",
            g.n
        )));
    }
    if g.n <= 1 {
        return Ok(0);
    }
    let mut c = Canon {
        n: g.n,
        t: (g.n * (g.n - 1) / 2) as u32,
        adj: {
            let mut a = [0u16; CANON_MAX_N];
            for v in 0..g.n {
                a[v] = g.adj[v] as u16;
            }
            a
        },
        best: 0,
        perm: [0; CANON_MAX_N],
    };
    c.best = c.greedy_bound();
    c.dfs(0, 0, 0);
    Ok(c.best)
}

/// Rebuild the canonical representative graph from its key.
pub fn from_canonical_key(n: usize, key: u64) -> Result<Graph> {
    if n > CANON_MAX_N {
        return Err(Error::Capacity(format!(
            "canonical keys limited to n <= {CANON_MAX_N}, got {n}"
        )));
    }
    let t = n * (n - 1) / 2;
    let mut g = Graph::empty(n)?;
    for (p, (i, j)) in pairs_colmajor(n).enumerate() {
        if key >> (t - 1 - p) & 1 == 1 {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

struct Canon {
    n: usize,
    t: u32,
    adj: [u16; CANON_MAX_N],
    best: u64,
    perm: [usize; CANON_MAX_N],
}

impl Canon {
    /// Cheap full labeling used as the initial pruning bound: from every
    /// start vertex, greedily append the vertex with the smallest next
    /// block of bits.
    fn greedy_bound(&self) -> u64 {
        let mut best = u64::MAX;
        for start in 0..self.n {
            let mut perm = [0usize; CANON_MAX_N];
            perm[0] = start;
            let mut used = 1u16 << start;
            let mut val = 0u64;
            for depth in 1..self.n {
                let mut best_block = u64::MAX;
                let mut best_v = 0;
                for v in 0..self.n {
                    if used >> v & 1 == 1 {
                        continue;
                    }
                    let mut block = 0u64;
                    for &p in perm.iter().take(depth) {
                        block = block << 1 | u64::from(self.adj[p] >> v & 1);
                    }
                    if block < best_block {
                        best_block = block;
                        best_v = v;
                    }
                }
                perm[depth] = best_v;
                used |= 1 << best_v;
                val = val << depth | best_block;
            }
            best = best.min(val);
        }
        best
    }

    fn dfs(&mut self, depth: usize, used: u16, prefix: u64) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut block = 0u64;
            for k in 0..depth {
                block = block << 1 | u64::from(self.adj[self.perm[k]] >> v & 1);
            }
            let next = prefix << depth | block;
            let len = (depth * (depth + 1) / 2) as u32;
            // lexicographic prefix cut against the best complete labeling
            if len > 0 && next > self.best >> (self.t - len) {
                continue;
            }
            self.perm[depth] = v;
            self.dfs(depth + 1, used | 1 << v, next);
        }
    }
}

// ============================================================
// enumeration
// ============================================================

/// All connected graphs on `n` vertices up to isomorphism, as canonical
/// representatives sorted by (edge count, canonical key).
///
/// Works by vertex extension: every connected graph on m+1 vertices arises
/// from a connected graph on m vertices by appending a vertex joined to a
/// nonempty subset (delete any non-cut vertex to see this), so extending
/// every representative by every nonempty subset and deduplicating by
/// canonical key is exhaustive.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUM_MAX_N {
        return Err(Error::Capacity(format!(
            "enumeration limited to 1 <= n <= {ENUM_MAX_N}, got {n}"
        )));
    }
    let mut reps = vec![Graph::empty(1)?];
    for m in 2..=n {
        let keys: HashSet<u64> = reps
            .par_iter()
            .map(|g| {
                let mut local = HashSet::new();
                for mask in 1u64..(1 << (m - 1)) {
                    let mut h = Graph {
                        n: m,
                        adj: g.adj.clone(),
                    };
                    h.adj.push(0);
                    let mut rest = mask;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        h.add_edge(v, m - 1).expect("extension edge in range");
                    }
                    local.insert(canonical_label(&h).expect("order within canon bound"));
                }
                local
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let mut sorted: Vec<u64> = keys.into_iter().collect();
        sorted.sort_by_key(|k| (k.count_ones(), *k));
        reps = sorted
            .into_iter()
            .map(|k| from_canonical_key(m, k))
            .collect::<Result<_>>()?;
    }
    Ok(reps)
}

// ============================================================
// tests
// ============================================================
