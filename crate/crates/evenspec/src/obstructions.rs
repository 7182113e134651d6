//! Certified fast "no" tests. Each returns a replayable witness rather
//! than a bare boolean, so classification records can be audited later.
//!
//! Soundness notes:
//! * odd order: a square polynomial has even degree;
//! * trees: the extreme eigenvalues of a tree matrix are always simple;
//! * unique shortest path of length d forces at least d+1 distinct
//!   eigenvalues, while a square characteristic polynomial on 2m vertices
//!   allows at most m of them, so d >= m rules the graph out;
//! * a vertex carrying all but two of the remaining vertices as pendants
//!   forces a block structure (free 3x3 corner, diagonal tail coupled
//!   through an all-nonzero vector) that cannot have a square polynomial.

use serde::{Deserialize, Serialize};

use crate::graphs::{unique_shortest_path, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    OddOrder { n: usize },
    Tree,
    UniquePath { u: usize, v: usize, dist: usize },
    PendantFamily { v: usize, x: [usize; 2], pendants: Vec<usize> },
}

pub fn parity_no(g: &Graph) -> Option<Obstruction> {
    if g.n() % 2 != 0 {
        Some(Obstruction::OddOrder { n: g.n() })
    } else {
        None
    }
}

pub fn tree_no(g: &Graph) -> Option<Obstruction> {
    if g.is_tree() {
        Some(Obstruction::Tree)
    } else {
        None
    }
}

/// Lower bound for the minimum number of distinct eigenvalues over all
/// matrices with this pattern: max of d(u,v) + 1 over pairs joined by a
/// unique shortest path, together with a maximizing pair. Returns
/// (1, None) when no pair is reachable (in particular for K1).
pub fn q_lower_bound(g: &Graph) -> (usize, Option<(usize, usize)>) {
    let mut best = (1, None);
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if let Some((d, true)) = unique_shortest_path(g, u, v) {
                if d + 1 > best.0 {
                    best = (d + 1, Some((u, v)));
                }
            }
        }
    }
    best
}

/// Unique-shortest-path obstruction for connected graphs of even order
/// 2m: fires when some unique shortest path has length >= m, since then
/// every matrix has at least m+1 distinct eigenvalues but a square
/// polynomial allows at most m.
pub fn unique_path_no(g: &Graph) -> Option<Obstruction> {
    if g.n() % 2 != 0 || !g.is_connected() {
        return None;
    }
    let m = g.n() / 2;
    let (bound, pair) = q_lower_bound(g);
    if bound >= m + 1 {
        let (u, v) = pair.expect("bound above 1 always carries a pair");
        return Some(Obstruction::UniquePath { u, v, dist: bound - 1 });
    }
    None
}

/// Pendant-family obstruction for even order >= 6: a vertex v and a
/// 2-set X such that every vertex outside X and v has neighborhood
/// exactly {v}.
pub fn pendant_family_no(g: &Graph) -> Option<Obstruction> {
    let n = g.n();
    if n < 6 || n % 2 != 0 {
        return None;
    }
    for v in 0..n {
        let vbit = 1u64 << v;
        let mut non_pendant: Vec<usize> = Vec::new();
        let mut pendants: Vec<usize> = Vec::new();
        for u in 0..n {
            if u == v {
                continue;
            }
            if g.neighbors_mask(u) == vbit {
                pendants.push(u);
            } else {
                non_pendant.push(u);
            }
        }
        if non_pendant.len() > 2 {
            continue;
        }
        // X covers the non-pendant vertices, padded from the pendants
        let mut x = non_pendant;
        while x.len() < 2 {
            x.push(pendants.pop().expect("n >= 6 leaves enough pendants"));
        }
        x.sort_unstable();
        pendants.sort_unstable();
        return Some(Obstruction::PendantFamily { v, x: [x[0], x[1]], pendants });
    }
    None
}

/// All obstructions in pipeline order; first hit wins.
pub fn first_obstruction(g: &Graph) -> Option<Obstruction> {
    parity_no(g)
        .or_else(|| tree_no(g))
        .or_else(|| unique_path_no(g))
        .or_else(|| pendant_family_no(g))
}

/// Re-verify a recorded witness against the graph.
pub fn replay(g: &Graph, ob: &Obstruction) -> bool {
    match ob {
        Obstruction::OddOrder { n } => g.n() == *n && n % 2 != 0,
        Obstruction::Tree => g.is_tree(),
        Obstruction::UniquePath { u, v, dist } => {
            g.n() % 2 == 0
                && *u < g.n()
                && *v < g.n()
                && g.is_connected()
                && *dist >= g.n() / 2
                && unique_shortest_path(g, *u, *v) == Some((*dist, true))
        }
        Obstruction::PendantFamily { v, x, pendants } => {
            let n = g.n();
            if n < 6 || n % 2 != 0 || *v >= n || x[0] == x[1] {
                return false;
            }
            let mut covered: Vec<usize> = vec![*v, x[0], x[1]];
            covered.extend(pendants);
            covered.sort_unstable();
            covered.dedup();
            covered.len() == n
                && covered.iter().all(|&u| u < n)
                && pendants.iter().all(|&y| g.neighbors_mask(y) == 1 << *v)
        }
    }
}

// ============================================================
// tests
// ============================================================
