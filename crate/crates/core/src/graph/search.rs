//! Exact branch-and-bound searches over bitmask adjacency.
//!
//! These back the oracles, not a production solver: they are exact and
//! comfortably fast up to roughly sixteen vertices.

use super::dense::{bits, Dense};

fn closed(g: &Dense, v: usize) -> u128 {
    g.adj[v] | (1 << v)
}

pub(super) fn induced_matching_number(g: &Dense) -> usize {
    let mut best = 0;
    induced_matching(g, g.all(), 0, &mut best);
    best
}

/// `avail` holds the vertices that may still be matched: none of them is
/// adjacent to, or equal to, an endpoint of an already chosen edge.
fn induced_matching(g: &Dense, avail: u128, current: usize, best: &mut usize) {
    let live = bits(avail)
        .filter(|&v| g.adj[v] & avail != 0)
        .fold(0u128, |m, v| m | (1 << v));
    if live == 0 {
        *best = (*best).max(current);
        return;
    }
    if current + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = bits(live)
        .min_by_key(|&v| (g.adj[v] & live).count_ones())
        .expect("live is nonempty");
    for w in bits(g.adj[v] & live) {
        induced_matching(g, live & !(closed(g, v) | closed(g, w)), current + 1, best);
    }
    induced_matching(g, live & !(1 << v), current, best);
}

pub(super) fn min_vertex_cover_size(g: &Dense) -> usize {
    let mut best = g.len();
    vertex_cover(g, g.all(), 0, &mut best);
    best
}

/// Covers the edges among `alive`; chosen vertices are removed from it.
fn vertex_cover(g: &Dense, alive: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let Some((v, deg)) = bits(alive)
        .map(|v| (v, (g.adj[v] & alive).count_ones() as usize))
        .max_by_key(|&(v, d)| (d, core::cmp::Reverse(v)))
    else {
        *best = size;
        return;
    };
    if deg == 0 {
        *best = size;
        return;
    }
    if deg == 1 {
        // What is left is a perfect matching on the non-isolated vertices.
        let edges = bits(alive).filter(|&u| g.adj[u] & alive != 0).count() / 2;
        *best = (*best).min(size + edges);
        return;
    }
    vertex_cover(g, alive & !(1 << v), size + 1, best);
    let nbrs = g.adj[v] & alive;
    vertex_cover(g, alive & !nbrs & !(1 << v), size + deg, best);
}

pub(super) fn max_independent_set_size(g: &Dense) -> usize {
    let mut best = 0;
    independent_set(g, g.all(), 0, &mut best);
    best
}

fn independent_set(g: &Dense, cand: u128, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // A vertex of degree at most one lies in some maximum independent set.
    if let Some(v) = bits(cand).find(|&v| (g.adj[v] & cand).count_ones() <= 1) {
        independent_set(g, cand & !closed(g, v), size + 1, best);
        return;
    }
    let v = bits(cand)
        .max_by_key(|&v| (g.adj[v] & cand).count_ones())
        .expect("cand is nonempty");
    independent_set(g, cand & !closed(g, v), size + 1, best);
    independent_set(g, cand & !(1 << v), size, best);
}
