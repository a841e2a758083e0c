use alloc::vec::Vec;

use super::{SimpleGraph, Vertex};

/// Index-based bitmask adjacency used by the exhaustive searches.
///
/// Vertex `i` is the `i`-th smallest label. At most 128 vertices.
pub(crate) struct Dense {
    labels: Vec<Vertex>,
    pub(crate) adj: Vec<u128>,
}

pub(crate) const MAX_DENSE_VERTICES: usize = 128;

impl Dense {
    pub(crate) fn new(g: &SimpleGraph) -> Self {
        let labels: Vec<Vertex> = g.vertices().collect();
        assert!(
            labels.len() <= MAX_DENSE_VERTICES,
            "exhaustive graph searches support at most {MAX_DENSE_VERTICES} vertices, got {}",
            labels.len()
        );
        let index = |v: Vertex| labels.binary_search(&v).expect("edge endpoint is a vertex");
        let mut adj = alloc::vec![0u128; labels.len()];
        for e in g.edges() {
            let (u, v) = e.endpoints();
            let (i, j) = (index(u), index(v));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Dense { labels, adj }
    }

    pub(crate) fn len(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn label(&self, i: usize) -> Vertex {
        self.labels[i]
    }

    pub(crate) fn all(&self) -> u128 {
        full_mask(self.len())
    }
}

pub(crate) fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the indices of the set bits, lowest first.
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
