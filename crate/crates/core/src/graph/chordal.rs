//! Maximum cardinality search followed by an explicit check that the
//! resulting order is a perfect elimination ordering.

use alloc::vec::Vec;

use super::dense::{bits, Dense};

/// Returns vertex indices in elimination order, or `None` when the graph
/// is not chordal.
pub(super) fn perfect_elimination_ordering(g: &Dense) -> Option<Vec<usize>> {
    let n = g.len();
    let mut weight = alloc::vec![0usize; n];
    let mut numbered: u128 = 0;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered & (1 << v) == 0)
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("an unnumbered vertex remains");
        numbered |= 1 << v;
        visit.push(v);
        for u in bits(g.adj[v] & !numbered) {
            weight[u] += 1;
        }
    }
    // Eliminating in reverse visit order: the neighbours of v visited before
    // v are eliminated after it and must form a clique.
    let mut before: u128 = 0;
    for &v in &visit {
        let earlier = g.adj[v] & before;
        for u in bits(earlier) {
            if earlier & !(1 << u) & !g.adj[u] != 0 {
                return None;
            }
        }
        before |= 1 << v;
    }
    visit.reverse();
    Some(visit)
}
