//! Backtracking isomorphism test for small graphs.

use alloc::vec::Vec;

use super::dense::Dense;

pub(super) fn isomorphic(a: &Dense, b: &Dense) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let deg = |g: &Dense, v: usize| g.adj[v].count_ones();
    let mut da: Vec<u32> = (0..n).map(|v| deg(a, v)).collect();
    let mut db: Vec<u32> = (0..n).map(|v| deg(b, v)).collect();
    let order = {
        let mut o: Vec<usize> = (0..n).collect();
        // High degree first prunes fastest.
        o.sort_by_key(|&v| core::cmp::Reverse(da[v]));
        o
    };
    let degrees_a = {
        da.sort_unstable();
        da
    };
    db.sort_unstable();
    if degrees_a != db {
        return false;
    }
    let mut image = alloc::vec![usize::MAX; n];
    let mut used: u128 = 0;
    extend(a, b, &order, 0, &mut image, &mut used)
}

fn extend(
    a: &Dense,
    b: &Dense,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u128,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let want = a.adj[v].count_ones();
    for w in 0..b.len() {
        if *used & (1 << w) != 0 || b.adj[w].count_ones() != want {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let adj_a = a.adj[v] & (1 << u) != 0;
            let adj_b = b.adj[w] & (1 << image[u]) != 0;
            adj_a == adj_b
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend(a, b, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}
