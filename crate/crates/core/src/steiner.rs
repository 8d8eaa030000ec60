use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::collections::VecDeque;

/// Hard cap on the number of terminals for the exact subset DP.
pub const MAX_STEINER_TERMINALS: usize = 8;

/// Exact minimum number of edges of a subtree of `g` containing every vertex
/// of `terminals`, by the classic dynamic program over terminal subsets:
/// `dp[mask][v]` is the cheapest tree spanning the terminals in `mask` plus
/// `v`, combined by subset merges at `v` and unit-weight BFS relaxations.
pub fn min_steiner_tree_size(g: &Graph, terminals: &VertexSet) -> Result<usize> {
    if terminals.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let terms = terminals.to_vec();
    if terms.len() > MAX_STEINER_TERMINALS {
        return Err(Error::TooLarge {
            what: format!("{} Steiner terminals", terms.len()),
            limit: MAX_STEINER_TERMINALS,
        });
    }
    if let Some(&v) = terms.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (n, p) = (g.n(), terms.len());
    if p == 1 {
        return Ok(0);
    }
    const INF: usize = usize::MAX / 4;
    let full = (1usize << p) - 1;
    let mut dp = vec![vec![INF; n]; full + 1];
    for (i, &t) in terms.iter().enumerate() {
        dp[1 << i][t] = 0;
    }
    for mask in 1..=full {
        // merge two sub-trees meeting at v
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            let other = mask ^ sub;
            if sub < other {
                let mut row = std::mem::take(&mut dp[mask]);
                for (v, slot) in row.iter_mut().enumerate() {
                    let cost = dp[sub][v].saturating_add(dp[other][v]);
                    if cost < *slot {
                        *slot = cost;
                    }
                }
                dp[mask] = row;
            }
            sub = (sub - 1) & mask;
        }
        // grow by unit-weight edges: BFS relaxation from all settled vertices
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut order: Vec<usize> = (0..n).filter(|&v| dp[mask][v] < INF).collect();
        order.sort_by_key(|&v| dp[mask][v]);
        // plain label-correcting pass; distances are small so this converges fast
        queue.extend(order);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dp[mask][v] + 1 < dp[mask][w] {
                    dp[mask][w] = dp[mask][v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok((0..n).map(|v| dp[full][v]).min().unwrap())
}
