//! Shared fixtures and independent oracles for the integration suites.
//! The oracles enumerate edge subsets directly and never call the search
//! code they are used to check.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rx3_core::graph::Graph;
use rx3_core::rainbow::{exists_rainbow_tree, is_k_rainbow, EdgeColoring};
use rx3_core::vertex_set::VertexSet;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

/// Seeded G(n, p) conditioned on connectivity; falls back to threading a
/// path through the sampled edges if rejection takes too long.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..500 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for u in 0..n {
        for v in u + 2..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_coloring(g: &Graph, k: u32, rng: &mut ChaCha8Rng) -> EdgeColoring {
    let colors: Vec<u32> = (0..g.m()).map(|_| rng.gen_range(1..=k)).collect();
    EdgeColoring::new(colors, k).unwrap()
}

fn subset_vertices(g: &Graph, mask: u32) -> VertexSet {
    let mut vs = VertexSet::new();
    for e in 0..g.m() {
        if mask >> e & 1 == 1 {
            let (u, v) = g.edge(e);
            vs.insert(u);
            vs.insert(v);
        }
    }
    vs
}

fn subset_connected(g: &Graph, mask: u32) -> bool {
    let vs = subset_vertices(g, mask);
    let Some(start) = vs.min() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for e in 0..g.m() {
            if mask >> e & 1 == 1 {
                let (a, b) = g.edge(e);
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen.contains(y) {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
        }
    }
    seen.len() == vs.len()
}

/// Minimum size of a connected edge subset whose vertices contain all
/// terminals, by scanning every subset. Usable for m <= ~20.
pub fn steiner_brute_force(g: &Graph, terminals: &[usize]) -> Option<usize> {
    assert!(g.m() <= 20, "oracle is exponential in m");
    if terminals.len() == 1 {
        return Some(0);
    }
    let mut best: Option<usize> = None;
    for mask in 1u32..1 << g.m() {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let vs = subset_vertices(g, mask);
        if terminals.iter().all(|&t| vs.contains(t)) && subset_connected(g, mask) {
            best = Some(size);
        }
    }
    best
}

/// Whether some edge subset is a rainbow tree containing all terminals, by
/// scanning every subset. Usable for m <= ~20.
pub fn rainbow_tree_brute_force(g: &Graph, c: &EdgeColoring, terminals: &[usize]) -> bool {
    assert!(g.m() <= 20, "oracle is exponential in m");
    if terminals.len() == 1 {
        return true;
    }
    'subsets: for mask in 1u32..1 << g.m() {
        let vs = subset_vertices(g, mask);
        if !terminals.iter().all(|&t| vs.contains(t)) {
            continue;
        }
        // a tree has |V| - 1 edges and is connected
        if mask.count_ones() as usize + 1 != vs.len() || !subset_connected(g, mask) {
            continue;
        }
        let mut used = std::collections::HashSet::new();
        for e in 0..g.m() {
            if mask >> e & 1 == 1 && !used.insert(c.color(e)) {
                continue 'subsets;
            }
        }
        return true;
    }
    false
}

/// Minimum (connected) k-dominating set size by scanning all vertex subsets.
pub fn min_dominating_brute_force(g: &Graph, k: usize, connected: bool) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential in n");
    let mut best = n;
    'masks: for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        for v in 0..n {
            if mask >> v & 1 == 0 {
                let hits = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| mask >> w & 1 == 1)
                    .count();
                if hits < k {
                    continue 'masks;
                }
            }
        }
        if connected {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let mut seen = vec![false; n];
            seen[members[0]] = true;
            let mut stack = vec![members[0]];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if mask >> w & 1 == 1 && !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != size {
                continue;
            }
        }
        best = size;
    }
    best
}

/// Relabeling colors by any bijection must not change the 3-rainbow verdict.
pub fn assert_relabel_invariance(g: &Graph, c: &EdgeColoring) {
    let k = c.k().max(1);
    let rotated: Vec<u32> = c.colors().iter().map(|&x| x % k + 1).collect();
    let rotated = EdgeColoring::new(rotated, k).unwrap();
    let before = is_k_rainbow(g, c, 3).unwrap().is_pass();
    let after = is_k_rainbow(g, &rotated, 3).unwrap().is_pass();
    assert_eq!(before, after, "color relabeling changed the verdict");
}

/// Giving one edge a brand-new color never breaks a 3-rainbow coloring.
pub fn assert_fresh_color_monotonic(g: &Graph, c: &EdgeColoring) {
    if g.m() == 0 {
        return;
    }
    assert!(
        is_k_rainbow(g, c, 3).unwrap().is_pass(),
        "helper expects a valid coloring"
    );
    let mut colors = c.colors().to_vec();
    colors[0] = c.k() + 1;
    let fresh = EdgeColoring::from_colors(colors).unwrap();
    assert!(
        is_k_rainbow(g, &fresh, 3).unwrap().is_pass(),
        "fresh color broke the coloring"
    );
}

/// A 3-rainbow coloring admits a rainbow path between every vertex pair.
pub fn assert_subtree_closure(g: &Graph, c: &EdgeColoring) {
    assert!(
        is_k_rainbow(g, c, 3).unwrap().is_pass(),
        "helper expects a valid coloring"
    );
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let pair: VertexSet = [u, v].into_iter().collect();
            assert!(
                exists_rainbow_tree(g, c, &pair).unwrap(),
                "pair {{{u}, {v}}} has no rainbow tree"
            );
        }
    }
}

pub fn check_coloring_properties(g: &Graph, c: &EdgeColoring) {
    assert_relabel_invariance(g, c);
    assert_fresh_color_monotonic(g, c);
    assert_subtree_closure(g, c);
}
