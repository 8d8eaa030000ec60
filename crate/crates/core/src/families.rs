use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        s: usize,
        t: usize,
    },
    ThreeSun,
    K5MinusE,
    /// A chain of blocks: `b` bridge edges from a distinguished endpoint,
    /// then `r` four-cycles glued in series at opposite vertices, ending in
    /// a 7-cycle with a chord. Order is `b + 3r + 7`.
    Figure1 {
        r: usize,
        b: usize,
    },
    /// Seeded random connected graph with minimum degree at least `delta`.
    RandomMinDegree {
        n: usize,
        delta: usize,
        seed: u64,
    },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return Err(Error::InvalidParameter("complete needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite { s, t } => {
            if s < 1 || t < 1 {
                return Err(Error::InvalidParameter(
                    "complete_bipartite needs s, t >= 1".into(),
                ));
            }
            Ok(complete_bipartite(s, t))
        }
        FamilySpec::ThreeSun => {
            // C_6 plus the three chords joining every other vertex.
            let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
            edges.extend([(1, 3), (1, 5), (3, 5)]);
            Graph::from_edges(6, &edges)
        }
        FamilySpec::K5MinusE => {
            let mut edges = Vec::new();
            for u in 0..5 {
                for v in u + 1..5 {
                    if (u, v) != (3, 4) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(5, &edges)
        }
        FamilySpec::Figure1 { r, b } => figure1(r, b),
        FamilySpec::RandomMinDegree { n, delta, seed } => random_min_degree(n, delta, seed),
    }
}

pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for w in s..s + t {
            edges.push((u, w));
        }
    }
    Graph::from_edges(s + t, &edges).expect("valid bipartite edges")
}

fn figure1(r: usize, b: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    // bridge path 0..=b
    for i in 0..b {
        edges.push((i, i + 1));
    }
    // r four-cycles in series; cycle j enters at `entry` and exits at base+3j+2
    let base = b + 1;
    let mut entry = b;
    for j in 0..r {
        let (p, q, exit) = (base + 3 * j, base + 3 * j + 1, base + 3 * j + 2);
        edges.extend([(entry, p), (entry, q), (p, exit), (q, exit)]);
        entry = exit;
    }
    // 7-cycle v1..v7 attached at v1 = entry, with chord v1-v4
    let [v1, v2, v3, v4, v5, v6, v7] = figure1_seven_cycle(r, b);
    debug_assert_eq!(v1, entry);
    edges.extend([
        (v1, v2),
        (v2, v3),
        (v3, v4),
        (v4, v5),
        (v5, v6),
        (v6, v7),
        (v7, v1),
        (v1, v4),
    ]);
    Graph::from_edges(b + 3 * r + 7, &edges)
}

fn figure1_seven_cycle(r: usize, b: usize) -> [usize; 7] {
    let v1 = b + 3 * r;
    [v1, v1 + 1, v1 + 2, v1 + 3, v1 + 4, v1 + 5, v1 + 6]
}

/// The distinguished terminals (u, v, w) of `figure1(r, b)`: the free end of
/// the bridge path and two vertices of the chorded 7-cycle chosen so the
/// minimum tree through all three costs `b + 2r + 4` edges.
pub fn figure1_terminals(r: usize, b: usize) -> [usize; 3] {
    let seven = figure1_seven_cycle(r, b);
    [0, seven[2], seven[5]]
}

fn random_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "random_min_degree needs n >= 1".into(),
        ));
    }
    if n > 1 && delta > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "min degree {delta} impossible on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // random spanning tree by random attachment
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let present: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    candidates.shuffle(&mut rng);
    for (u, v) in candidates {
        if degree.iter().min().copied().unwrap_or(0) >= delta {
            break;
        }
        if degree[u] < delta || degree[v] < delta {
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!(g.is_connected());
    debug_assert!(n == 1 || g.min_degree() >= delta);
    Ok(g)
}
