use crate::error::{Error, Result};
use crate::graph::{forest_bipartition, Graph};
use crate::vertex_set::VertexSet;
use serde::Serialize;
use std::collections::VecDeque;

/// Default cap on `n` for the exact minimum-set search.
pub const DEFAULT_EXACT_DOMINATION_LIMIT: usize = 16;

/// A k-dominating set together with the claims made about it.
#[derive(Debug, Clone, Serialize)]
pub struct DominationCertificate {
    pub set: VertexSet,
    pub k: usize,
    pub connected: bool,
    pub size: usize,
    pub method: String,
}

impl DominationCertificate {
    fn new(set: VertexSet, k: usize, connected: bool, method: &str) -> Self {
        let size = set.len();
        DominationCertificate {
            set,
            k,
            connected,
            size,
            method: method.to_string(),
        }
    }

    /// Re-checks the claimed properties against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        is_k_dominating(g, &self.set, self.k, self.connected)
    }
}

/// True iff every vertex outside `d` has at least `k` neighbors in `d`,
/// and (when `require_connected`) `d` induces a connected subgraph.
pub fn is_k_dominating(g: &Graph, d: &VertexSet, k: usize, require_connected: bool) -> bool {
    for v in 0..g.n() {
        if !d.contains(v) {
            let hits = g.neighbors(v).iter().filter(|&&w| d.contains(w)).count();
            if hits < k {
                return false;
            }
        }
    }
    if require_connected {
        return induces_connected(g, d);
    }
    true
}

fn induces_connected(g: &Graph, d: &VertexSet) -> bool {
    let Some(start) = d.min() else { return false };
    let mut seen = VertexSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if d.contains(w) && !seen.contains(w) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    seen.len() == d.len()
}

/// Exact minimum (connected) k-dominating set by enumerating vertex subsets
/// in increasing cardinality. Within one cardinality, combinations are
/// visited in lexicographic order, so the first hit is the lexicographically
/// smallest minimum set.
pub fn min_k_dominating_exact(
    g: &Graph,
    k: usize,
    require_connected: bool,
    limit: usize,
) -> Result<DominationCertificate> {
    let n = g.n();
    if n > limit || n > 64 {
        return Err(Error::TooLarge {
            what: format!("exact domination on n={n}"),
            limit: limit.min(64),
        });
    }
    if k < 1 {
        return Err(Error::InvalidParameter(
            "domination order k must be >= 1".into(),
        ));
    }
    if require_connected && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj_masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let feasible = |mask: u64| -> bool {
        for (v, &am) in adj_masks.iter().enumerate() {
            if mask >> v & 1 == 0 && (am & mask).count_ones() < k as u32 {
                return false;
            }
        }
        !require_connected || mask_connected(&adj_masks, mask)
    };
    for size in 1..=n {
        if let Some(mask) = first_combination(n, size, &feasible) {
            let set: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let method = if require_connected {
                "exact_connected"
            } else {
                "exact"
            };
            return Ok(DominationCertificate::new(
                set,
                k,
                require_connected,
                method,
            ));
        }
    }
    unreachable!("the full vertex set always k-dominates a connected graph")
}

fn mask_connected(adj_masks: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj_masks[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// First subset of `{0..n}` of the given size, in lexicographic order of the
/// sorted member lists, accepted by `pred`.
fn first_combination(n: usize, size: usize, pred: &impl Fn(u64) -> bool) -> Option<u64> {
    fn rec(
        n: usize,
        size: usize,
        start: usize,
        mask: u64,
        pred: &impl Fn(u64) -> bool,
    ) -> Option<u64> {
        if size == 0 {
            return pred(mask).then_some(mask);
        }
        for v in start..=n - size {
            if let Some(hit) = rec(n, size - 1, v + 1, mask | 1 << v, pred) {
                return Some(hit);
            }
        }
        None
    }
    if size > n {
        return None;
    }
    rec(n, size, 0, 0, pred)
}

/// Greedy connected dominating set: start from a maximum-degree vertex and
/// repeatedly add the frontier vertex covering the most uncovered vertices,
/// breaking ties toward uncovered territory and then by vertex id.
pub fn greedy_connected_dominating(g: &Graph) -> Result<DominationCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let start = (0..n).max_by_key(|&v| (g.degree(v), n - v)).unwrap();
    let mut d = VertexSet::singleton(start);
    let mut covered = VertexSet::singleton(start);
    for &w in g.neighbors(start) {
        covered.insert(w);
    }
    while covered.len() < n {
        let dist = bfs_distance_to_uncovered(g, &covered);
        // frontier = covered neighbors of d; prefer high gain, then proximity
        // to uncovered territory (guarantees progress when all gains are 0)
        let mut best: Option<(usize, usize)> = None;
        for v in 0..n {
            if d.contains(v) || !g.neighbors(v).iter().any(|&w| d.contains(w)) {
                continue;
            }
            let gain = g
                .neighbors(v)
                .iter()
                .filter(|&&w| !covered.contains(w))
                .count();
            let better = match best {
                None => true,
                Some((bv, bg)) => {
                    gain > bg
                        || (gain == bg && dist[v] < dist[bv])
                        || (gain == bg && dist[v] == dist[bv] && v < bv)
                }
            };
            if better {
                best = Some((v, gain));
            }
        }
        let (v, _) = best.expect("connected graph always has a frontier");
        d.insert(v);
        covered.insert(v);
        for &w in g.neighbors(v) {
            covered.insert(w);
        }
    }
    Ok(DominationCertificate::new(d, 1, true, "greedy"))
}

fn bfs_distance_to_uncovered(g: &Graph, covered: &VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX / 2; g.n()];
    let mut queue = VecDeque::new();
    for (v, d) in dist.iter_mut().enumerate() {
        if !covered.contains(v) {
            *d = 0;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[v] + 1 < dist[w] {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Grows a connected dominating set `d` into a connected 2-dominating set.
///
/// The exterior splits into singletons (which already have two neighbors in
/// `d` when the minimum degree is at least 2) and non-singleton components,
/// whose spanning forest is bipartitioned into sides X and Y with |X| <= |Y|.
/// While some exterior component vertex has exactly one neighbor in the
/// growing set: a deficient Y vertex pulls its smallest X neighbor in, any
/// other deficient vertex joins itself. The result has size at most
/// `|d| + floor((n - |d|) / 2)`.
pub fn augment_to_2dominating(g: &Graph, d: &VertexSet) -> Result<DominationCertificate> {
    if g.min_degree() < 2 {
        return Err(Error::MinDegreeTooSmall {
            required: 2,
            found: g.min_degree(),
        });
    }
    if !is_k_dominating(g, d, 1, true) {
        return Err(Error::NotConnectedDominating);
    }
    let n = g.n();
    let exterior: VertexSet = (0..n).filter(|&v| !d.contains(v)).collect();
    let singletons: VertexSet = exterior
        .iter()
        .filter(|&v| g.neighbors(v).iter().all(|&w| !exterior.contains(w)))
        .collect();
    for v in singletons.iter() {
        let hits = g.neighbors(v).iter().filter(|&&w| d.contains(w)).count();
        if hits < 2 {
            return Err(Error::AugmentationStuck {
                vertex: v,
                msg: "isolated exterior vertex with fewer than two interior neighbors".into(),
            });
        }
    }
    let in_components = exterior.difference(&singletons);
    let (a, b, _) = forest_bipartition(g, &in_components);
    let (x, y) = if a.len() <= b.len() { (a, b) } else { (b, a) };

    let mut dd = d.clone();
    loop {
        let deficient = in_components.iter().find(|&v| {
            !dd.contains(v) && g.neighbors(v).iter().filter(|&&w| dd.contains(w)).count() == 1
        });
        let Some(v) = deficient else { break };
        if y.contains(v) {
            let u = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| x.contains(u) && !dd.contains(u))
                .ok_or(Error::AugmentationStuck {
                    vertex: v,
                    msg: "deficient Y vertex has no available X neighbor".into(),
                })?;
            dd.insert(u);
        } else {
            dd.insert(v);
        }
    }
    debug_assert!(is_k_dominating(g, &dd, 2, true));
    debug_assert!(dd.len() <= d.len() + (n - d.len()) / 2);
    Ok(DominationCertificate::new(dd, 2, true, "augmented"))
}

/// `floor(3n/8)` upper bound on the domination number; `None` unless the
/// minimum degree is at least 3.
pub fn reed_bound(g: &Graph) -> Option<usize> {
    (g.min_degree() >= 3).then(|| 3 * g.n() / 8)
}

/// `n - q_max * (delta - k + 1)` upper bound on the connected k-domination
/// number; `None` unless `delta >= 2` and `1 <= k <= delta`.
pub fn qmax_domination_bound(g: &Graph, k: usize) -> Option<usize> {
    let delta = g.min_degree();
    if delta < 2 || k < 1 || k > delta {
        return None;
    }
    let q = crate::decomposition::q_max(g).ok()?;
    Some(g.n() - q * (delta - k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, generate, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::Cycle { n }).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate(&FamilySpec::Complete { n }).unwrap()
    }

    #[test]
    fn k_domination_checks() {
        let k4 = complete(4);
        assert!(is_k_dominating(
            &k4,
            &[0, 1].into_iter().collect(),
            2,
            false
        ));
        let c5 = cycle(5);
        assert!(!is_k_dominating(&c5, &VertexSet::singleton(0), 1, false));
        // K_{3,3}: both u_1,u_2 and w_1,w_2 form a connected 2-dominating set
        let k33 = complete_bipartite(3, 3);
        assert!(is_k_dominating(
            &k33,
            &[0, 1, 3, 4].into_iter().collect(),
            2,
            true
        ));
    }

    #[test]
    fn exact_minimums() {
        let limit = DEFAULT_EXACT_DOMINATION_LIMIT;
        assert_eq!(
            min_k_dominating_exact(&cycle(5), 1, false, limit)
                .unwrap()
                .size,
            2
        );
        let p5 = path(5);
        assert_eq!(
            min_k_dominating_exact(&p5, 1, false, limit).unwrap().size,
            2
        );
        assert_eq!(min_k_dominating_exact(&p5, 1, true, limit).unwrap().size, 3);
        assert_eq!(
            min_k_dominating_exact(&complete(7), 1, false, limit)
                .unwrap()
                .size,
            1
        );
        assert!(min_k_dominating_exact(&cycle(20), 1, false, limit).is_err());
    }

    #[test]
    fn exact_tie_break_is_lexicographic() {
        // C_4: all single vertices fail, and {0,1} is the lexicographically
        // first dominating pair.
        let cert = min_k_dominating_exact(&cycle(4), 1, false, 16).unwrap();
        assert_eq!(cert.set.to_vec(), vec![0, 1]);
        assert!(cert.verify(&cycle(4)));
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_connected_dominating(&complete(6)).unwrap().size, 1);
        let p5 = greedy_connected_dominating(&path(5)).unwrap();
        assert!(p5.size <= 3);
        assert!(p5.verify(&path(5)));
        let c6 = greedy_connected_dominating(&cycle(6)).unwrap();
        assert!(c6.size <= 4);
        assert!(c6.verify(&cycle(6)));
    }

    #[test]
    fn augment_returns_full_set_unchanged() {
        let g = cycle(6);
        let all = VertexSet::full(6);
        let cert = augment_to_2dominating(&g, &all).unwrap();
        assert_eq!(cert.set, all);
    }

    #[test]
    fn augment_c6_from_four_path() {
        let g = cycle(6);
        let d: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let cert = augment_to_2dominating(&g, &d).unwrap();
        assert!(cert.size <= 5);
        assert!(is_k_dominating(&g, &cert.set, 2, true));
        assert!(d.is_subset_of(&cert.set));
    }

    #[test]
    fn augment_k33_from_edge() {
        let g = complete_bipartite(3, 3);
        let d: VertexSet = [0, 3].into_iter().collect();
        let cert = augment_to_2dominating(&g, &d).unwrap();
        assert!(cert.size <= 4);
        assert!(is_k_dominating(&g, &cert.set, 2, true));
    }

    #[test]
    fn augment_rejects_bad_inputs() {
        let g = cycle(6);
        assert!(matches!(
            augment_to_2dominating(&g, &VertexSet::singleton(0)),
            Err(Error::NotConnectedDominating)
        ));
        let p3 = path(3);
        assert!(matches!(
            augment_to_2dominating(&p3, &VertexSet::singleton(1)),
            Err(Error::MinDegreeTooSmall { .. })
        ));
    }

    #[test]
    fn bound_formulas() {
        let g = generate(&FamilySpec::RandomMinDegree {
            n: 8,
            delta: 3,
            seed: 1,
        })
        .unwrap();
        assert_eq!(reed_bound(&g), Some(3));
        assert_eq!(reed_bound(&cycle(8)), None);

        let k4 = complete(4);
        assert_eq!(qmax_domination_bound(&k4, 2), Some(2));
        let exact = min_k_dominating_exact(&k4, 2, true, 16).unwrap();
        assert_eq!(exact.size, 2);
        // 2-connected graph with k = delta gives n - 1
        assert_eq!(qmax_domination_bound(&cycle(5), 2), Some(4));
    }

    #[test]
    fn certificate_serializes() {
        let cert = min_k_dominating_exact(&cycle(5), 1, false, 16).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"set\":[0,2]") || json.contains("\"set\":[0,1]"));
        assert!(json.contains("\"method\":\"exact\""));
    }
}
