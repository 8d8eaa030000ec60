use crate::decomposition::{blocks, q_max};
use crate::domination::{
    augment_to_2dominating, greedy_connected_dominating, min_k_dominating_exact,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::exact::{rx3_exact, Rx3Budget, Rx3Result};
use crate::steiner::min_steiner_tree_size;
use crate::structure::is_p5c5_free;
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// Default cap on `n` for the exhaustive triple scan of the Steiner bound.
pub const DEFAULT_STEINER_LIMIT: usize = 14;

/// A lower bound on the 3-rainbow index from Steiner tree sizes. When the
/// triple scan was sampled rather than exhaustive the value is still a valid
/// lower bound, just not the best one this method can give.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SteinerBound {
    pub value: usize,
    pub exhaustive: bool,
}

/// Max over 3-vertex sets of the minimum Steiner tree size: a rainbow tree
/// through such a set has at least that many edges, all distinctly colored.
///
/// Exhaustive over all triples for `n <= limit`; above that a deterministic
/// sample of triples (every `ceil(total / C(limit, 3))`-th in lexicographic
/// order) is scanned instead.
pub fn lower_bound_steiner(g: &Graph, limit: usize) -> Result<SteinerBound> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(
            "Steiner lower bound needs n >= 3".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let choose3 = |x: usize| x * (x - 1) * (x - 2) / 6;
    let total = choose3(n);
    let exhaustive = n <= limit;
    let stride = if exhaustive {
        1
    } else {
        total.div_ceil(choose3(limit.max(3)))
    };
    let mut best = 0;
    let mut index = 0usize;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if index.is_multiple_of(stride) {
                    let s: VertexSet = [a, b, c].into_iter().collect();
                    best = best.max(min_steiner_tree_size(g, &s)?);
                }
                index += 1;
            }
        }
    }
    Ok(SteinerBound {
        value: best,
        exhaustive,
    })
}

/// Smallest k with `2k^2 >= t`: a lower bound on the 3-rainbow index of
/// K_{2,t}, since at most two right-side vertices may share a color code.
pub fn k2t_lower_bound(t: usize) -> Result<usize> {
    if t < 2 {
        return Err(Error::InvalidParameter(
            "K_{2,t} lower bound needs t >= 2".into(),
        ));
    }
    let mut k = 1;
    while 2 * k * k < t {
        k += 1;
    }
    Ok(k)
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: Option<i64>,
    pub applicable: bool,
    pub reason: String,
}

impl BoundEntry {
    fn applicable(name: &str, value: i64, reason: &str) -> Self {
        BoundEntry {
            name: name.into(),
            value: Some(value),
            applicable: true,
            reason: reason.into(),
        }
    }

    fn inapplicable(name: &str, reason: &str) -> Self {
        BoundEntry {
            name: name.into(),
            value: None,
            applicable: false,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactEntry {
    pub value: Option<u32>,
    /// "pinned" (lower bound met an upper bound), "proved" (search finished),
    /// or "unknown" (search refused or out of budget).
    pub status: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub bounds: Vec<BoundEntry>,
    pub steiner_lower: usize,
    pub steiner_mode: String,
    pub exact: ExactEntry,
}

/// Limits used when assembling a bounds report.
#[derive(Debug, Clone, Copy)]
pub struct ReportLimits {
    pub exact: Rx3Budget,
    pub steiner_vertices: usize,
    pub domination_vertices: usize,
}

impl Default for ReportLimits {
    fn default() -> Self {
        ReportLimits {
            exact: Rx3Budget::default(),
            steiner_vertices: DEFAULT_STEINER_LIMIT,
            domination_vertices: crate::domination::DEFAULT_EXACT_DOMINATION_LIMIT,
        }
    }
}

/// Evaluates every applicable upper bound, the Steiner lower bound and, when
/// the budget allows, the exact value. If the lower bound already meets the
/// best upper bound the exact value is pinned without a search.
pub fn bounds_report(g: &Graph, limits: &ReportLimits) -> Result<BoundsReport> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter("bounds report needs n >= 3".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let delta = g.min_degree();
    let decomposition = blocks(g)?;
    let counts = decomposition.class_counts();
    let two_connected = decomposition.cut_vertices.is_empty() && n >= 3;

    let mut entries = Vec::new();

    entries.push(if two_connected && n >= 4 {
        BoundEntry::applicable(
            "two_connected_order",
            n as i64 - 2,
            "2-connected graph of order >= 4",
        )
    } else {
        BoundEntry::inapplicable(
            "two_connected_order",
            "requires a 2-connected graph of order >= 4",
        )
    });

    entries.push(match connected_2_dominating_value(g, limits) {
        Some((value, how)) => BoundEntry::applicable("connected_2_dominating", value as i64, &how),
        None => BoundEntry::inapplicable("connected_2_dominating", "requires minimum degree >= 3"),
    });

    let p5c5 = delta >= 3 && is_p5c5_free(g);
    entries.push(if p5c5 {
        let num = 11 * n + 48; // 11n/16 + 3 as a rational over 16
        BoundEntry::applicable(
            "p5c5_free",
            (num / 16) as i64,
            &format!("(P5,C5)-free with minimum degree >= 3; exact bound {num}/16"),
        )
    } else {
        BoundEntry::inapplicable(
            "p5c5_free",
            "requires a (P5,C5)-free graph with minimum degree >= 3",
        )
    });

    entries.push(BoundEntry::applicable(
        "block_decomposition",
        (n - counts.cycle_or_small - 2 * counts.large_non_cycle - 1) as i64,
        &format!(
            "block classes: {} bridges, {} triangles, {} cycle-or-small, {} large",
            counts.bridge, counts.triangle, counts.cycle_or_small, counts.large_non_cycle
        ),
    ));

    entries.push(if delta >= 3 {
        let q = q_max(g)?;
        BoundEntry::applicable(
            "qmax_min_degree",
            (n as i64) - (q as i64) * (delta as i64 - 1) + 3,
            &format!("q_max = {q}, minimum degree {delta}"),
        )
    } else {
        BoundEntry::inapplicable("qmax_min_degree", "requires minimum degree >= 3")
    });

    let steiner = lower_bound_steiner(g, limits.steiner_vertices)?;
    let best_upper = entries.iter().filter_map(|e| e.value).min();

    let exact = if best_upper == Some(steiner.value as i64) {
        ExactEntry {
            value: Some(steiner.value as u32),
            status: "pinned".into(),
        }
    } else {
        match rx3_exact(g, &limits.exact)? {
            Rx3Result::Proved { value, .. } => ExactEntry {
                value: Some(value),
                status: "proved".into(),
            },
            Rx3Result::Unknown { .. } => ExactEntry {
                value: None,
                status: "unknown".into(),
            },
        }
    };

    Ok(BoundsReport {
        n,
        m: g.m(),
        delta,
        bounds: entries,
        steiner_lower: steiner.value,
        steiner_mode: if steiner.exhaustive {
            "exhaustive".into()
        } else {
            "sampled".into()
        },
        exact,
    })
}

/// Bound value from a connected 2-dominating set: exact minimum when the
/// order permits, otherwise greedy + augmentation. The interior is charged
/// its exact 3-rainbow index when small, else the spanning-tree count.
fn connected_2_dominating_value(g: &Graph, limits: &ReportLimits) -> Option<(usize, String)> {
    if g.min_degree() < 3 {
        return None;
    }
    let cert = if g.n() <= limits.domination_vertices {
        min_k_dominating_exact(g, 2, true, limits.domination_vertices).ok()?
    } else {
        let base = greedy_connected_dominating(g).ok()?;
        augment_to_2dominating(g, &base.set).ok()?
    };
    let (interior, _) = g.induced_subgraph(&cert.set);
    let interior_colors = if interior.n() < 3 {
        interior.n().saturating_sub(1) as u32
    } else if interior.m() <= limits.exact.max_edges {
        match rx3_exact(&interior, &limits.exact).ok()? {
            Rx3Result::Proved { value, .. } => value,
            Rx3Result::Unknown { .. } => (cert.size - 1) as u32,
        }
    } else {
        (cert.size - 1) as u32
    };
    Some((
        interior_colors as usize + 4,
        format!(
            "|D| = {} ({}), interior needs {} colors",
            cert.size, cert.method, interior_colors
        ),
    ))
}
