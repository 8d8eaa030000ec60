use crate::domination::min_k_dominating_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::bounds::ReportLimits;
use crate::rainbow::coloring::EdgeColoring;
use crate::rainbow::extend::dominating_extension_pipeline;
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// Default cap on `n` for the all-induced-subgraphs domination check.
pub const DEFAULT_PERFECT_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedPattern {
    P5,
    C5,
}

/// Finds a 5-vertex set inducing the pattern, scanning 5-subsets in
/// lexicographic order so the first witness is deterministic. A subset
/// induces a P5 iff it spans 4 edges forming a connected graph with maximum
/// degree 2, and a C5 iff it spans 5 edges all of degree 2.
pub fn find_induced(g: &Graph, pattern: InducedPattern) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let mut subset = [0usize, 1, 2, 3, 4];
    loop {
        if induces(g, &subset, pattern) {
            return Some(subset.to_vec());
        }
        if !advance(&mut subset, n) {
            return None;
        }
    }
}

fn induces(g: &Graph, vs: &[usize; 5], pattern: InducedPattern) -> bool {
    let mut adj = [[false; 5]; 5];
    let mut degree = [0usize; 5];
    let mut m = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            if g.has_edge(vs[i], vs[j]) {
                adj[i][j] = true;
                adj[j][i] = true;
                degree[i] += 1;
                degree[j] += 1;
                m += 1;
            }
        }
    }
    let shape = match pattern {
        // connected + 4 edges + degrees 1,1,2,2,2: exactly an induced path
        // (without connectivity a triangle plus an edge sneaks through)
        InducedPattern::P5 => {
            m == 4
                && degree.iter().all(|&d| d <= 2)
                && degree.iter().filter(|&&d| d == 1).count() == 2
        }
        // 5 edges all of degree 2 on 5 vertices force a single 5-cycle
        InducedPattern::C5 => m == 5 && degree.iter().all(|&d| d == 2),
    };
    if !shape {
        return false;
    }
    let mut seen = [false; 5];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..5 {
            if adj[i][j] && !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == 5
}

fn advance(subset: &mut [usize; 5], n: usize) -> bool {
    let size = subset.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if subset[i] < n - size + i {
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn is_p5c5_free(g: &Graph) -> bool {
    find_induced(g, InducedPattern::P5).is_none() && find_induced(g, InducedPattern::C5).is_none()
}

/// True iff the domination number equals the connected domination number on
/// every connected induced subgraph. Exponential in `n`, hence the limit.
pub fn is_perfect_connected_dominant(g: &Graph, limit: usize) -> Result<bool> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge {
            what: format!("perfect-connected-dominant check on n={n}"),
            limit,
        });
    }
    for mask in 1u64..(1 << n) {
        let vs: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let (sub, _) = g.induced_subgraph(&vs);
        if !sub.is_connected() {
            continue;
        }
        let gamma = min_k_dominating_exact(&sub, 1, false, limit)?.size;
        let gamma_c = min_k_dominating_exact(&sub, 1, true, limit)?.size;
        if gamma != gamma_c {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub has_induced_p5: bool,
    pub p5_witness: Option<Vec<usize>>,
    pub has_induced_c5: bool,
    pub c5_witness: Option<Vec<usize>>,
    pub p5c5_free: bool,
    /// `None` when the graph is too large for the exponential check.
    pub perfect_connected_dominant: Option<bool>,
}

pub fn structure_report(g: &Graph, perfect_limit: usize) -> StructureReport {
    let p5 = find_induced(g, InducedPattern::P5);
    let c5 = find_induced(g, InducedPattern::C5);
    let perfect = is_perfect_connected_dominant(g, perfect_limit).ok();
    StructureReport {
        has_induced_p5: p5.is_some(),
        has_induced_c5: c5.is_some(),
        p5c5_free: p5.is_none() && c5.is_none(),
        p5_witness: p5,
        c5_witness: c5,
        perfect_connected_dominant: perfect,
    }
}

/// Outcome of the constructive pipeline on a (P5,C5)-free graph with
/// minimum degree 3: the `11n/16 + 3` bound as an exact rational and its
/// floor, next to the colors the pipeline actually used.
#[derive(Debug, Clone, Serialize)]
pub struct PipelineBound {
    pub bound_sixteenths: usize,
    pub bound_floor: usize,
    pub colors_used: u32,
    pub dominating_set_size: usize,
    #[serde(skip)]
    pub coloring: EdgeColoring,
}

/// Checks applicability, evaluates `11n/16 + 3`, and runs the constructive
/// companion: connected dominating set, augmentation, then the
/// four-extra-color extension over a spanning-tree base.
pub fn p5c5_pipeline_bound(g: &Graph, limits: &ReportLimits) -> Result<PipelineBound> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.min_degree() < 3 {
        return Err(Error::MinDegreeTooSmall {
            required: 3,
            found: g.min_degree(),
        });
    }
    if !is_p5c5_free(g) {
        return Err(Error::InvalidParameter(
            "graph has an induced P5 or C5".into(),
        ));
    }
    let (cert, coloring) = dominating_extension_pipeline(g, limits)?;
    let sixteenths = 11 * g.n() + 48;
    Ok(PipelineBound {
        bound_sixteenths: sixteenths,
        bound_floor: sixteenths / 16,
        colors_used: coloring.k(),
        dominating_set_size: cert.size,
        coloring,
    })
}
