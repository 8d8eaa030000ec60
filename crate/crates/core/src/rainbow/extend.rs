use crate::domination::{
    augment_to_2dominating, greedy_connected_dominating, is_k_dominating, min_k_dominating_exact,
    DominationCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{forest_bipartition, EdgeId, Graph};
use crate::rainbow::bounds::ReportLimits;
use crate::rainbow::coloring::EdgeColoring;
use crate::rainbow::exact::{rx3_exact, Rx3Budget, Rx3Result};
use crate::rainbow::verify::{is_k_rainbow, Verdict};
use crate::vertex_set::VertexSet;

/// How the exterior of a connected 2-dominating set is organized before
/// coloring: isolated exterior vertices `z`, the forest bipartition `x`/`y`
/// of the rest, and each exterior vertex's edges into the set (its legs).
#[derive(Debug, Clone)]
pub struct ExtensionPlan {
    pub d: VertexSet,
    pub z: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
    /// Indexed by vertex id; empty for interior vertices.
    pub legs: Vec<Vec<EdgeId>>,
    pub forest_edges: Vec<EdgeId>,
}

impl ExtensionPlan {
    /// Splits the exterior of `d`. Requires minimum degree 3 and `d` to be a
    /// connected 2-dominating set, which together guarantee two legs per
    /// forest vertex and three per isolated vertex.
    pub fn build(g: &Graph, d: &VertexSet) -> Result<ExtensionPlan> {
        if g.min_degree() < 3 {
            return Err(Error::MinDegreeTooSmall {
                required: 3,
                found: g.min_degree(),
            });
        }
        if !is_k_dominating(g, d, 2, true) {
            return Err(Error::NotConnected2Dominating);
        }
        let exterior: VertexSet = (0..g.n()).filter(|&v| !d.contains(v)).collect();
        let z: VertexSet = exterior
            .iter()
            .filter(|&v| g.neighbors(v).iter().all(|&w| !exterior.contains(w)))
            .collect();
        let w = exterior.difference(&z);
        let (x, y, forest_edges) = forest_bipartition(g, &w);
        let mut legs = vec![Vec::new(); g.n()];
        for v in exterior.iter() {
            legs[v] = g
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&e| d.contains(g.opposite(e, v)))
                .collect();
            let required = if z.contains(v) { 3 } else { 2 };
            if legs[v].len() < required {
                return Err(Error::AugmentationStuck {
                    vertex: v,
                    msg: format!(
                        "exterior vertex has {} legs, needs {required}",
                        legs[v].len()
                    ),
                });
            }
        }
        Ok(ExtensionPlan {
            d: d.clone(),
            z,
            x,
            y,
            legs,
            forest_edges,
        })
    }
}

/// Extends a 3-rainbow coloring of the subgraph induced by a connected
/// 2-dominating set to the whole graph with at most four extra colors:
/// with `k` the interior palette size, each X vertex gets one `k+1` leg and
/// `k+2` on the rest, each Y vertex one `k+1` leg and `k+3` on the rest,
/// each isolated exterior vertex legs `k+1`, `k+3` and then `k+4`, and every
/// exterior-exterior edge gets `k+4`. The result is verified before it is
/// returned.
pub fn extend_via_2dominating(
    g: &Graph,
    cert: &DominationCertificate,
    base: &EdgeColoring,
) -> Result<EdgeColoring> {
    let plan = ExtensionPlan::build(g, &cert.set)?;
    let (interior, back) = g.induced_subgraph(&plan.d);
    if base.len() != interior.m() {
        return Err(Error::BaseColoringMismatch {
            expected: interior.m(),
            found: base.len(),
        });
    }
    let k = base.k();
    let mut colors: Vec<Option<u32>> = vec![None; g.m()];
    for (ie, &(iu, iv)) in interior.edges().iter().enumerate() {
        let e = g
            .edge_id(back[iu], back[iv])
            .expect("interior edge exists in g");
        colors[e] = Some(base.color(ie));
    }
    for v in plan.x.iter() {
        for (i, &e) in plan.legs[v].iter().enumerate() {
            colors[e] = Some(if i == 0 { k + 1 } else { k + 2 });
        }
    }
    for v in plan.y.iter() {
        for (i, &e) in plan.legs[v].iter().enumerate() {
            colors[e] = Some(if i == 0 { k + 1 } else { k + 3 });
        }
    }
    for v in plan.z.iter() {
        for (i, &e) in plan.legs[v].iter().enumerate() {
            colors[e] = Some(match i {
                0 => k + 1,
                1 => k + 3,
                _ => k + 4,
            });
        }
    }
    for slot in &mut colors {
        if slot.is_none() {
            *slot = Some(k + 4); // exterior-exterior edge
        }
    }
    let coloring = EdgeColoring::from_colors(colors.into_iter().map(Option::unwrap).collect())?;
    match is_k_rainbow(g, &coloring, 3)? {
        Verdict::Pass => Ok(coloring),
        Verdict::Fail { subset } => Err(Error::VerificationFailed(subset)),
    }
}

/// Spanning-tree coloring: distinct colors on a BFS tree from vertex 0,
/// color 1 on every remaining edge. Always 3-rainbow.
pub fn spanning_tree_coloring(g: &Graph) -> EdgeColoring {
    let all = VertexSet::full(g.n());
    let (_, _, tree) = forest_bipartition(g, &all);
    let mut colors = vec![1u32; g.m()];
    let mut tree_sorted = tree;
    tree_sorted.sort_unstable();
    for (i, e) in tree_sorted.into_iter().enumerate() {
        colors[e] = i as u32 + 1;
    }
    EdgeColoring::from_colors(colors).expect("colors are 1-based")
}

/// 3-rainbow coloring for an induced interior: the exact optimum when the
/// instance is small, otherwise the spanning-tree coloring. Graphs on fewer
/// than three vertices need only their spanning tree colored distinctly.
pub fn base_coloring(interior: &Graph, budget: &Rx3Budget) -> Result<EdgeColoring> {
    if interior.n() < 3 || interior.m() > budget.max_edges {
        return Ok(spanning_tree_coloring(interior));
    }
    match rx3_exact(interior, budget)? {
        Rx3Result::Proved { coloring, .. } => Ok(coloring),
        Rx3Result::Unknown { .. } => Ok(spanning_tree_coloring(interior)),
    }
}

/// The full constructive pipeline: a connected dominating set (exact at
/// small orders, greedy above), augmented to a connected 2-dominating set,
/// then the four-extra-color extension over an interior base coloring.
pub fn dominating_extension_pipeline(
    g: &Graph,
    limits: &ReportLimits,
) -> Result<(DominationCertificate, EdgeColoring)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.min_degree() < 3 {
        return Err(Error::MinDegreeTooSmall {
            required: 3,
            found: g.min_degree(),
        });
    }
    let seed = if g.n() <= limits.domination_vertices {
        min_k_dominating_exact(g, 1, true, limits.domination_vertices)?
    } else {
        greedy_connected_dominating(g)?
    };
    let cert = augment_to_2dominating(g, &seed.set)?;
    let (interior, _) = g.induced_subgraph(&cert.set);
    let base = spanning_tree_coloring(&interior);
    let coloring = extend_via_2dominating(g, &cert, &base)?;
    Ok((cert, coloring))
}
