use crate::decomposition::blocks;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::coloring::EdgeColoring;
use crate::rainbow::exact::{rx3_exact, Rx3Budget, Rx3Result};
use crate::rainbow::verify::{is_k_rainbow, Verdict};

/// Colors each block with a fresh palette: bridges take one color and every
/// other block gets an exact optimal coloring, so the total never exceeds
/// `n - |C| - 2|D| - 1` from the block classification. Verified before
/// return. Fails if some block is too large for the exact search.
pub fn block_composite_coloring(g: &Graph, budget: &Rx3Budget) -> Result<EdgeColoring> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(
            "composite coloring needs n >= 3".into(),
        ));
    }
    let decomposition = blocks(g)?;
    let mut colors = vec![0u32; g.m()];
    let mut offset = 0u32;
    for block in &decomposition.blocks {
        if block.edges.len() == 1 {
            colors[block.edges[0]] = offset + 1;
            offset += 1;
            continue;
        }
        let (sub, back) = g.induced_subgraph(&block.vertices);
        debug_assert_eq!(sub.m(), block.edges.len());
        let sub_coloring = match rx3_exact(&sub, budget)? {
            Rx3Result::Proved { coloring, .. } => coloring,
            Rx3Result::Unknown { .. } => {
                return Err(Error::BlockTooLarge {
                    edges: sub.m(),
                    limit: budget.max_edges,
                })
            }
        };
        for (ie, &(iu, iv)) in sub.edges().iter().enumerate() {
            let e = g
                .edge_id(back[iu], back[iv])
                .expect("block edge exists in g");
            colors[e] = offset + sub_coloring.color(ie);
        }
        offset += sub_coloring.k();
    }
    let coloring = EdgeColoring::from_colors(colors)?;
    match is_k_rainbow(g, &coloring, 3)? {
        Verdict::Pass => Ok(coloring),
        Verdict::Fail { subset } => Err(Error::VerificationFailed(subset)),
    }
}
