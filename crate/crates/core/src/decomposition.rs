use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// The four block classes used by the composite coloring bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockClass {
    /// A single edge.
    Bridge,
    /// A triangle.
    Triangle,
    /// A cycle of length >= 4, or any block of order 4..=6.
    CycleOrSmall,
    /// Not a cycle and of order >= 7.
    LargeNonCycle,
}

#[derive(Debug, Clone, Serialize)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<EdgeId>,
    pub class: BlockClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCounts {
    pub bridge: usize,
    pub triangle: usize,
    pub cycle_or_small: usize,
    pub large_non_cycle: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// Maximum number of components left by deleting one vertex.
    pub q_max: usize,
}

impl BlockDecomposition {
    pub fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts {
            bridge: 0,
            triangle: 0,
            cycle_or_small: 0,
            large_non_cycle: 0,
        };
        for b in &self.blocks {
            match b.class {
                BlockClass::Bridge => counts.bridge += 1,
                BlockClass::Triangle => counts.triangle += 1,
                BlockClass::CycleOrSmall => counts.cycle_or_small += 1,
                BlockClass::LargeNonCycle => counts.large_non_cycle += 1,
            }
        }
        counts
    }
}

fn classify(order: usize, m: usize) -> BlockClass {
    if m == 1 {
        BlockClass::Bridge
    } else if order == 3 {
        BlockClass::Triangle
    } else if m == order || order <= 6 {
        BlockClass::CycleOrSmall
    } else {
        BlockClass::LargeNonCycle
    }
}

/// Biconnected components by iterative depth-first lowpoint search.
/// Blocks partition the edge set; a vertex lying in two or more blocks is a
/// cut vertex. `q_max` is read off the block-vertex incidences.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter(
            "block decomposition needs n >= 2".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();

    // iterative DFS from vertex 0; frame = (vertex, index into incident list)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, 0));
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < g.incident_edges(v).len() {
            let e = g.incident_edges(v)[*idx];
            *idx += 1;
            if e == parent_edge[v] {
                continue;
            }
            let w = g.opposite(e, v);
            if disc[w] == usize::MAX {
                edge_stack.push(e);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                parent_edge[w] = e;
                stack.push((w, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    // edges down to and including the tree edge p-v form a block
                    let tree_edge = parent_edge[v];
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == tree_edge {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut blocks_out = Vec::with_capacity(raw_blocks.len());
    let mut containing = vec![0usize; n];
    for mut edges in raw_blocks {
        edges.sort_unstable();
        let mut vertices = VertexSet::new();
        for &e in &edges {
            let (u, w) = g.edge(e);
            vertices.insert(u);
            vertices.insert(w);
        }
        for v in vertices.iter() {
            containing[v] += 1;
        }
        let class = classify(vertices.len(), edges.len());
        blocks_out.push(Block {
            vertices,
            edges,
            class,
        });
    }
    blocks_out.sort_by_key(|b| b.edges[0]);
    let cut_vertices: VertexSet = (0..n).filter(|&v| containing[v] >= 2).collect();
    let q_max = containing.iter().copied().max().unwrap_or(0).max(1);
    Ok(BlockDecomposition {
        blocks: blocks_out,
        cut_vertices,
        q_max,
    })
}

/// Maximum over vertices `u` of the number of components of the graph with
/// `u` deleted, by direct removal enumeration.
pub fn q_max(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("q_max needs n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok((0..g.n()).map(|u| g.components_without(u)).max().unwrap())
}

/// Upper bound `n - |C| - 2|D| - 1` from the block classification, where C
/// counts cycle-or-small blocks and D counts large non-cycle blocks.
pub fn block_bound(g: &Graph) -> Result<usize> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter("block bound needs n >= 3".into()));
    }
    let decomposition = blocks(g)?;
    let counts = decomposition.class_counts();
    Ok(g.n() - counts.cycle_or_small - 2 * counts.large_non_cycle - 1)
}
