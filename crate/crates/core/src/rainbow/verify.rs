use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::rainbow::coloring::EdgeColoring;
use crate::vertex_set::VertexSet;
use std::collections::{HashMap, VecDeque};

/// Verifier limits: vertex masks live in a u64, color masks in a u128.
const MAX_VERIFY_VERTICES: usize = 64;
const MAX_VERIFY_COLORS: usize = 128;

/// Outcome of a k-rainbow check; `Fail` carries the lexicographically first
/// failing vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { subset: Vec<usize> },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Precomputed search context reused across terminal sets on one coloring.
pub(crate) struct VerifyCtx<'a> {
    g: &'a Graph,
    color_bit: Vec<u128>,
    total_colors: u32,
    seen: HashMap<(u64, u128), (u64, u128, EdgeId)>,
}

impl<'a> VerifyCtx<'a> {
    pub(crate) fn new(g: &'a Graph, c: &EdgeColoring) -> Result<Self> {
        if g.n() > MAX_VERIFY_VERTICES {
            return Err(Error::TooLarge {
                what: format!("verifier on n={}", g.n()),
                limit: MAX_VERIFY_VERTICES,
            });
        }
        if c.k() as usize > MAX_VERIFY_COLORS {
            return Err(Error::TooLarge {
                what: format!("verifier with k={}", c.k()),
                limit: MAX_VERIFY_COLORS,
            });
        }
        if c.len() != g.m() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} entries for a graph with {} edges",
                c.len(),
                g.m()
            )));
        }
        let color_bit = c.colors().iter().map(|&c| 1u128 << (c - 1)).collect();
        Ok(VerifyCtx {
            g,
            color_bit,
            total_colors: c.k(),
            seen: HashMap::new(),
        })
    }

    /// Searches for a rainbow tree containing all terminals by growing a
    /// connected vertex set from the first terminal, one uncolored-so-far
    /// edge at a time. States are (vertices reached, colors used); any tree
    /// can be built this way, so the search is complete. Returns the final
    /// state for witness reconstruction.
    fn search(&mut self, terminal_mask: u64) -> Option<(u64, u128)> {
        let start = terminal_mask.trailing_zeros() as usize;
        let init = (1u64 << start, 0u128);
        if init.0 & terminal_mask == terminal_mask {
            return Some(init);
        }
        self.seen.clear();
        self.seen.insert(init, (0, 0, usize::MAX));
        let mut queue = VecDeque::from([init]);
        while let Some((vmask, cmask)) = queue.pop_front() {
            for v in BitIter64(vmask) {
                for &e in self.g.incident_edges(v) {
                    let w = self.g.opposite(e, v);
                    if vmask >> w & 1 == 1 {
                        continue;
                    }
                    let cb = self.color_bit[e];
                    if cmask & cb != 0 {
                        continue;
                    }
                    let next = (vmask | 1 << w, cmask | cb);
                    if self.seen.contains_key(&next) {
                        continue;
                    }
                    if next.0 & terminal_mask == terminal_mask {
                        self.seen.insert(next, (vmask, cmask, e));
                        return Some(next);
                    }
                    // each missing terminal still costs at least one fresh color
                    let missing = (terminal_mask & !next.0).count_ones();
                    if next.1.count_ones() + missing > self.total_colors {
                        continue;
                    }
                    self.seen.insert(next, (vmask, cmask, e));
                    queue.push_back(next);
                }
            }
        }
        None
    }

    pub(crate) fn exists(&mut self, terminals: &[usize]) -> bool {
        let mask = terminals.iter().fold(0u64, |m, &v| m | 1 << v);
        self.search(mask).is_some()
    }

    fn witness(&mut self, terminals: &[usize]) -> Option<Vec<EdgeId>> {
        let mask = terminals.iter().fold(0u64, |m, &v| m | 1 << v);
        let goal = self.search(mask)?;
        let mut edges = Vec::new();
        let mut state = goal;
        while let Some(&(pv, pc, e)) = self.seen.get(&state) {
            if e == usize::MAX {
                break;
            }
            edges.push(e);
            state = (pv, pc);
        }
        edges.reverse();
        Some(edges)
    }
}

struct BitIter64(u64);

impl Iterator for BitIter64 {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// True iff some subtree of `g` contains every vertex of `s` with all edge
/// colors distinct. A single vertex is contained in the empty tree.
pub fn exists_rainbow_tree(g: &Graph, c: &EdgeColoring, s: &VertexSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut ctx = VerifyCtx::new(g, c)?;
    Ok(ctx.exists(&s.to_vec()))
}

/// Like [`exists_rainbow_tree`] but returns the edge ids of a smallest
/// witness tree when one exists.
pub fn rainbow_tree_witness(
    g: &Graph,
    c: &EdgeColoring,
    s: &VertexSet,
) -> Result<Option<Vec<EdgeId>>> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut ctx = VerifyCtx::new(g, c)?;
    Ok(ctx.witness(&s.to_vec()))
}

/// Checks that every k-subset of vertices lies on a rainbow tree; on failure
/// returns the lexicographically first failing subset. When `k > n` the
/// check degenerates to the single full vertex set.
pub fn is_k_rainbow(g: &Graph, c: &EdgeColoring, k: usize) -> Result<Verdict> {
    let mut ctx = VerifyCtx::new(g, c)?;
    let size = k.min(g.n());
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        if !ctx.exists(&subset) {
            return Ok(Verdict::Fail { subset });
        }
        if !next_combination(&mut subset, g.n()) {
            return Ok(Verdict::Pass);
        }
    }
}

/// Advances `subset` to the next combination of `{0..n}` in lexicographic
/// order; false when exhausted.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let size = subset.len();
    if size == 0 {
        return false;
    }
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
