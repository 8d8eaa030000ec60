use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::bounds::{lower_bound_steiner, DEFAULT_STEINER_LIMIT};
use crate::rainbow::coloring::EdgeColoring;
use crate::rainbow::verify::VerifyCtx;

/// Search budget for the exact solver.
#[derive(Debug, Clone, Copy)]
pub struct Rx3Budget {
    /// Refuse instances with more edges than this.
    pub max_edges: usize,
    /// Give up after examining this many canonical colorings.
    pub max_candidates: u64,
}

impl Default for Rx3Budget {
    fn default() -> Self {
        Rx3Budget {
            max_edges: 14,
            max_candidates: 10_000_000,
        }
    }
}

/// Result of the exact search: either a proved value with a witness, or an
/// explicit "unknown above this certified lower bound".
#[derive(Debug, Clone)]
pub enum Rx3Result {
    Proved {
        value: u32,
        coloring: EdgeColoring,
        candidates: u64,
    },
    Unknown {
        lower_bound: u32,
        candidates: u64,
    },
}

impl Rx3Result {
    pub fn value(&self) -> Option<u32> {
        match self {
            Rx3Result::Proved { value, .. } => Some(*value),
            Rx3Result::Unknown { .. } => None,
        }
    }
}

/// Exact 3-rainbow index by enumerating edge colorings as canonical set
/// partitions (restricted-growth strings), which quotients out color
/// permutations. The number of classes ascends from the Steiner lower
/// bound; when the sweep for some class count is exhausted without a valid
/// coloring, infeasibility of that count is certified and the next is tried.
pub fn rx3_exact(g: &Graph, budget: &Rx3Budget) -> Result<Rx3Result> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(
            "3-rainbow index needs n >= 3".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lower = lower_bound_steiner(g, DEFAULT_STEINER_LIMIT)?.value as u32;
    let m = g.m();
    if m > budget.max_edges {
        return Ok(Rx3Result::Unknown {
            lower_bound: lower,
            candidates: 0,
        });
    }

    let triples = all_triples(g.n());
    let mut failing_cache: Vec<Vec<usize>> = Vec::new();
    let mut candidates: u64 = 0;

    for classes in lower..=m as u32 {
        let mut found: Option<Vec<u32>> = None;
        let exhausted = for_each_partition(m, classes as usize, &mut |rgs| {
            candidates += 1;
            if candidates > budget.max_candidates {
                return Sweep::Abort;
            }
            let colors: Vec<u32> = rgs.iter().map(|&c| c + 1).collect();
            let coloring = EdgeColoring::new(colors, classes).expect("rgs colors are valid");
            if check_coloring(g, &coloring, &triples, &mut failing_cache) {
                found = Some(coloring.colors().to_vec());
                return Sweep::Stop;
            }
            Sweep::Continue
        });
        match (found, exhausted) {
            (Some(colors), _) => {
                let coloring = EdgeColoring::new(colors, classes).expect("validated above");
                return Ok(Rx3Result::Proved {
                    value: classes,
                    coloring,
                    candidates,
                });
            }
            (None, Sweep::Abort) => {
                // sweeps below `classes` were exhausted, so rx3 >= classes
                return Ok(Rx3Result::Unknown {
                    lower_bound: classes,
                    candidates,
                });
            }
            (None, _) => {}
        }
    }
    unreachable!("all-distinct edge colors always form a 3-rainbow coloring of a connected graph")
}

fn all_triples(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Full verification with a small move-to-front cache of recently failing
/// triples, which kills most candidates without a full scan.
fn check_coloring(
    g: &Graph,
    coloring: &EdgeColoring,
    triples: &[Vec<usize>],
    failing_cache: &mut Vec<Vec<usize>>,
) -> bool {
    let mut ctx = VerifyCtx::new(g, coloring).expect("exact search stays within verifier limits");
    for (i, t) in failing_cache.iter().enumerate() {
        if !ctx.exists(t) {
            let t = failing_cache.remove(i);
            failing_cache.insert(0, t);
            return false;
        }
    }
    for t in triples {
        if !ctx.exists(t) {
            failing_cache.insert(0, t.clone());
            failing_cache.truncate(24);
            return false;
        }
    }
    true
}

#[derive(PartialEq, Clone, Copy, Debug)]
pub(crate) enum Sweep {
    Continue,
    Stop,
    Abort,
}

/// Visits every restricted-growth string of the given length with exactly
/// `classes` distinct values, in lexicographic order. Returns how the sweep
/// ended.
pub(crate) fn for_each_partition(
    len: usize,
    classes: usize,
    visit: &mut impl FnMut(&[u32]) -> Sweep,
) -> Sweep {
    if classes == 0 || classes > len {
        return Sweep::Continue;
    }
    let mut rgs = vec![0u32; len];
    fn rec(
        rgs: &mut Vec<u32>,
        pos: usize,
        max_used: u32,
        classes: u32,
        visit: &mut impl FnMut(&[u32]) -> Sweep,
    ) -> Sweep {
        let len = rgs.len();
        if pos == len {
            if max_used + 1 == classes {
                return visit(rgs);
            }
            return Sweep::Continue;
        }
        // enough positions must remain to reach the class count
        let remaining = (len - pos) as u32;
        let needed = classes - (max_used + 1).min(classes);
        if needed > remaining {
            return Sweep::Continue;
        }
        let top = (max_used + 1).min(classes - 1);
        // when every remaining slot must open a class, skip reused values
        let bottom = if needed == remaining { max_used + 1 } else { 0 };
        for v in bottom..=top {
            rgs[pos] = v;
            let status = rec(rgs, pos + 1, max_used.max(v), classes, visit);
            if status != Sweep::Continue {
                return status;
            }
        }
        Sweep::Continue
    }
    // first position is always class 0
    rec(&mut rgs, 1, 0, classes as u32, visit)
}

/// Number of partitions of an m-set into exactly k nonempty classes.
#[cfg(test)]
pub(crate) fn stirling2(m: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; k + 1]; m + 1];
    table[0][0] = 1;
    for i in 1..=m {
        for j in 1..=k.min(i) {
            table[i][j] = j as u64 * table[i - 1][j] + table[i - 1][j - 1];
        }
    }
    table[m][k]
}
