use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

/// An edge coloring: one color id in `1..=k` per edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    k: u32,
}

impl EdgeColoring {
    /// Builds a coloring with an explicit palette size `k >= max color`.
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!(
                "color {c} outside palette 1..={k}"
            )));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// Builds a coloring whose palette size is the maximum color used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("colors are 1-based".into()));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        Ok(EdgeColoring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.k as usize + 1];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c as usize] {
                seen[c as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// The coloring file format: one `u v color` line per edge of `g`,
    /// colors 1-based, edges in canonical order.
    pub fn to_file(&self, g: &Graph) -> String {
        debug_assert_eq!(self.colors.len(), g.m());
        let mut out = String::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let _ = writeln!(out, "{u} {v} {}", self.colors[e]);
        }
        out
    }

    /// Parses a coloring file against `g`: every line names an edge of `g`
    /// by its endpoints (either order) plus a color, each edge must appear
    /// exactly once, and the edge set must match the graph exactly.
    pub fn from_file(g: &Graph, text: &str) -> Result<Self> {
        let mut colors: Vec<Option<u32>> = vec![None; g.m()];
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 3 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected `u v color`".into(),
                });
            }
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("malformed token {t:?}"),
                })
            };
            let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
            let c = parse(tokens[2])? as u32;
            if c == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "colors are 1-based".into(),
                });
            }
            let e = g.edge_id(u, v).ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("edge {u}-{v} not in graph"),
            })?;
            if colors[e].is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("edge {u}-{v} colored twice"),
                });
            }
            colors[e] = Some(c);
        }
        let missing = colors.iter().position(|c| c.is_none());
        if let Some(e) = missing {
            let (u, v) = g.edge(e);
            return Err(Error::InvalidColoring(format!("edge {u}-{v} has no color")));
        }
        Self::from_colors(colors.into_iter().map(Option::unwrap).collect())
    }
}
