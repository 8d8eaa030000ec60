use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use std::collections::VecDeque;
use std::fmt::Write as _;

pub type EdgeId = usize;

/// An immutable simple undirected graph.
///
/// Edges are stored sorted lexicographically by (min endpoint, max endpoint);
/// an edge's id is its position in that order, which keeps coloring files
/// stable across runs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<EdgeId>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}

impl Graph {
    /// Builds a graph from an unordered edge list. Rejects loops, duplicate
    /// edges and endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for pair in norm.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in norm.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(e);
            incident[v].push(e);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
            incident,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, in ascending order.
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// The other endpoint of edge `e`.
    pub fn opposite(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_from(0, None).len() == self.n
    }

    /// Vertices reachable from `start`, optionally treating `skip` as deleted.
    fn component_from(&self, start: usize, skip: Option<usize>) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if Some(w) != skip && !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Number of connected components after deleting vertex `u`.
    pub fn components_without(&self, u: usize) -> usize {
        let mut seen = VertexSet::singleton(u);
        let mut count = 0;
        for start in 0..self.n {
            if !seen.contains(start) {
                count += 1;
                seen = seen.union(&self.component_from(start, Some(u)));
            }
        }
        count
    }

    /// Two-coloring by BFS; `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == usize::MAX {
                        side[w] = side[v] ^ 1;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| side[v] == 0).collect();
        let b = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `vs`, with vertices relabeled to `0..vs.len()`.
    /// The returned vector maps new ids back to the original ones.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = vs.to_vec();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if vs.contains(u) && vs.contains(v) {
                edges.push((fwd[u], fwd[v]));
            }
        }
        let g = Graph::from_edges(back.len(), &edges).expect("induced subgraph of a valid graph");
        (g, back)
    }

    /// Parses the edge-list text format: lines `u v` with 0-based ids,
    /// blank lines and `#` comments allowed, and an optional `n <count>`
    /// header overriding the vertex count (default is 1 + max id).
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared_n: Option<usize> = None;
        let mut raw: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().unwrap();
            if first == "n" {
                if declared_n.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate header".into(),
                    });
                }
                let count = tokens.next().ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "header missing count".into(),
                })?;
                declared_n = Some(count.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex count {count:?}"),
                })?);
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "trailing tokens after header".into(),
                    });
                }
                continue;
            }
            let second = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "expected two vertex ids".into(),
            })?;
            if tokens.next().is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "trailing tokens after edge".into(),
                });
            }
            let parse_id = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("malformed vertex id {t:?}"),
                })
            };
            raw.push((parse_id(first)?, parse_id(second)?, lineno));
        }
        let max_id = raw.iter().map(|&(u, v, _)| u.max(v)).max();
        let n = match (declared_n, max_id) {
            (Some(n), _) => n,
            (None, Some(max)) => max + 1,
            (None, None) => 0,
        };
        let edges: Vec<(usize, usize)> = raw.iter().map(|&(u, v, _)| (u, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Emits the edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT export for visualization; `colors` (one entry per edge id, 1-based)
    /// adds a color attribute per edge.
    pub fn to_dot(&self, colors: Option<&[u32]>) -> String {
        const PALETTE: [&str; 12] = [
            "red",
            "blue",
            "green",
            "orange",
            "purple",
            "brown",
            "cyan",
            "magenta",
            "gold",
            "gray",
            "darkgreen",
            "navy",
        ];
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            match colors {
                Some(cs) => {
                    let c = cs[e];
                    let name = PALETTE[(c as usize - 1) % PALETTE.len()];
                    let _ = writeln!(out, "  {u} -- {v} [label={c}, color={name}];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Spanning forest of the subgraph induced by `within`, bipartitioned by
/// tree parity. Each component is rooted at its smallest vertex id and the
/// root goes to the first side. Returns the two sides and the forest edges.
pub fn forest_bipartition(g: &Graph, within: &VertexSet) -> (VertexSet, VertexSet, Vec<EdgeId>) {
    let mut side0 = VertexSet::new();
    let mut side1 = VertexSet::new();
    let mut seen = VertexSet::new();
    let mut tree_edges = Vec::new();
    for root in within.iter() {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        side0.insert(root);
        let mut queue = VecDeque::from([(root, 0usize)]);
        while let Some((v, depth)) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if within.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    if depth % 2 == 0 {
                        side1.insert(w);
                    } else {
                        side0.insert(w);
                    }
                    tree_edges.push(g.edge_id(v, w).expect("neighbor edge exists"));
                    queue.push_back((w, depth + 1));
                }
            }
        }
    }
    (side0, side1, tree_edges)
}
