use crate::domination::DominationCertificate;
use crate::error::{Error, Result};
use crate::families::complete_bipartite;
use crate::graph::Graph;
use crate::rainbow::coloring::EdgeColoring;
use crate::rainbow::exact::Rx3Budget;
use crate::rainbow::extend::{base_coloring, extend_via_2dominating};
use crate::rainbow::verify::{is_k_rainbow, Verdict};
use crate::vertex_set::VertexSet;

/// 3-rainbow coloring of K_{s,t} (3 <= s <= t) with at most
/// `min(6, s + t - 3)` colors, verified before it is returned.
///
/// For `s + t >= 9` this is the four-extra-color extension over the
/// connected 2-dominating set {u1, u2, w1, w2}, whose interior is a
/// 4-cycle needing two colors. For smaller orders a Latin square on a
/// K_{3,3} core (edge u_i w_j gets color (i + j) mod 3) is extended one
/// vertex at a time, each new vertex claiming a fresh color on all its
/// edges to earlier vertices — `s + t - 3` colors in total.
pub fn kst_coloring(s: usize, t: usize) -> Result<(Graph, EdgeColoring)> {
    if s < 3 || s > t {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite coloring needs 3 <= s <= t, got ({s}, {t})"
        )));
    }
    let g = complete_bipartite(s, t);
    let left: Vec<usize> = (0..s).collect();
    let right: Vec<usize> = (s..s + t).collect();
    let coloring = color_complete_bipartite(&g, &left, &right)?;
    Ok((g, coloring))
}

/// Like [`kst_coloring`], for an already-built graph that must be complete
/// bipartite with both sides of size at least 3.
pub fn kst_coloring_for(g: &Graph) -> Result<EdgeColoring> {
    let (a, b) = g.bipartition().ok_or(Error::NotCompleteBipartite)?;
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let (s, t) = (a.len(), b.len());
    if s < 3 || g.m() != s * t || !g.is_connected() {
        return Err(Error::NotCompleteBipartite);
    }
    color_complete_bipartite(g, &a.to_vec(), &b.to_vec())
}

fn color_complete_bipartite(g: &Graph, left: &[usize], right: &[usize]) -> Result<EdgeColoring> {
    let (s, t) = (left.len(), right.len());
    let coloring = if s + t >= 9 {
        let d: VertexSet = [left[0], left[1], right[0], right[1]].into_iter().collect();
        let cert = DominationCertificate {
            set: d.clone(),
            k: 2,
            connected: true,
            size: 4,
            method: "construction".into(),
        };
        let (interior, _) = g.induced_subgraph(&d);
        let base = base_coloring(&interior, &Rx3Budget::default())?;
        extend_via_2dominating(g, &cert, &base)?
    } else {
        latin_cone_coloring(g, left, right)?
    };
    debug_assert!(coloring.k() as usize <= 6.min(s + t - 3));
    Ok(coloring)
}

/// Latin square on the first three vertices of each side, then fresh colors
/// vertex by vertex: an edge between two later vertices takes the color of
/// whichever endpoint was added last.
fn latin_cone_coloring(g: &Graph, left: &[usize], right: &[usize]) -> Result<EdgeColoring> {
    let mut side_index = vec![(false, 0usize); g.n()];
    for (i, &v) in left.iter().enumerate() {
        side_index[v] = (true, i);
    }
    for (j, &v) in right.iter().enumerate() {
        side_index[v] = (false, j);
    }
    // vertices beyond the K_{3,3} core in a fixed join order
    let mut rank = vec![0usize; g.n()];
    let mut fresh = vec![0u32; g.n()];
    for (i, &v) in left.iter().skip(3).chain(right.iter().skip(3)).enumerate() {
        fresh[v] = 4 + i as u32;
        rank[v] = 4 + i;
    }
    let mut colors = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let (iu, ju) = side_index[u];
        let (iv, jv) = side_index[v];
        debug_assert_ne!(iu, iv);
        let (i, j) = if iu { (ju, jv) } else { (jv, ju) };
        let c = if i < 3 && j < 3 {
            ((i + j) % 3) as u32 + 1
        } else if rank[u] >= rank[v] {
            fresh[u]
        } else {
            fresh[v]
        };
        colors.push(c);
    }
    let coloring = EdgeColoring::from_colors(colors)?;
    match is_k_rainbow(g, &coloring, 3)? {
        Verdict::Pass => Ok(coloring),
        Verdict::Fail { subset } => Err(Error::VerificationFailed(subset)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33_needs_three_colors() {
        let (g, c) = kst_coloring(3, 3).unwrap();
        assert_eq!(c.k(), 3);
        assert!(is_k_rainbow(&g, &c, 3).unwrap().is_pass());
    }

    #[test]
    fn k35_stays_within_five() {
        let (g, c) = kst_coloring(3, 5).unwrap();
        assert!(c.k() <= 5);
        assert!(is_k_rainbow(&g, &c, 3).unwrap().is_pass());
    }

    #[test]
    fn k59_uses_the_extension_route() {
        let (g, c) = kst_coloring(5, 9).unwrap();
        assert!(c.k() <= 6);
        assert!(is_k_rainbow(&g, &c, 3).unwrap().is_pass());
    }

    #[test]
    fn relabeled_input_is_accepted() {
        // same K_{3,4} but with sides interleaved
        let mut edges = Vec::new();
        for u in [0, 2, 4] {
            for w in [1, 3, 5, 6] {
                edges.push((u, w));
            }
        }
        let g = Graph::from_edges(7, &edges).unwrap();
        let c = kst_coloring_for(&g).unwrap();
        assert!(c.k() <= 4);
        assert!(is_k_rainbow(&g, &c, 3).unwrap().is_pass());
    }

    #[test]
    fn small_sides_are_rejected() {
        assert!(kst_coloring(2, 5).is_err());
        let k24 = complete_bipartite(2, 4);
        assert!(matches!(
            kst_coloring_for(&k24),
            Err(Error::NotCompleteBipartite)
        ));
        let c5 = crate::families::generate(&crate::families::FamilySpec::Cycle { n: 5 }).unwrap();
        assert!(kst_coloring_for(&c5).is_err());
    }
}
