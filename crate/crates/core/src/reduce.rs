use crate::error::{Error, Result};
use crate::graph::PolarizedGraph;
use crate::walks::trace_walks;

/// Deletes edges until no walk has length 1 or 2.
///
/// A length-1 walk is a contractible loop and its edge goes. A length-2 walk
/// is a bigon between two parallel edges (or two loops) and the one with the
/// larger id goes. Each deletion merges two faces, so genus is preserved, and
/// adjacency between distinct vertices never changes.
pub fn reduce_to_condition_c(g: &PolarizedGraph) -> Result<PolarizedGraph> {
    if g.vertex_count() < 3 {
        return Err(Error::Precondition("reduction needs at least 3 vertices".into()));
    }
    let mut g = g.clone();
    loop {
        let w = trace_walks(&g)?;
        if w.complete_index.is_none() {
            return Err(Error::Precondition("graph has no complete walk".into()));
        }
        let short = w
            .walks
            .iter()
            .find(|walk| walk.len() == 1)
            .or_else(|| w.walks.iter().find(|walk| walk.len() == 2));
        let Some(walk) = short else {
            return Ok(g);
        };
        let e = walk.darts.iter().map(|d| d.edge()).max().expect("walks are nonempty");
        let d = walk.darts.iter().find(|d| d.edge() == e).copied().expect("edge is on the walk");
        if w.walk_of(d) == w.walk_of(d.rev()) {
            return Err(Error::Internal(format!("short walk through both sides of edge {e}")));
        }
        g = g.without_edge(e);
    }
}
