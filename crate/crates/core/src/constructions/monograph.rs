use crate::error::{Error, Result};
use crate::faces::from_faces;
use crate::graph::{Dart, PolarizedGraph};
use crate::ops::{add_parallel_edge, blow_up_arc, subdivide};
use crate::walks::trace_walks;

/// One-vertex graph from the `4g`-gon `a1 b1 .. ag bg A1 B1 .. Ag Bg`
/// (capitals reversed). Edge `a_i` has id `2i - 2`, `b_i` has id `2i - 1`.
/// Its single face is the polygon boundary.
pub fn word_monograph(g: usize) -> Result<PolarizedGraph> {
    if g == 0 {
        return Err(Error::Input("genus must be at least 1".into()));
    }
    let mut face: Vec<Dart> = (0..2 * g).map(|e| Dart::new(e, 0)).collect();
    face.extend((0..2 * g).map(|e| Dart::new(e, 1)));
    from_faces(1, &vec![0; 4 * g], &[face])
}

/// The graph realizing the homotopic edge cap `3g + floor(3(S-1)/2)`.
///
/// Starting from the word monograph, `a_1` is cut into `S'` segments (`S'`
/// the largest odd number `<= S`), a parallel edge spans each consecutive
/// pair of segments (the last pair ending with `b_1`), diagonals run parallel
/// to `a_k b_k` for `k >= 2`, and one extra subdivision handles even `S`.
pub fn homotopic_optimal(s: usize, g: usize) -> Result<PolarizedGraph> {
    if s == 0 || g == 0 {
        return Err(Error::Input("S and g must be at least 1".into()));
    }
    let s_odd = if s % 2 == 1 { s } else { s - 1 };
    let mut graph = word_monograph(g)?;
    let mut segments = vec![0];
    for _ in 1..s_odd {
        let last = *segments.last().expect("nonempty");
        let out = subdivide(&graph, last)?;
        segments.push(out.new_edges[0]);
        graph = out.graph;
    }
    segments.push(1);
    for j in 1..=s_odd.div_ceil(2) {
        let chain = [Dart::new(segments[2 * j - 2], 0), Dart::new(segments[2 * j - 1], 0)];
        graph = add_parallel_edge(&graph, &chain)?.graph;
    }
    for k in 1..g {
        let chain = [Dart::new(2 * k, 0), Dart::new(2 * k + 1, 0)];
        graph = add_parallel_edge(&graph, &chain)?.graph;
    }
    if s != s_odd {
        graph = subdivide(&graph, 0)?.graph;
    }
    Ok(graph)
}

/// One vertex, `3g` loops, `g + 1` faces: the complete walk of length `3g`
/// and `g` triangles.
pub fn standard_monograph(g: usize) -> Result<PolarizedGraph> {
    homotopic_optimal(1, g)
}

/// Ordinary graph with a centre of degree `3g` and `3g` vertices of degree 3,
/// with `V = 12g/(3g+1)`.
///
/// Obtained by blowing the vertex of the standard monograph into a star:
/// its `6g` darts are cut into `3g` arcs of two consecutive darts, each moved
/// to its own new vertex. Both pairings of the cyclic order are tried.
pub fn lower_bound_graph(g: usize) -> Result<PolarizedGraph> {
    let base = standard_monograph(g)?;
    let rot = base.rotation(0);
    let n = rot.len();
    for offset in 0..2 {
        let arcs: Vec<[Dart; 2]> = (0..n / 2)
            .map(|i| [rot[(2 * i + offset) % n], rot[(2 * i + offset + 1) % n]])
            .collect();
        let mut graph = base.clone();
        let mut ok = true;
        for arc in &arcs {
            match blow_up_arc(&graph, 0, arc) {
                Ok(out) => graph = out.graph,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && trace_walks(&graph)?.complete_index.is_some() && graph.adjacent_pairs().len() == graph.edge_count() {
            return Ok(graph);
        }
    }
    Err(Error::Internal(format!("no star pairing of the genus-{g} monograph is ordinary")))
}
