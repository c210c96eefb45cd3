use crate::graph::{Dart, PolarizedGraph};

/// Orientation-preserving isomorphism of connected rotation systems, up to
/// relabeling of vertices and edges.
///
/// Fixing the image of one dart determines everything through `next` and
/// `reverse`, so trying every target dart costs O(A^2).
pub fn isomorphic(a: &PolarizedGraph, b: &PolarizedGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.edge_count() == 0 {
        return true;
    }
    let mut degrees_a: Vec<usize> = (0..a.vertex_count()).map(|v| a.degree(v)).collect();
    let mut degrees_b: Vec<usize> = (0..b.vertex_count()).map(|v| b.degree(v)).collect();
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return false;
    }
    b.darts().any(|t| extends(a, b, t))
}

fn extends(a: &PolarizedGraph, b: &PolarizedGraph, target: Dart) -> bool {
    let n = a.dart_count();
    let mut map: Vec<Option<Dart>> = vec![None; n];
    let mut hit = vec![false; n];
    let mut vmap: Vec<Option<usize>> = vec![None; a.vertex_count()];
    let mut vhit = vec![false; b.vertex_count()];
    let mut stack = vec![(Dart(0), target)];
    while let Some((x, y)) = stack.pop() {
        match map[x.0] {
            Some(z) if z == y => continue,
            Some(_) => return false,
            None => {}
        }
        if hit[y.0] {
            return false;
        }
        map[x.0] = Some(y);
        hit[y.0] = true;
        let (u, w) = (a.origin(x), b.origin(y));
        match vmap[u] {
            Some(z) if z != w => return false,
            Some(_) => {}
            None => {
                if vhit[w] {
                    return false;
                }
                vmap[u] = Some(w);
                vhit[w] = true;
            }
        }
        stack.push((a.next(x), b.next(y)));
        stack.push((x.rev(), y.rev()));
    }
    map.iter().all(Option::is_some)
}
