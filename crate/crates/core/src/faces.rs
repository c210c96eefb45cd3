use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Dart, PolarizedGraph};

/// Rebuilds a rotation system from its left walks.
///
/// `origin[d]` is the vertex dart `d` leaves. Consecutive darts `x, y` of a
/// face force `next(reverse(x)) = y`; the induced permutation at each vertex
/// must be a single cycle.
pub fn from_faces(vertex_count: usize, origin: &[usize], faces: &[Vec<Dart>]) -> Result<PolarizedGraph> {
    let n = origin.len();
    if !n.is_multiple_of(2) {
        return Err(Error::Input(format!("odd number of darts ({n})")));
    }
    if let Some(&v) = origin.iter().find(|&&v| v >= vertex_count) {
        return Err(Error::Input(format!("origin vertex {v} out of range")));
    }
    let mut next: Vec<Option<Dart>> = vec![None; n];
    let mut used = vec![false; n];
    for face in faces {
        for (i, &x) in face.iter().enumerate() {
            if x.0 >= n {
                return Err(Error::Input(format!("dart {x} out of range")));
            }
            if used[x.0] {
                return Err(Error::Input(format!("dart {x} appears twice in the face list")));
            }
            used[x.0] = true;
            let y = face[(i + 1) % face.len()];
            if y.0 >= n {
                return Err(Error::Input(format!("dart {y} out of range")));
            }
            if origin[y.0] != origin[x.rev().0] {
                return Err(Error::NotPolarization(format!(
                    "{y} does not leave the head of {x}"
                )));
            }
            next[x.rev().0] = Some(y);
        }
    }
    if let Some(d) = used.iter().position(|u| !u) {
        return Err(Error::Input(format!("dart {} missing from the face list", Dart(d))));
    }
    let next: Vec<Dart> = next.into_iter().map(|d| d.expect("every dart is covered")).collect();

    let mut rotations = vec![Vec::new(); vertex_count];
    let mut seen = vec![false; n];
    for d in (0..n).map(Dart) {
        if seen[d.0] {
            continue;
        }
        let v = origin[d.0];
        if !rotations[v].is_empty() {
            return Err(Error::NotPolarization(format!(
                "the darts at vertex {v} form more than one cycle"
            )));
        }
        let mut x = d;
        loop {
            seen[x.0] = true;
            rotations[v].push(x);
            x = next[x.0];
            if x == d {
                break;
            }
        }
    }
    PolarizedGraph::from_rotations(vertex_count, &rotations)
}

/// Builds a simple graph from faces given as closed vertex sequences.
///
/// Each directed pair `u -> v` may occur once. Edges are numbered in order of
/// first appearance, and side `+` follows the direction of that appearance.
/// A trailing repeat of the first vertex is ignored.
pub fn from_vertex_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<PolarizedGraph> {
    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut dart_of: HashMap<(usize, usize), Dart> = HashMap::new();
    let mut origin = Vec::new();
    let mut dart_faces = Vec::new();
    for face in faces {
        let mut cycle = face.as_slice();
        if cycle.len() > 1 && cycle.first() == cycle.last() {
            cycle = &cycle[..cycle.len() - 1];
        }
        let mut darts = Vec::new();
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Input(format!("vertex out of range in face {face:?}")));
            }
            if u == v {
                return Err(Error::Input("loops cannot be given by vertex sequences".into()));
            }
            if dart_of.contains_key(&(u, v)) {
                return Err(Error::Input(format!("directed pair {u}->{v} used twice")));
            }
            let key = (u.min(v), u.max(v));
            let d = match edge_of.get(&key) {
                Some(&e) => Dart::new(e, 1),
                None => {
                    let e = edge_of.len();
                    edge_of.insert(key, e);
                    origin.resize(2 * e + 2, usize::MAX);
                    Dart::new(e, 0)
                }
            };
            origin[d.0] = u;
            dart_of.insert((u, v), d);
            darts.push(d);
        }
        dart_faces.push(darts);
    }
    for &(u, v) in dart_of.keys() {
        if !dart_of.contains_key(&(v, u)) {
            return Err(Error::Input(format!("directed pair {u}->{v} has no reverse")));
        }
    }
    from_faces(vertex_count, &origin, &dart_faces)
}
