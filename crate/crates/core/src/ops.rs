//! Local surgeries on polarized graphs.
//!
//! Every operation is pure: it returns a new graph together with the map
//! from old edge and vertex ids to new ones. Surviving ids keep their
//! relative order; new edges and vertices are appended.

use crate::error::{Error, Result};
use crate::graph::{Dart, PolarizedGraph};
use crate::walks::{trace_walks, WalkDecomposition};

#[derive(Clone, Debug)]
pub struct OpOutput {
    pub graph: PolarizedGraph,
    /// Old edge id to new edge id (`None` when removed).
    pub edge_map: Vec<Option<usize>>,
    /// Old vertex id to new vertex id (`None` when removed).
    pub vertex_map: Vec<Option<usize>>,
    pub new_edges: Vec<usize>,
    pub new_vertices: Vec<usize>,
}

/// Mutable scratch copy of a rotation system, renumbered on `finish`.
struct Work {
    rot: Vec<Option<Vec<Dart>>>,
    edge_alive: Vec<bool>,
    old_vertices: usize,
    old_edges: usize,
}

impl Work {
    fn new(g: &PolarizedGraph) -> Work {
        Work {
            rot: g.rotations().into_iter().map(Some).collect(),
            edge_alive: vec![true; g.edge_count()],
            old_vertices: g.vertex_count(),
            old_edges: g.edge_count(),
        }
    }

    fn add_edge(&mut self) -> usize {
        self.edge_alive.push(true);
        self.edge_alive.len() - 1
    }

    fn add_vertex(&mut self, rot: Vec<Dart>) -> usize {
        self.rot.push(Some(rot));
        self.rot.len() - 1
    }

    fn at(&mut self, v: usize) -> &mut Vec<Dart> {
        self.rot[v].as_mut().expect("vertex is alive")
    }

    fn replace(&mut self, v: usize, old: Dart, new: Dart) {
        let rot = self.at(v);
        let i = rot.iter().position(|&d| d == old).expect("dart sits at its origin");
        rot[i] = new;
    }

    fn remove(&mut self, v: usize, d: Dart) {
        self.at(v).retain(|&x| x != d);
    }

    fn insert_before(&mut self, v: usize, anchor: Dart, d: Dart) {
        let rot = self.at(v);
        let i = rot.iter().position(|&x| x == anchor).expect("anchor sits at its origin");
        rot.insert(i, d);
    }

    fn insert_after(&mut self, v: usize, anchor: Dart, d: Dart) {
        let rot = self.at(v);
        let i = rot.iter().position(|&x| x == anchor).expect("anchor sits at its origin");
        rot.insert(i + 1, d);
    }

    fn finish(self) -> Result<OpOutput> {
        let mut emap = vec![None; self.edge_alive.len()];
        let mut next_id = 0;
        for (e, &alive) in self.edge_alive.iter().enumerate() {
            if alive {
                emap[e] = Some(next_id);
                next_id += 1;
            }
        }
        let mut vmap = vec![None; self.rot.len()];
        let mut rotations = Vec::new();
        for (v, rot) in self.rot.iter().enumerate() {
            if let Some(rot) = rot {
                vmap[v] = Some(rotations.len());
                let renamed = rot
                    .iter()
                    .map(|d| {
                        let e = emap[d.edge()].ok_or_else(|| {
                            Error::Internal(format!("removed edge {} still in a rotation", d.edge()))
                        })?;
                        Ok(Dart::new(e, d.side()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rotations.push(renamed);
            }
        }
        let graph = PolarizedGraph::from_rotations(rotations.len(), &rotations)?;
        Ok(OpOutput {
            graph,
            new_edges: emap[self.old_edges..].iter().flatten().copied().collect(),
            new_vertices: vmap[self.old_vertices..].iter().flatten().copied().collect(),
            edge_map: emap[..self.old_edges].to_vec(),
            vertex_map: vmap[..self.old_vertices].to_vec(),
        })
    }
}

fn complete_walks(g: &PolarizedGraph) -> Result<WalkDecomposition> {
    let w = trace_walks(g)?;
    if w.complete_index.is_none() {
        return Err(Error::Precondition("graph has no complete walk".into()));
    }
    Ok(w)
}

/// The darts at `v` from the successor of `d` round to the predecessor of `d`.
fn after(g: &PolarizedGraph, d: Dart) -> Vec<Dart> {
    let mut out = Vec::new();
    let mut x = g.next(d);
    while x != d {
        out.push(x);
        x = g.next(x);
    }
    out
}

/// The darts at the origin of `d`, starting with `d`.
fn from(g: &PolarizedGraph, d: Dart) -> Vec<Dart> {
    let mut out = vec![d];
    out.extend(after(g, d));
    out
}

/// Merges the endpoints of a non-loop edge. The merged rotation is the
/// origin's darts after `e+` followed by the head's darts after `e-`, placed
/// at the origin vertex; the head vertex disappears.
pub fn contract_edge(g: &PolarizedGraph, e: usize) -> Result<OpOutput> {
    g.check_edge(e)?;
    if g.is_loop(e) {
        return Err(Error::Precondition(format!("edge {e} is a loop")));
    }
    let d = Dart::new(e, 0);
    let (u, w) = (g.origin(d), g.head(d));
    let mut merged = after(g, d);
    merged.extend(after(g, d.rev()));
    let mut work = Work::new(g);
    work.rot[u] = Some(merged);
    work.rot[w] = None;
    work.edge_alive[e] = false;
    work.finish()
}

/// Splits `v` by moving the arc of `len` darts starting at position `start`
/// of its normalized rotation onto a new vertex, joined to `v` by a new edge.
///
/// The first dart of the arc must lie on the complete walk and the reverse of
/// its last dart too: the walk then crosses the new edge both ways. The new
/// edge's `+` dart sits first at `v`; its `-` dart sits first at the new
/// vertex.
pub fn blow_up_elementary(g: &PolarizedGraph, v: usize, start: usize, len: usize) -> Result<OpOutput> {
    g.check_vertex(v)?;
    let rot = g.rotation(v);
    let deg = rot.len();
    if len == 0 || len >= deg || start >= deg {
        return Err(Error::Precondition(format!(
            "cut (start {start}, length {len}) does not split a rotation of {deg} darts"
        )));
    }
    let w = complete_walks(g)?;
    let arc: Vec<Dart> = (0..len).map(|i| rot[(start + i) % deg]).collect();
    let rest: Vec<Dart> = (len..deg).map(|i| rot[(start + i) % deg]).collect();
    let (first, last) = (arc[0], arc[len - 1]);
    if !w.in_complete(first) {
        return Err(Error::Precondition(format!("first moved dart {first} is not on the complete walk")));
    }
    if !w.in_complete(last.rev()) {
        return Err(Error::Precondition(format!(
            "the complete walk does not enter along the last moved dart {last}"
        )));
    }
    let mut work = Work::new(g);
    let e = work.add_edge();
    let d = Dart::new(e, 0);
    let mut at_v = vec![d];
    at_v.extend(rest);
    work.rot[v] = Some(at_v);
    let mut moved = vec![d.rev()];
    moved.extend(arc);
    work.add_vertex(moved);
    work.finish()
}

/// Blow-up given by the darts to move rather than by positions.
pub fn blow_up_arc(g: &PolarizedGraph, v: usize, arc: &[Dart]) -> Result<OpOutput> {
    let rot = g.rotation(v);
    let start = arc
        .first()
        .and_then(|d| rot.iter().position(|x| x == d))
        .ok_or_else(|| Error::Precondition("arc does not start at the vertex".into()))?;
    let deg = rot.len();
    if arc.iter().enumerate().any(|(i, d)| rot[(start + i) % deg] != *d) {
        return Err(Error::Precondition("darts are not consecutive at the vertex".into()));
    }
    blow_up_elementary(g, v, start, arc.len())
}

/// Replaces the path `e_in`, `f_out` through `v` by a single edge.
///
/// `f_out` must follow `reverse(e_in)` at `v`, both darts must lie on the
/// complete walk and neither reverse may. The new edge takes the place of
/// `e_in` at its origin and of `reverse(f_out)` at the far end. If `v` is
/// left without darts it is removed.
pub fn surgery(g: &PolarizedGraph, v: usize, e_in: Dart, f_out: Dart) -> Result<OpOutput> {
    g.check_vertex(v)?;
    g.check_dart(e_in)?;
    g.check_dart(f_out)?;
    if g.head(e_in) != v || g.origin(f_out) != v {
        return Err(Error::Precondition(format!("{e_in} must enter and {f_out} must leave vertex {v}")));
    }
    if g.next(e_in.rev()) != f_out {
        return Err(Error::Precondition(format!("{f_out} does not follow {} at vertex {v}", e_in.rev())));
    }
    if e_in.edge() == f_out.edge() {
        return Err(Error::Precondition("surgery needs two distinct edges".into()));
    }
    let w = complete_walks(g)?;
    if !w.in_complete(e_in) {
        return Err(Error::Precondition(format!("{e_in} is not on the complete walk")));
    }
    for d in [e_in, f_out] {
        if w.in_complete(d.rev()) {
            return Err(Error::Precondition(format!(
                "edge {} is traversed both ways by the complete walk",
                d.edge()
            )));
        }
    }
    let mut work = Work::new(g);
    let h = Dart::new(work.add_edge(), 0);
    work.replace(g.origin(e_in), e_in, h);
    work.replace(g.head(f_out), f_out.rev(), h.rev());
    work.remove(v, e_in.rev());
    work.remove(v, f_out);
    work.edge_alive[e_in.edge()] = false;
    work.edge_alive[f_out.edge()] = false;
    if work.at(v).is_empty() {
        work.rot[v] = None;
    }
    work.finish()
}

/// Inserts a degree-2 vertex in the middle of `e`. Edge `e` keeps its origin
/// and ends at the new vertex; a new edge continues to the old head.
pub fn subdivide(g: &PolarizedGraph, e: usize) -> Result<OpOutput> {
    g.check_edge(e)?;
    let d = Dart::new(e, 0);
    let w = g.head(d);
    let mut work = Work::new(g);
    let n = Dart::new(work.add_edge(), 0);
    work.replace(w, d.rev(), n.rev());
    work.add_vertex(vec![d.rev(), n]);
    work.finish()
}

/// Adds an edge parallel to a segment of the complete walk.
///
/// The new edge `x` leaves the start of the chain, placed just before the
/// first chain dart, and `x-` is placed just after the reverse of the last
/// chain dart. The new face is exactly the chain followed by `x-`.
pub fn add_parallel_edge(g: &PolarizedGraph, chain: &[Dart]) -> Result<OpOutput> {
    if chain.is_empty() {
        return Err(Error::Precondition("empty chain".into()));
    }
    for &d in chain {
        g.check_dart(d)?;
    }
    let w = complete_walks(g)?;
    let mc_len = w.complete().map(|m| m.len()).unwrap_or(0);
    for (i, &d) in chain.iter().enumerate() {
        if !w.in_complete(d) {
            return Err(Error::Precondition(format!("{d} is not on the complete walk")));
        }
        if !w.in_complete(d.rev()) {
            return Err(Error::Precondition(format!("{} is not on the complete walk", d.rev())));
        }
        if i + 1 < chain.len() && g.tau(d) != chain[i + 1] {
            return Err(Error::Precondition(format!("{} does not follow {d} on the walk", chain[i + 1])));
        }
    }
    if chain.len() >= mc_len {
        return Err(Error::Precondition("chain covers the whole complete walk".into()));
    }
    let (first, last) = (chain[0], chain[chain.len() - 1]);
    let mut work = Work::new(g);
    let x = Dart::new(work.add_edge(), 0);
    work.insert_before(g.origin(first), first, x);
    work.insert_after(g.head(last), last.rev(), x.rev());
    work.finish()
}

/// Doubles the edge of `b`: a parallel edge along the single-dart chain
/// `reverse(b)`, bounding a new face of length 2.
pub fn double_edge(g: &PolarizedGraph, b: Dart) -> Result<OpOutput> {
    g.check_dart(b)?;
    add_parallel_edge(g, &[b.rev()])
}

#[derive(Clone, Debug)]
pub struct SumOutput {
    pub graph: PolarizedGraph,
    /// The identified vertex.
    pub hub: usize,
    /// Vertex ids of the second summand in the result.
    pub vertex_map2: Vec<usize>,
    /// Edge `e` of the second summand becomes `e + edge_offset`.
    pub edge_offset: usize,
}

/// The last dart leaving `v` along the complete walk, in walk order.
fn last_exit(g: &PolarizedGraph, w: &WalkDecomposition, v: usize) -> Result<Dart> {
    let mc = w.complete().ok_or_else(|| Error::Precondition("graph has no complete walk".into()))?;
    mc.darts
        .iter()
        .rev()
        .find(|&&d| g.origin(d) == v)
        .copied()
        .ok_or_else(|| Error::Precondition(format!("the complete walk misses vertex {v}")))
}

/// Identifies `v1` with `v2` through the complete-walk faces.
///
/// At each vertex the splice point is the corner just before the last dart
/// leaving it along the complete walk. The merged rotation lists `v1`'s
/// darts from that dart round, then `v2`'s darts the same way, so the two
/// complete walks concatenate and every other face survives.
pub fn connected_sum(g1: &PolarizedGraph, v1: usize, g2: &PolarizedGraph, v2: usize) -> Result<SumOutput> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let w1 = complete_walks(g1)?;
    let w2 = complete_walks(g2)?;
    let q1 = last_exit(g1, &w1, v1)?;
    let q2 = last_exit(g2, &w2, v2)?;
    let offset = g1.edge_count();
    let shift = |d: Dart| Dart(d.0 + 2 * offset);

    let mut rotations = g1.rotations();
    rotations[v1] = from(g1, q1);
    rotations[v1].extend(from(g2, q2).into_iter().map(shift));
    let mut vertex_map2 = vec![0; g2.vertex_count()];
    for v in 0..g2.vertex_count() {
        if v == v2 {
            vertex_map2[v] = v1;
        } else {
            vertex_map2[v] = rotations.len();
            rotations.push(g2.rotation(v).into_iter().map(shift).collect());
        }
    }
    let graph = PolarizedGraph::from_rotations(rotations.len(), &rotations)?;
    Ok(SumOutput { graph, hub: v1, vertex_map2, edge_offset: offset })
}
