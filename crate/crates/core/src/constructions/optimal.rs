use itertools::Itertools;

use super::monograph::standard_monograph;
use super::polygon::{gluing_quotient, GluingPolygon};
use super::recipe::{apply_recipe, Step};
use crate::error::{Error, Result};
use crate::faces::from_vertex_faces;
use crate::graph::{Dart, PolarizedGraph};
use crate::stats::Q;
use crate::walks::trace_walks;

/// Genus 1: three blow-ups of the standard monograph, the three new edges
/// doubled, one edge of each pair subdivided. Found by [`search_genus1`].
pub const FROZEN_G1: &[Step] = &[
    Step::BlowUp { vertex: 0, start: 0, len: 2 },
    Step::BlowUp { vertex: 0, start: 4, len: 2 },
    Step::BlowUp { vertex: 0, start: 0, len: 2 },
    Step::Double { dart: Dart(6) },
    Step::Double { dart: Dart(8) },
    Step::Double { dart: Dart(10) },
    Step::Subdivide { edge: 3 },
    Step::Subdivide { edge: 4 },
    Step::Subdivide { edge: 5 },
];

/// Genus 2: five blow-ups of the standard monograph into a star, then two
/// parallel edges closing triangles at the centre. Found by [`search_genus2`].
pub const FROZEN_G2: &[Step] = &[
    Step::BlowUp { vertex: 0, start: 1, len: 2 },
    Step::BlowUp { vertex: 0, start: 2, len: 2 },
    Step::BlowUp { vertex: 0, start: 3, len: 2 },
    Step::BlowUp { vertex: 0, start: 4, len: 2 },
    Step::BlowUp { vertex: 0, start: 5, len: 4 },
    Step::Parallel { first: Dart(13), len: 2 },
    Step::Parallel { first: Dart(17), len: 2 },
];

/// Genus 3: top sequence of a 24-gon whose quotient has 7 corner classes.
/// Found by [`search_genus3`].
pub const FROZEN_G3: [usize; 12] = [12, 7, 3, 11, 1, 10, 4, 5, 2, 8, 9, 6];

/// Genus 5 faces on vertices 1..8: the complete walk, then eight triangles.
const G5_FACES: [&[usize]; 9] = [
    &[1, 2, 3, 7, 8, 5, 6, 3, 8, 2, 1, 5, 4, 6, 2, 7, 1, 3, 4, 8, 1, 4, 2, 5, 7, 6, 1],
    &[3, 2, 4, 3],
    &[7, 3, 6, 7],
    &[8, 7, 2, 8],
    &[5, 8, 4, 5],
    &[6, 5, 2, 6],
    &[8, 3, 1, 8],
    &[5, 1, 7, 5],
    &[6, 4, 1, 6],
];

fn accepts(g: &PolarizedGraph, genus: i64, v: Q) -> bool {
    match g.stats() {
        Ok(st) => st.is_ordinary && st.has_complete_walk && st.gamma == genus && st.v == v,
        Err(_) => false,
    }
}

/// Blow-ups cutting the whole rotation at vertex 0 at the given positions:
/// every arc moves to its own vertex and the centre keeps only the new edges.
fn star_steps(g: &PolarizedGraph, cuts: &[usize]) -> Option<(PolarizedGraph, Vec<Step>)> {
    let rot = g.rotation(0);
    let n = rot.len();
    let mut graph = g.clone();
    let mut steps = Vec::new();
    for (i, &c) in cuts.iter().enumerate() {
        let end = if i + 1 < cuts.len() { cuts[i + 1] } else { cuts[0] + n };
        let first = rot[c];
        let start = graph.rotation(0).iter().position(|&d| d == first)?;
        let step = Step::BlowUp { vertex: 0, start, len: end - c };
        graph = step.apply(&graph).ok()?;
        steps.push(step);
    }
    Some((graph, steps))
}

/// Scans cut positions of the genus-1 monograph, then doubling orientations,
/// then which edge of each doubled pair to subdivide, and returns the first
/// recipe giving an ordinary graph with `V = 24/7`.
pub fn search_genus1() -> Result<Vec<Step>> {
    let base = standard_monograph(1)?;
    let target = Q::new(24, 7);
    for cuts in (0..6).combinations(3) {
        let Some((star, blow)) = star_steps(&base, &cuts) else { continue };
        let radial = [3, 4, 5];
        for sides in (0..3).map(|_| 0..2).multi_cartesian_product() {
            let doubles: Vec<Step> = radial
                .iter()
                .zip(&sides)
                .map(|(&e, &s)| Step::Double { dart: Dart::new(e, s) })
                .collect();
            let Ok(doubled) = apply_recipe(&star, &doubles) else { continue };
            for picks in (0..3).map(|_| 0..2).multi_cartesian_product() {
                let subs: Vec<Step> = radial
                    .iter()
                    .zip(&picks)
                    .map(|(&e, &p)| Step::Subdivide { edge: if p == 0 { e } else { e + 3 } })
                    .collect();
                let Ok(g) = apply_recipe(&doubled, &subs) else { continue };
                if accepts(&g, 1, target) {
                    return Ok(blow.iter().chain(&doubles).chain(&subs).copied().collect());
                }
            }
        }
    }
    Err(Error::Internal("genus-1 search exhausted".into()))
}

/// Scans five-arc cuts of the genus-2 monograph, then pairs of parallel
/// edges across consecutive radial darts at the centre, and returns the first
/// recipe giving an ordinary graph with `V = 13/3`.
pub fn search_genus2() -> Result<Vec<Step>> {
    let base = standard_monograph(2)?;
    let target = Q::new(13, 3);
    for cuts in (0..12).combinations(5) {
        let Some((star, blow)) = star_steps(&base, &cuts) else { continue };
        let centre = star.rotation(0);
        let corners: Vec<Step> = (0..centre.len())
            .map(|i| Step::Parallel { first: centre[i].rev(), len: 2 })
            .filter(|s| matches!(s, Step::Parallel { first, .. } if star.tau(*first) != first.rev()))
            .collect();
        for pair in corners.iter().combinations(2) {
            let extra = [*pair[0], *pair[1]];
            let Ok(g) = apply_recipe(&star, &extra) else { continue };
            if accepts(&g, 2, target) {
                return Ok(blow.iter().chain(&extra).copied().collect());
            }
        }
    }
    Err(Error::Internal("genus-2 search exhausted".into()))
}

/// Chains of triangles `(x, y, z)` with `z` starting the next one, covering
/// every triangle once in some orientation.
fn triangle_chains(triangles: &[[usize; 3]], used: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if used.iter().all(|&u| u) {
        out.push(path.clone());
        return;
    }
    let here = *path.last().expect("nonempty");
    for (t, tri) in triangles.iter().enumerate() {
        if used[t] || !tri.contains(&here) {
            continue;
        }
        let others: Vec<usize> = tri.iter().copied().filter(|&x| x != here).collect();
        for (mid, end) in [(others[0], others[1]), (others[1], others[0])] {
            used[t] = true;
            path.push(mid);
            path.push(end);
            triangle_chains(triangles, used, path, out);
            path.pop();
            path.pop();
            used[t] = false;
        }
    }
}

/// Directed trails over the bottom sides that spell a valid top sequence.
fn top_sequences(
    bottom: &[usize],
    here: usize,
    used: &mut Vec<bool>,
    seq: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = bottom.len() - 1;
    if seq.len() == n {
        return here == bottom[n] && found(seq);
    }
    for m in 1..=n {
        if used[m] || bottom[m - 1] != here {
            continue;
        }
        used[m] = true;
        seq.push(m);
        if top_sequences(bottom, bottom[m], used, seq, found) {
            return true;
        }
        seq.pop();
        used[m] = false;
    }
    false
}

/// Searches 24-gon top sequences whose quotient is `K_7` minus a triangle.
///
/// Corners are labelled by vertices of `K_7`: the bottom follows a closed
/// chain through the six Fano-plane lines other than `{0, 1, 3}`, the top
/// is a trail reusing each labelled bottom side once between the same end
/// labels. The first sequence whose quotient
/// has exactly 7 corner classes is returned.
pub fn search_genus3() -> Result<Vec<usize>> {
    let triangles: Vec<[usize; 3]> = (1..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect();
    for start in 0..7 {
        let mut chains = Vec::new();
        let mut used = vec![false; triangles.len()];
        let mut path = vec![start];
        triangle_chains(&triangles, &mut used, &mut path, &mut chains);
        for bottom in chains {
            let mut result = None;
            let mut found = |seq: &[usize]| {
                let ok = GluingPolygon::new(seq.to_vec())
                    .and_then(|p| gluing_quotient(&p))
                    .map(|q| q.classes == 7 && accepts(&q.graph, 3, Q::new(36, 7)))
                    .unwrap_or(false);
                if ok {
                    result = Some(seq.to_vec());
                }
                ok
            };
            let mut used = vec![false; bottom.len()];
            if top_sequences(&bottom, bottom[0], &mut used, &mut Vec::new(), &mut found) {
                return result.ok_or_else(|| Error::Internal("lost genus-3 certificate".into()));
            }
        }
    }
    Err(Error::Internal("genus-3 search exhausted".into()))
}

/// Ordinary graphs of genus 1..=5 with a complete walk and the largest
/// average valence: 24/7, 13/3, 36/7, 6 and 25/4.
pub fn genus_optimal(g: usize) -> Result<PolarizedGraph> {
    match g {
        1 => apply_recipe(&standard_monograph(1)?, FROZEN_G1),
        2 => apply_recipe(&standard_monograph(2)?, FROZEN_G2),
        3 => {
            let q = gluing_quotient(&GluingPolygon::new(FROZEN_G3.to_vec())?)?;
            Ok(q.graph)
        }
        4 => super::ks::ks_polarization(7),
        5 => {
            let faces: Vec<Vec<usize>> = G5_FACES.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
            let g = from_vertex_faces(8, &faces)?;
            trace_walks(&g)?;
            Ok(g)
        }
        _ => Err(Error::Input(format!("no stored optimum for genus {g} (expected 1..=5)"))),
    }
}
