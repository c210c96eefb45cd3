use crate::error::{Error, Result};
use crate::faces::from_faces;
use crate::graph::{Dart, PolarizedGraph};

/// A `4f`-gon drawn as a rectangle: sides `a_1 .. a_2f` left to right along
/// the bottom, half-moon diagonals `d_j` over `a_{2j-1} a_{2j}`, and the
/// reversed sides along the top in the order given by `seq`.
///
/// `seq[pos - 1] = m` means top position `pos` carries `a_m` reversed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingPolygon {
    f: usize,
    seq: Vec<usize>,
}

impl GluingPolygon {
    pub fn new(seq: Vec<usize>) -> Result<GluingPolygon> {
        let n = seq.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Input(format!("top sequence has odd or zero length {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &m in &seq {
            if m == 0 || m > n || seen[m] {
                return Err(Error::Input(format!("top sequence is not a permutation of 1..{n}")));
            }
            seen[m] = true;
        }
        Ok(GluingPolygon { f: n / 2, seq })
    }

    /// Top positions `pos` (1-based) where `a_m` is followed by `a_{m+1}`.
    /// The bottom corner between them then forms a vertex on its own.
    pub fn consecutive_sides(&self) -> Vec<usize> {
        self.seq
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] == w[0] + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: PolarizedGraph,
    /// Number of corner classes, i.e. vertices of the quotient.
    pub classes: usize,
    /// Class of bottom corner `p_i` at index `i - 1`.
    pub bottom_class: Vec<usize>,
    /// Class of top corner `p'_i` at index `i - 1`.
    pub top_class: Vec<usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let n = parent[y];
        parent[y] = r;
        y = n;
    }
    r
}

fn unite(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Glues each `a_m` to its top copy and returns the embedded graph on the
/// sides and diagonals. Edge `e_m` has id `m - 1`, diagonal `d_j` has id
/// `2f + j - 1`. Its faces are the `f` half-moon triangles and one big face.
pub fn gluing_quotient(p: &GluingPolygon) -> Result<Quotient> {
    let f = p.f;
    let bottom = |i: usize| i - 1;
    let top = |i: usize| 2 * f + 1 + i - 1;
    let mut parent: Vec<usize> = (0..4 * f + 2).collect();
    unite(&mut parent, bottom(1), top(1));
    unite(&mut parent, bottom(2 * f + 1), top(2 * f + 1));
    for (i, &m) in p.seq.iter().enumerate() {
        let pos = i + 1;
        unite(&mut parent, bottom(m), top(pos));
        unite(&mut parent, bottom(m + 1), top(pos + 1));
    }
    let mut label = vec![usize::MAX; 4 * f + 2];
    let mut classes = 0;
    let mut class = vec![0; 4 * f + 2];
    for c in 0..4 * f + 2 {
        let r = find(&mut parent, c);
        if label[r] == usize::MAX {
            label[r] = classes;
            classes += 1;
        }
        class[c] = label[r];
    }
    let e = |m: usize, side: usize| Dart::new(m - 1, side);
    let d = |j: usize, side: usize| Dart::new(2 * f + j - 1, side);
    let mut origin = vec![0; 6 * f];
    for m in 1..=2 * f {
        origin[e(m, 0).0] = class[bottom(m)];
        origin[e(m, 1).0] = class[bottom(m + 1)];
    }
    for j in 1..=f {
        origin[d(j, 0).0] = class[bottom(2 * j - 1)];
        origin[d(j, 1).0] = class[bottom(2 * j + 1)];
    }
    let mut faces: Vec<Vec<Dart>> = (1..=f).map(|j| vec![e(2 * j - 1, 0), e(2 * j, 0), d(j, 1)]).collect();
    let mut big: Vec<Dart> = (1..=f).map(|j| d(j, 0)).collect();
    big.extend(p.seq.iter().rev().map(|&m| e(m, 1)));
    faces.push(big);
    let graph = from_faces(classes, &origin, &faces)?;
    Ok(Quotient {
        graph,
        classes,
        bottom_class: class[..2 * f + 1].to_vec(),
        top_class: class[2 * f + 1..].to_vec(),
    })
}
