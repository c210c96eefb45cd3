use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A directed edge. Dart `2e` is edge `e` read forward (`e+`), dart `2e + 1`
/// is the reverse (`e-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: usize, side: usize) -> Dart {
        Dart(2 * edge + (side & 1))
    }

    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    pub fn side(self) -> usize {
        self.0 & 1
    }

    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.side() == 0 { '+' } else { '-' };
        write!(f, "{}{}", self.edge(), sign)
    }
}

impl serde::Serialize for Dart {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Dart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Dart> {
        let s = s.trim();
        let (num, side) = match s.chars().last() {
            Some('+') => (&s[..s.len() - 1], 0),
            Some('-') => (&s[..s.len() - 1], 1),
            _ => return Err(Error::Input(format!("bad dart `{s}` (expected e.g. `3+` or `3-`)"))),
        };
        let edge: usize = num
            .parse()
            .map_err(|_| Error::Input(format!("bad dart `{s}`")))?;
        Ok(Dart::new(edge, side))
    }
}

/// A rotation system: every vertex carries a cyclic order of the darts
/// leaving it.
///
/// Stored as successor/predecessor arrays over darts plus an origin map, so
/// `tau` is O(1). Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedGraph {
    origin: Vec<usize>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    first: Vec<Option<Dart>>,
}

impl PolarizedGraph {
    /// Builds a graph from one cyclic dart sequence per vertex.
    ///
    /// The darts must be exactly `0..2A` for some `A`, each used once.
    pub fn from_rotations(vertex_count: usize, rotations: &[Vec<Dart>]) -> Result<PolarizedGraph> {
        if vertex_count == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        if rotations.len() != vertex_count {
            return Err(Error::Input(format!(
                "{} rotations given for {} vertices",
                rotations.len(),
                vertex_count
            )));
        }
        let total: usize = rotations.iter().map(Vec::len).sum();
        if !total.is_multiple_of(2) {
            return Err(Error::Input(format!("odd number of darts ({total})")));
        }
        let mut origin = vec![usize::MAX; total];
        let mut next = vec![Dart(0); total];
        let mut prev = vec![Dart(0); total];
        let mut first = vec![None; vertex_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= total {
                    return Err(Error::Input(format!(
                        "dart {d} out of range for {} edges",
                        total / 2
                    )));
                }
                if origin[d.0] != usize::MAX {
                    return Err(Error::Input(format!("dart {d} listed twice")));
                }
                origin[d.0] = v;
                let n = rot[(i + 1) % rot.len()];
                next[d.0] = n;
                prev[n.0] = d;
            }
            first[v] = rot.iter().copied().min();
        }
        Ok(PolarizedGraph { origin, next, prev, first })
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart)
    }

    pub fn has_dart(&self, d: Dart) -> bool {
        d.0 < self.dart_count()
    }

    pub fn check_dart(&self, d: Dart) -> Result<()> {
        if self.has_dart(d) {
            Ok(())
        } else {
            Err(Error::Input(format!("unknown dart {d}")))
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::Input(format!("unknown vertex {v}")))
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edge_count() {
            Ok(())
        } else {
            Err(Error::Input(format!("unknown edge {e}")))
        }
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d.0]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.origin[d.rev().0]
    }

    /// Rotation successor at the origin of `d`.
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d.0]
    }

    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d.0]
    }

    /// One step of the left walk: arrive along `d`, leave along the dart that
    /// follows `reverse(d)` at the head.
    pub fn tau(&self, d: Dart) -> Dart {
        self.next[d.rev().0]
    }

    pub fn tau_inv(&self, d: Dart) -> Dart {
        self.prev[d.0].rev()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation(v).len()
    }

    /// The cyclic order at `v`, starting at its smallest dart.
    pub fn rotation(&self, v: usize) -> Vec<Dart> {
        let mut out = Vec::new();
        if let Some(start) = self.first[v] {
            let mut d = start;
            loop {
                out.push(d);
                d = self.next[d.0];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        (0..self.vertex_count()).map(|v| self.rotation(v)).collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let d = Dart::new(e, 0);
        self.origin(d) == self.head(d)
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let d = Dart::new(e, 0);
        (self.origin(d), self.head(d))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in self.rotation(v) {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.edge_count() == 0 {
            return Err(Error::Structure("graph has no edges".into()));
        }
        if !self.is_connected() {
            return Err(Error::Structure("graph is disconnected".into()));
        }
        Ok(())
    }

    /// Unordered pairs of distinct adjacent vertices.
    pub fn adjacent_pairs(&self) -> BTreeSet<(usize, usize)> {
        (0..self.edge_count())
            .filter_map(|e| {
                let (u, v) = self.endpoints(e);
                (u != v).then(|| (u.min(v), u.max(v)))
            })
            .collect()
    }

    /// Number of distinct neighbours of `v` other than itself.
    pub fn reduced_degree(&self, v: usize) -> usize {
        self.rotation(v)
            .into_iter()
            .map(|d| self.head(d))
            .filter(|&w| w != v)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// The graph with edge `e` deleted; higher edge ids shift down by one.
    pub fn without_edge(&self, e: usize) -> PolarizedGraph {
        let relabel = |d: Dart| -> Dart {
            if d.edge() > e {
                Dart(d.0 - 2)
            } else {
                d
            }
        };
        let rotations: Vec<Vec<Dart>> = self
            .rotations()
            .into_iter()
            .map(|rot| rot.into_iter().filter(|d| d.edge() != e).map(relabel).collect())
            .collect();
        PolarizedGraph::from_rotations(self.vertex_count(), &rotations)
            .expect("deleting an edge keeps a valid rotation system")
    }
}
