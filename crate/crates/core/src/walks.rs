use crate::error::Result;
use crate::graph::{Dart, PolarizedGraph};

/// A left walk: a closed tau-orbit, listed from its smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub darts: Vec<Dart>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn min_dart(&self) -> Dart {
        self.darts[0]
    }

    pub fn covers_all_edges(&self, g: &PolarizedGraph) -> bool {
        let mut seen = vec![false; g.edge_count()];
        let mut count = 0;
        for d in &self.darts {
            if !seen[d.edge()] {
                seen[d.edge()] = true;
                count += 1;
            }
        }
        count == g.edge_count()
    }

    /// Vertices visited, starting and ending at the origin of the first dart.
    pub fn itinerary(&self, g: &PolarizedGraph) -> Vec<usize> {
        let mut out: Vec<usize> = self.darts.iter().map(|&d| g.origin(d)).collect();
        out.push(g.origin(self.darts[0]));
        out
    }
}

fn orbit(g: &PolarizedGraph, start: Dart) -> Vec<Dart> {
    let mut darts = vec![start];
    let mut d = g.tau(start);
    while d != start {
        darts.push(d);
        d = g.tau(d);
    }
    darts
}

fn rotate_to_min(mut darts: Vec<Dart>) -> Vec<Dart> {
    let pos = darts
        .iter()
        .enumerate()
        .min_by_key(|(_, d)| **d)
        .map(|(i, _)| i)
        .unwrap_or(0);
    darts.rotate_left(pos);
    darts
}

#[derive(Clone, Debug)]
pub struct WalkDecomposition {
    /// Sorted by smallest dart.
    pub walks: Vec<Walk>,
    /// The designated complete walk: among complete walks, the one with the
    /// smallest dart.
    pub complete_index: Option<usize>,
    walk_of: Vec<usize>,
}

impl WalkDecomposition {
    pub fn complete(&self) -> Option<&Walk> {
        self.complete_index.map(|i| &self.walks[i])
    }

    pub fn walk_of(&self, d: Dart) -> usize {
        self.walk_of[d.0]
    }

    pub fn in_complete(&self, d: Dart) -> bool {
        self.complete_index == Some(self.walk_of[d.0])
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.walks.iter().map(Walk::len).collect()
    }

    /// Faces other than the designated complete walk.
    pub fn others(&self) -> impl Iterator<Item = &Walk> {
        self.walks
            .iter()
            .enumerate()
            .filter(move |(i, _)| Some(*i) != self.complete_index)
            .map(|(_, w)| w)
    }
}

/// Partitions all darts into tau-orbits.
pub fn trace_walks(g: &PolarizedGraph) -> Result<WalkDecomposition> {
    g.require_connected()?;
    let mut walk_of = vec![usize::MAX; g.dart_count()];
    let mut walks = Vec::new();
    for d in g.darts() {
        if walk_of[d.0] != usize::MAX {
            continue;
        }
        // Scanning darts in increasing order means `d` is the orbit minimum.
        let darts = orbit(g, d);
        for x in &darts {
            walk_of[x.0] = walks.len();
        }
        walks.push(Walk { darts });
    }
    let complete_index = walks.iter().position(|w| w.covers_all_edges(g));
    Ok(WalkDecomposition { walks, complete_index, walk_of })
}

#[derive(Clone, Debug)]
pub struct CompleteWalkSearch {
    pub walk: Option<Walk>,
    /// Number of tau applications performed.
    pub steps: usize,
}

/// Decides whether a complete walk exists by tracing only the two orbits
/// through edge 0. Any complete walk must contain one of its darts, so at most
/// `4A` steps are needed.
pub fn find_complete_walk(g: &PolarizedGraph) -> CompleteWalkSearch {
    let mut steps = 0;
    if g.edge_count() == 0 {
        return CompleteWalkSearch { walk: None, steps };
    }
    let first = orbit(g, Dart(0));
    steps += first.len();
    let walk = Walk { darts: first };
    if walk.covers_all_edges(g) {
        return CompleteWalkSearch { walk: Some(walk), steps };
    }
    if walk.darts.contains(&Dart(1)) {
        return CompleteWalkSearch { walk: None, steps };
    }
    let second = orbit(g, Dart(1));
    steps += second.len();
    let walk = Walk { darts: rotate_to_min(second) };
    if walk.covers_all_edges(g) {
        CompleteWalkSearch { walk: Some(walk), steps }
    } else {
        CompleteWalkSearch { walk: None, steps }
    }
}
