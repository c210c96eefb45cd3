//! Brute-force oracles over small polarized graphs, and random instances.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::serialize;
use crate::graph::{Dart, PolarizedGraph};
use crate::stats::Q;
use crate::walks::trace_walks;

/// An unpolarized multigraph. Edge `i` joins `edges[i].0` to `edges[i].1`;
/// its dart `2i` leaves the first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multigraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        if vertex_count == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::Input(format!("edge ({u}, {v}) leaves the {vertex_count} vertices")));
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// The underlying multigraph of a polarized graph.
    pub fn of(g: &PolarizedGraph) -> Multigraph {
        Multigraph {
            vertex_count: g.vertex_count(),
            edges: (0..g.edge_count()).map(|e| g.endpoints(e)).collect(),
        }
    }

    /// Darts at each vertex, in increasing order.
    fn incidence(&self) -> Vec<Vec<Dart>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(Dart::new(e, 0));
            inc[v].push(Dart::new(e, 1));
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        inc
    }

    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a != b {
                parent[a] = b;
                parts -= 1;
            }
        }
        parts == 1 && (self.vertex_count == 1 || !self.edges.is_empty())
    }

    /// Reduced valence `2 A_r / S`, which does not depend on the rotations.
    pub fn v_r(&self) -> Q {
        let pairs: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        Q::new(2 * pairs.len() as i64, self.vertex_count as i64)
    }

    /// Number of polarizations: the product of `(d - 1)!` over vertex degrees.
    pub fn polarization_count(&self) -> u128 {
        self.incidence()
            .iter()
            .map(|list| (1..list.len().max(1) as u128).product::<u128>())
            .product()
    }

    /// Sorted edge list minimized over all vertex relabellings.
    fn canonical(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .permutations(self.vertex_count)
            .map(|p| {
                let mut e: Vec<(usize, usize)> = self
                    .edges
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default()
    }
}

/// Next lexicographic permutation in place; false after the last one.
fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every polarization of a multigraph exactly once.
///
/// At each vertex the smallest dart comes first and the rest run through
/// their permutations in lexicographic order; the last vertex varies
/// fastest.
pub struct Polarizations {
    vertex_count: usize,
    rest: Vec<Vec<Dart>>,
    heads: Vec<Option<Dart>>,
    done: bool,
}

pub fn enumerate_polarizations(m: &Multigraph) -> Polarizations {
    let inc = m.incidence();
    let heads = inc.iter().map(|l| l.first().copied()).collect();
    let rest = inc.into_iter().map(|l| l.into_iter().skip(1).collect()).collect();
    Polarizations { vertex_count: m.vertex_count, rest, heads, done: false }
}

impl Iterator for Polarizations {
    type Item = PolarizedGraph;

    fn next(&mut self) -> Option<PolarizedGraph> {
        if self.done {
            return None;
        }
        let rotations: Vec<Vec<Dart>> = self
            .heads
            .iter()
            .zip(&self.rest)
            .map(|(h, r)| h.iter().chain(r).copied().collect())
            .collect();
        let g = PolarizedGraph::from_rotations(self.vertex_count, &rotations).expect("incidence lists are valid");
        self.done = true;
        for r in self.rest.iter_mut().rev() {
            if next_permutation(r) {
                self.done = false;
                break;
            }
        }
        Some(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SearchBudget {
    pub max_s: usize,
    pub max_a: usize,
    /// Polarizations examined before giving up.
    pub node_limit: u64,
    /// Unused by the exhaustive enumeration; kept so cached results are keyed
    /// on the full budget.
    pub seed: u64,
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_s == 0 || self.max_a == 0 || self.node_limit == 0 {
            return Err(Error::Input("search limits must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct MaxVr {
    /// Best reduced valence and a witness, if any graph qualified.
    pub best: Option<(Q, PolarizedGraph)>,
    /// True when no multigraph was cut short by the node limit; `best` is then
    /// the exact maximum, otherwise only a lower bound.
    pub complete: bool,
    pub nodes: u64,
    pub multigraphs: usize,
}

/// Connected multigraphs with `S <= max_s`, `A <= max_a` and enough edges for
/// genus `g` with at least one face. Isomorphic copies are dropped for
/// `S <= 6`.
pub fn enumerate_multigraphs(g: u64, max_s: usize, max_a: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for s in 1..=max_s {
        let pairs: Vec<(usize, usize)> = (0..s).flat_map(|u| (u..s).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        // F = A - S + 2 - 2g must be at least 1.
        let min_a = (s + 2 * g as usize).saturating_sub(1).max(1);
        for a in min_a..=max_a {
            for edges in pairs.iter().copied().combinations_with_replacement(a) {
                let m = Multigraph { vertex_count: s, edges };
                if !m.is_connected() {
                    continue;
                }
                if s <= 6 && !seen.insert(m.canonical()) {
                    continue;
                }
                out.push(m);
            }
        }
    }
    out
}

/// The first polarization of `m`, in enumeration order, with genus `g` and a
/// complete walk, examining at most `limit` of them. Returns the witness
/// and the number examined.
pub fn first_with_complete_walk(m: &Multigraph, g: u64, limit: u64) -> (Option<PolarizedGraph>, u64) {
    let mut nodes = 0;
    for p in enumerate_polarizations(m) {
        if nodes == limit {
            break;
        }
        nodes += 1;
        let Ok(w) = trace_walks(&p) else { return (None, nodes) };
        let chi = p.vertex_count() as i64 - p.edge_count() as i64 + w.walks.len() as i64;
        if w.complete_index.is_some() && 2 - chi == 2 * g as i64 {
            return (Some(p), nodes);
        }
    }
    (None, nodes)
}

/// Largest `V_r` over connected polarized graphs of genus `g` with a complete
/// walk inside the budget.
///
/// Since `V_r` depends only on the underlying multigraph, each multigraph is
/// scanned until its first qualifying polarization. The node limit is split
/// over multigraphs in enumeration order before the parallel scan, so the
/// result does not depend on scheduling; ties go to the smallest serialized
/// witness.
pub fn brute_force_max_vr(g: u64, budget: &SearchBudget) -> Result<MaxVr> {
    budget.validate()?;
    let graphs = enumerate_multigraphs(g, budget.max_s, budget.max_a);
    let mut allot = Vec::with_capacity(graphs.len());
    let mut left = budget.node_limit as u128;
    let mut complete = true;
    for m in &graphs {
        let need = m.polarization_count();
        let give = need.min(left);
        if give < need {
            complete = false;
        }
        left -= give;
        allot.push(give as u64);
    }
    let results: Vec<(Option<PolarizedGraph>, u64)> = graphs
        .par_iter()
        .zip(allot.par_iter())
        .map(|(m, &limit)| {
            if limit == 0 {
                (None, 0)
            } else {
                first_with_complete_walk(m, g, limit)
            }
        })
        .collect();
    let nodes = results.iter().map(|r| r.1).sum();
    let best = results
        .into_iter()
        .zip(&graphs)
        .filter_map(|((w, _), m)| w.map(|w| (m.v_r(), serialize(&w), w)))
        .max_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1)))
        .map(|(q, _, w)| (q, w));
    Ok(MaxVr { best, complete, nodes, multigraphs: graphs.len() })
}

/// A random connected polarized graph with `S` vertices and `A` edges.
///
/// Edge endpoints are drawn uniformly (loops allowed) and the whole draw is
/// repeated until connected; every rotation is then shuffled.
pub fn random_polarized(s: usize, a: usize, seed: u64) -> Result<PolarizedGraph> {
    if s == 0 || a + 1 < s || a == 0 {
        return Err(Error::Input(format!("need S >= 1 and A >= max(1, S - 1), got S = {s}, A = {a}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = loop {
        let edges = (0..a).map(|_| (rng.gen_range(0..s), rng.gen_range(0..s))).collect();
        let m = Multigraph { vertex_count: s, edges };
        if m.is_connected() {
            break m;
        }
    };
    let mut rotations = m.incidence();
    for rot in &mut rotations {
        rot.shuffle(&mut rng);
    }
    PolarizedGraph::from_rotations(s, &rotations)
}

/// Plants `loops` length-1 walks and `doubles` length-2 walks into a graph
/// with a complete walk, keeping that walk complete and the genus fixed.
///
/// A loop `x` is inserted at the head of a complete-walk dart `d` as
/// `x-, x+` right after `reverse(d)`, so the walk through `d` also runs
/// through `x-` and `x+` alone is a face. Doubles use
/// [`crate::ops::double_edge`] on edges whose both darts are on the complete
/// walk. Returns `None` when no site qualifies.
pub fn plant_short_walks(g: &PolarizedGraph, loops: usize, doubles: usize, seed: u64) -> Result<Option<PolarizedGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = g.clone();
    for _ in 0..loops {
        let w = trace_walks(&g)?;
        let Some(mc) = w.complete() else { return Ok(None) };
        let d = mc.darts[rng.gen_range(0..mc.len())];
        let x = Dart::new(g.edge_count(), 0);
        let mut rotations = g.rotations();
        let v = g.head(d);
        let i = rotations[v].iter().position(|&y| y == d.rev()).expect("dart sits at its origin");
        rotations[v].insert(i + 1, x.rev());
        rotations[v].insert(i + 2, x);
        g = PolarizedGraph::from_rotations(g.vertex_count(), &rotations)?;
    }
    for _ in 0..doubles {
        let w = trace_walks(&g)?;
        let sites: Vec<Dart> = g.darts().filter(|&d| w.in_complete(d) && w.in_complete(d.rev())).collect();
        let Some(&b) = sites.choose(&mut rng) else { return Ok(None) };
        let Ok(out) = crate::ops::double_edge(&g, b) else { return Ok(None) };
        g = out.graph;
    }
    Ok(Some(g))
}
