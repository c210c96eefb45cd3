use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::Result;
use crate::graph::PolarizedGraph;
use crate::walks::{trace_walks, WalkDecomposition};

/// Exact rational used for every valence and bound.
pub type Q = Ratio<i64>;

/// Formats a rational as `p/q` in lowest terms, denominator always shown.
pub fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub s: usize,
    pub a: usize,
    pub a_r: usize,
    pub f: usize,
    pub chi: i64,
    pub gamma: i64,
    pub v: Q,
    pub v_r: Q,
    /// Number of walks of each length.
    pub ell: BTreeMap<usize, usize>,
    pub parity: usize,
    pub is_ordinary: bool,
    pub satisfies_c: bool,
    pub has_complete_walk: bool,
}

impl GraphStats {
    pub fn ell(&self, i: usize) -> usize {
        self.ell.get(&i).copied().unwrap_or(0)
    }
}

pub fn stats(g: &PolarizedGraph, w: &WalkDecomposition) -> GraphStats {
    let s = g.vertex_count();
    let a = g.edge_count();
    let a_r = g.adjacent_pairs().len();
    let f = w.walks.len();
    let chi = s as i64 - a as i64 + f as i64;
    let mut ell = BTreeMap::new();
    for walk in &w.walks {
        *ell.entry(walk.len()).or_insert(0) += 1;
    }
    let satisfies_c = !ell.contains_key(&1) && !ell.contains_key(&2);
    GraphStats {
        s,
        a,
        a_r,
        f,
        chi,
        gamma: 1 - chi / 2,
        v: Q::new(2 * a as i64, s as i64),
        v_r: Q::new(2 * a_r as i64, s as i64),
        ell,
        parity: s % 2,
        is_ordinary: a_r == a,
        satisfies_c,
        has_complete_walk: w.complete_index.is_some(),
    }
}

impl PolarizedGraph {
    pub fn stats(&self) -> Result<GraphStats> {
        let w = trace_walks(self)?;
        Ok(stats(self, &w))
    }
}
