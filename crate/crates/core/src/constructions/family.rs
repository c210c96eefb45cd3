use std::collections::HashMap;

use serde::Serialize;

use super::ks::ks_polarization;
use super::optimal::genus_optimal;
use crate::error::{Error, Result};
use crate::graph::PolarizedGraph;
use crate::ops::connected_sum;
use crate::stats::Q;

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Pairs `(S, g)` with `S` prime, `S = 7 mod 12` and `g = (S-1)(S-3)/6 <= max_genus`.
pub fn family_set(max_genus: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut s = 7;
    loop {
        let g = (s - 1) * (s - 3) / 6;
        if g > max_genus {
            return out;
        }
        if is_prime(s) {
            out.push((s, g));
        }
        s += 12;
    }
}

/// Largest genus handled by the stored optima rather than by recursion.
pub const BASE_GENUS: u64 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyRecipe {
    /// `K_S` from the prime synthesis, genus `(S-1)(S-3)/6`.
    Ks { s: u64, genus: u64 },
    /// One of the stored optima.
    Optimal { genus: u64 },
    /// Connected sum at vertex 0 of both summands.
    Sum { genus: u64, left: Box<FamilyRecipe>, right: Box<FamilyRecipe> },
}

impl FamilyRecipe {
    pub fn genus(&self) -> u64 {
        match self {
            FamilyRecipe::Ks { genus, .. } | FamilyRecipe::Optimal { genus } | FamilyRecipe::Sum { genus, .. } => *genus,
        }
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        match self {
            FamilyRecipe::Sum { left, right, .. } => left.leaves() + right.leaves(),
            _ => 1,
        }
    }
}

/// The recipe tree for genus `g`, without building any graph.
pub fn family_recipe(g: u64) -> Result<FamilyRecipe> {
    if g == 0 {
        return Err(Error::Input("genus must be positive".into()));
    }
    let members = family_set(g);
    Ok(recipe_for(g, &members))
}

fn recipe_for(g: u64, members: &[(u64, u64)]) -> FamilyRecipe {
    if let Some(&(s, _)) = members.iter().find(|m| m.1 == g) {
        return FamilyRecipe::Ks { s, genus: g };
    }
    if g <= BASE_GENUS {
        return FamilyRecipe::Optimal { genus: g };
    }
    let &(s, gp) = members.iter().rev().find(|m| m.1 < g).expect("4 is a member below every g > 5");
    FamilyRecipe::Sum {
        genus: g,
        left: Box::new(FamilyRecipe::Ks { s, genus: gp }),
        right: Box::new(recipe_for(g - gp, members)),
    }
}

/// Builds the graph a recipe describes. Shared subtrees are built once.
pub fn build_recipe(r: &FamilyRecipe) -> Result<PolarizedGraph> {
    build(r, &mut HashMap::new())
}

fn build(r: &FamilyRecipe, cache: &mut HashMap<FamilyRecipe, PolarizedGraph>) -> Result<PolarizedGraph> {
    if let Some(g) = cache.get(r) {
        return Ok(g.clone());
    }
    let g = match r {
        FamilyRecipe::Ks { s, .. } => ks_polarization(*s as usize)?,
        FamilyRecipe::Optimal { genus } => genus_optimal(*genus as usize)?,
        FamilyRecipe::Sum { left, right, .. } => {
            let a = build(left, cache)?;
            let b = build(right, cache)?;
            connected_sum(&a, 0, &b, 0)?.graph
        }
    };
    cache.insert(r.clone(), g.clone());
    Ok(g)
}

/// A graph of genus `g` with a complete walk, few vertices and large reduced
/// valence: `K_S` when `g` is in the family set, a stored optimum for
/// `g <= 5`, otherwise the sum of `K_S` for the largest member `g' < g` with
/// the graph for `g - g'`.
pub fn asymptotic_family(g: u64) -> Result<(PolarizedGraph, FamilyRecipe)> {
    let recipe = family_recipe(g)?;
    let graph = build_recipe(&recipe)?;
    let st = graph.stats()?;
    if st.gamma != g as i64 || !st.has_complete_walk {
        return Err(Error::Internal(format!(
            "family graph for genus {g} has genus {} (complete walk: {})",
            st.gamma, st.has_complete_walk
        )));
    }
    Ok((graph, recipe))
}

/// Smallest constants with `S <= D sqrt(g)` and
/// `V_r >= sqrt(6g) - D' g^(9/20)` over the given `(g, S, V_r)` samples.
pub fn fit_constants(samples: &[(u64, usize, Q)]) -> (f64, f64) {
    let mut d: f64 = 0.0;
    let mut d_prime: f64 = 0.0;
    for &(g, s, vr) in samples {
        let gf = g as f64;
        d = d.max(s as f64 / gf.sqrt());
        let vr = *vr.numer() as f64 / *vr.denom() as f64;
        d_prime = d_prime.max(((6.0 * gf).sqrt() - vr) / gf.powf(0.45));
    }
    (d, d_prime)
}
