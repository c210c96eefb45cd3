use std::collections::{BTreeSet, HashMap};

use super::family::is_prime;
use super::polygon::{gluing_quotient, GluingPolygon};
use super::skolem::skolem_triples;
use crate::error::{Error, Result};
use crate::graph::PolarizedGraph;
use crate::walks::WalkDecomposition;

/// Top sequence for `S = 9` (genus 8, 24 sides).
pub const S9_SEQUENCE: [usize; 24] = [
    19, 11, 23, 6, 21, 15, 20, 7, 13, 10, 16, 5, 14, 2, 9, 24, 1, 22, 4, 17, 8, 3, 12, 18,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub s: usize,
    pub triples: Vec<[usize; 3]>,
}

impl SteinerSystem {
    /// Every unordered pair of points lies in exactly one triple.
    pub fn is_valid(&self) -> bool {
        let s = self.s;
        if self.triples.len() * 6 != s * (s - 1) {
            return false;
        }
        let mut hit = vec![false; s * s];
        for t in &self.triples {
            for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if x == y || x >= s || y >= s {
                    return false;
                }
                let key = x.min(y) * s + x.max(y);
                if hit[key] {
                    return false;
                }
                hit[key] = true;
            }
        }
        true
    }
}

/// Vertex sets of the length-3 walks other than the complete walk.
pub fn steiner_from_walks(g: &PolarizedGraph, w: &WalkDecomposition) -> SteinerSystem {
    let triples = w
        .others()
        .filter(|walk| walk.len() == 3)
        .map(|walk| {
            let mut t = [0; 3];
            for (i, d) in walk.darts.iter().enumerate() {
                t[i] = g.origin(*d);
            }
            t.sort_unstable();
            t
        })
        .collect();
    SteinerSystem { s: g.vertex_count(), triples }
}

/// Structural facts of the prime-case synthesis, checked while building.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsAudit {
    /// Within each block the odd corners take all `S` values.
    pub odd_corners_distinct: bool,
    /// `v(a'_1) != v(a_1)` and `v(a'_2f) != v(a_2f)`.
    pub end_sides_differ: bool,
    /// No two consecutive top sides are `a_m`, `a_{m+1}`.
    pub no_adjacent_pair: bool,
    /// Skolem sums are coprime to `S`.
    pub sums_coprime: bool,
}

fn admissible_prime(s: usize) -> bool {
    s % 12 == 7 && is_prime(s as u64)
}

/// Builds the top sequence for prime `S = 12l + 7` from the Skolem triples.
///
/// Bottom corners of block `j` start at 0 and step by `alpha_j` after odd
/// positions and `beta_j` after even ones, mod `S`. Top corners start at 0
/// and step by `beta_j` on the left half and `alpha_j` on the right half,
/// with `j` cycling through `1..=k`. Each top side is matched to the bottom
/// side carrying the same ordered pair of values.
///
/// For `S = 9` the stored sequence is returned and there is no audit.
pub fn ks_polygon(s: usize) -> Result<(GluingPolygon, Option<KsAudit>)> {
    if s == 9 {
        return Ok((GluingPolygon::new(S9_SEQUENCE.to_vec())?, None));
    }
    if !admissible_prime(s) {
        return Err(Error::Input(format!("S = {s} is neither 9 nor a prime congruent to 7 mod 12")));
    }
    let k = (s - 1) / 6;
    let sk = skolem_triples(k as u64)?;
    let (sa, sb, sc) = sk.sums();
    let sums_coprime = [sa, sb, sc].iter().all(|&x| x % s as u64 != 0);
    let alpha: Vec<usize> = sk.triples.iter().map(|t| t.0 as usize % s).collect();
    let beta: Vec<usize> = sk.triples.iter().map(|t| t.1 as usize % s).collect();
    let f = k * s;

    // bottom[i] is v(p_{i+1})
    let mut bottom = Vec::with_capacity(2 * f + 1);
    bottom.push(0);
    for m in 1..=2 * f {
        let j = (m - 1) / (2 * s);
        let step = if m % 2 == 1 { alpha[j] } else { beta[j] };
        bottom.push((bottom[m - 1] + step) % s);
    }
    if (0..=k).any(|j| bottom[2 * s * j] != 0) {
        return Err(Error::Internal("bottom valuation does not vanish at block ends".into()));
    }
    let mut odd_corners_distinct = true;
    for j in 0..k {
        let values: BTreeSet<usize> = (0..s).map(|i| bottom[2 * s * j + 2 * i]).collect();
        odd_corners_distinct &= values.len() == s;
    }

    let mut top = Vec::with_capacity(2 * f + 1);
    top.push(0);
    for m in 1..=2 * f {
        let j = (m - 1) % k;
        let step = if m <= f { beta[j] } else { alpha[j] };
        top.push((top[m - 1] + step) % s);
    }
    if top[2 * f] != 0 {
        return Err(Error::Internal("top valuation does not close up".into()));
    }

    let mut side_of: HashMap<(usize, usize), usize> = HashMap::new();
    for m in 1..=2 * f {
        if side_of.insert((bottom[m - 1], bottom[m]), m).is_some() {
            return Err(Error::Internal("bottom valuation is not injective on sides".into()));
        }
    }
    let seq = (1..=2 * f)
        .map(|pos| {
            side_of
                .get(&(top[pos - 1], top[pos]))
                .copied()
                .ok_or_else(|| Error::Internal(format!("top side {pos} matches no bottom side")))
        })
        .collect::<Result<Vec<_>>>()?;
    let end_sides_differ = (top[0], top[1]) != (bottom[0], bottom[1])
        && (top[2 * f - 1], top[2 * f]) != (bottom[2 * f - 1], bottom[2 * f]);
    let p = GluingPolygon::new(seq)?;
    let no_adjacent_pair = p.consecutive_sides().is_empty();
    Ok((p, Some(KsAudit { odd_corners_distinct, end_sides_differ, no_adjacent_pair, sums_coprime })))
}

/// Polarization of the complete graph `K_S` with a Eulerian complete walk and
/// all other faces triangles, for `S = 9` or prime `S = 12l + 7`.
pub fn ks_polarization(s: usize) -> Result<PolarizedGraph> {
    let (p, _) = ks_polygon(s)?;
    let q = gluing_quotient(&p)?;
    if q.classes != s {
        return Err(Error::Internal(format!("quotient has {} corner classes, expected {s}", q.classes)));
    }
    Ok(q.graph)
}
