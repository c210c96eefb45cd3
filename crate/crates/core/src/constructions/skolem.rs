use crate::error::{Error, Result};

/// Triples `(j, beta_j, gamma_j)` with `j + beta_j = gamma_j`, all `3k` values
/// distinct in `1..=3k+1`, no two summing to `6k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkolemTriples {
    pub k: u64,
    pub triples: Vec<(u64, u64, u64)>,
}

impl SkolemTriples {
    pub fn sums(&self) -> (u64, u64, u64) {
        self.triples
            .iter()
            .fold((0, 0, 0), |(a, b, c), &(x, y, z)| (a + x, b + y, c + z))
    }

    pub fn is_valid(&self) -> bool {
        let k = self.k;
        let mut values: Vec<u64> = Vec::new();
        for (j, &(a, b, c)) in self.triples.iter().enumerate() {
            if a != j as u64 + 1 || a + b != c || !(a < b && b < c) {
                return false;
            }
            values.extend([a, b, c]);
        }
        if self.triples.len() as u64 != k || values.iter().any(|&x| x == 0 || x > 3 * k + 1) {
            return false;
        }
        let mut sorted = values.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != values.len() {
            return false;
        }
        !values.iter().any(|&x| values.contains(&(6 * k + 1 - x)))
    }
}

fn place(slots: &mut [bool], used: &mut [bool], lower: &mut [usize], n: usize, skip: usize) -> bool {
    let Some(b) = (1..=n).find(|&s| s != skip && !slots[s]) else {
        return true;
    };
    let k = used.len() - 1;
    for j in 1..=k {
        let top = b + j;
        if used[j] || top > n || top == skip || slots[top] {
            continue;
        }
        used[j] = true;
        slots[b] = true;
        slots[top] = true;
        lower[j] = b;
        if place(slots, used, lower, n, skip) {
            return true;
        }
        used[j] = false;
        slots[b] = false;
        slots[top] = false;
    }
    false
}

/// Backtracking over pairs `(b, b + j)` covering `1..=2k+1` minus one slot:
/// `2k + 1` is left out when `k = 0, 1 mod 4`, `2k` otherwise. The lowest
/// empty slot is always filled first, trying differences in increasing order,
/// so the result is the first solution in that order. Then
/// `beta_j = b + k` and `gamma_j = b + j + k`.
pub fn skolem_triples(k: u64) -> Result<SkolemTriples> {
    if k == 0 {
        return Err(Error::Input("k must be positive".into()));
    }
    let ku = k as usize;
    let n = 2 * ku + 1;
    let skip = if k % 4 <= 1 { 2 * ku + 1 } else { 2 * ku };
    let mut slots = vec![false; n + 1];
    let mut used = vec![false; ku + 1];
    let mut lower = vec![0; ku + 1];
    if !place(&mut slots, &mut used, &mut lower, n, skip) {
        return Err(Error::Internal(format!("no Skolem pairing found for k = {k}")));
    }
    let triples = (1..=ku)
        .map(|j| {
            let b = lower[j] as u64 + k;
            (j as u64, b, b + j as u64)
        })
        .collect();
    Ok(SkolemTriples { k, triples })
}
