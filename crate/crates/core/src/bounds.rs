//! Valence bounds and the per-graph inequality audit, in exact arithmetic.
//!
//! `b(g) = 1 + sqrt(6g + 1)` is irrational; it is exposed as a float for
//! display and as an exact comparator. Everything else is rational.

use crate::stats::{GraphStats, Q};

pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let n = n as u128;
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x as u64
}

/// Display value of `b(g)`; never used for decisions.
pub fn b(g: u64) -> f64 {
    1.0 + ((6 * g + 1) as f64).sqrt()
}

/// Exact test of `v <= b(g)` via `(v - 1)^2 <= 6g + 1` when `v > 1`.
pub fn at_most_b(v: Q, g: u64) -> bool {
    let one = Q::from_integer(1);
    if v <= one {
        return true;
    }
    let t = v - one;
    t * t <= Q::from_integer(6 * g as i64 + 1)
}

/// Largest integer of parity `p` that is `<= 2 + sqrt(n)`.
fn floor_parity(n: u64, p: u64) -> i64 {
    let f = 2 + isqrt(n) as i64;
    if (f as u64) % 2 == p {
        f
    } else {
        f - 1
    }
}

/// Smallest integer of parity `p` that is `>= 2 + sqrt(n)`.
fn ceil_parity(n: u64, p: u64) -> i64 {
    let r = isqrt(n);
    let c = if r * r == n { 2 + r as i64 } else { 3 + r as i64 };
    if (c as u64) % 2 == p {
        c
    } else {
        c + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrBound {
    pub value: Q,
    /// `floor0(S0) - 1`, `floor1(S1) - 1`, `3 + (6g-4)/ceil0(S0)`,
    /// `3 + (6g-3)/ceil1(S1)` with `Sj = 2 + sqrt(6g + j)`.
    pub terms: [Q; 4],
    /// Indices into `terms` attaining the maximum.
    pub attained: Vec<usize>,
}

/// The parity-refined upper bound `b_r(g)`, for `g >= 1`.
pub fn bound_br(g: u64) -> BrBound {
    let (n0, n1) = (6 * g, 6 * g + 1);
    let g = g as i64;
    let terms = [
        Q::from_integer(floor_parity(n0, 0) - 1),
        Q::from_integer(floor_parity(n1, 1) - 1),
        Q::from_integer(3) + Q::new(6 * g - 4, ceil_parity(n0, 0)),
        Q::from_integer(3) + Q::new(6 * g - 3, ceil_parity(n1, 1)),
    ];
    let value = *terms.iter().max().expect("four terms");
    let attained = (0..4).filter(|&i| terms[i] == value).collect();
    BrBound { value, terms, attained }
}

/// Edge cap `3g + floor(3(S-1)/2)` and valence cap `3 + (6g-4+pi(S))/S` for
/// homotopic graphs with a complete walk.
pub fn homotopic_bound(s: u64, g: u64) -> (u64, Q) {
    let edges = 3 * g + 3 * (s - 1) / 2;
    let valence = Q::from_integer(3) + Q::new(6 * g as i64 - 4 + (s % 2) as i64, s as i64);
    (edges, valence)
}

/// `12g / (3g + 1)`, realized by the star-blown monograph.
pub fn lower_bound(g: u64) -> Q {
    Q::new(12 * g as i64, 3 * g as i64 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AppendixBounds {
    pub b: u64,
    pub c: u64,
    pub c2: u64,
}

pub fn appendix_bounds(g: u64) -> AppendixBounds {
    let (b, c) = match g {
        0 => (0, 0),
        1 => (1, 3),
        _ => (3 * g - 3, 6 * g - 3),
    };
    AppendixBounds { b, c, c2: c + 1 }
}

/// Result of one inequality: right side minus left side when applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds(Q),
    Violated(Q),
    NotApplicable,
}

impl Outcome {
    fn of(lhs: Q, rhs: Q) -> Outcome {
        let slack = rhs - lhs;
        if slack >= Q::from_integer(0) {
            Outcome::Holds(slack)
        } else {
            Outcome::Violated(slack)
        }
    }

    pub fn ok(&self) -> bool {
        !matches!(self, Outcome::Violated(_))
    }

    pub fn saturated(&self) -> bool {
        matches!(self, Outcome::Holds(s) if *s == Q::from_integer(0))
    }

    pub fn slack(&self) -> Option<Q> {
        match self {
            Outcome::Holds(s) | Outcome::Violated(s) => Some(*s),
            Outcome::NotApplicable => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Spade is the identity `2A = V S`; it can only fail on corrupt stats.
    pub spade: Outcome,
    /// `F <= 1 + A/3`, under condition (C) with a complete walk.
    pub heart: Outcome,
    /// `V <= 3 + (6 gamma - 4 + pi(S))/S`, under condition (C) with a complete walk.
    pub diamond: Outcome,
    /// `V_r <= S - 1`, always.
    pub club_r: Outcome,
    /// `V_r <= 3 + (6 gamma - 4 + pi(S))/S`, under condition (C) with a complete walk.
    pub diamond_r: Outcome,
}

impl BoundReport {
    pub fn all_ok(&self) -> bool {
        [self.spade, self.heart, self.diamond, self.club_r, self.diamond_r]
            .iter()
            .all(Outcome::ok)
    }
}

pub fn audit(st: &GraphStats) -> BoundReport {
    let s = st.s as i64;
    let a = st.a as i64;
    let spade = Outcome::of(Q::from_integer(2 * a), st.v * Q::from_integer(s));
    let spade = match spade {
        Outcome::Holds(x) if x != Q::from_integer(0) => Outcome::Violated(x),
        other => other,
    };
    let applicable = st.satisfies_c && st.has_complete_walk;
    let cap = Q::from_integer(3) + Q::new(6 * st.gamma - 4 + st.parity as i64, s);
    let when = |o: Outcome| if applicable { o } else { Outcome::NotApplicable };
    BoundReport {
        spade,
        heart: when(Outcome::of(Q::from_integer(st.f as i64), Q::from_integer(1) + Q::new(a, 3))),
        diamond: when(Outcome::of(st.v, cap)),
        club_r: Outcome::of(st.v_r, Q::from_integer(s - 1)),
        diamond_r: when(Outcome::of(st.v_r, cap)),
    }
}
