use polwalk::bounds::{appendix_bounds, at_most_b, audit, b, bound_br, homotopic_bound, isqrt, lower_bound};
use polwalk::constructions::{genus_optimal, ks_polarization};
use polwalk::format::parse;
use polwalk::Q;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

#[test]
fn b_at_small_genus() {
    assert_eq!(b(4), 6.0);
    assert_eq!(b(0), 2.0);
    assert!(at_most_b(Q::from_integer(6), 4));
    assert!(!at_most_b(q(6001, 1000), 4));
    assert!(at_most_b(q(50, 8), 5));
    assert!(at_most_b(Q::from_integer(1), 0));
}

#[test]
fn br_values() {
    let r1 = bound_br(1);
    assert_eq!(r1.value, q(18, 5));
    assert_eq!(r1.terms, [q(3, 1), q(2, 1), q(10, 3), q(18, 5)]);
    assert_eq!(r1.attained, vec![3]);
    assert_eq!(bound_br(2).value, q(13, 3));
    let r6 = bound_br(6);
    assert_eq!(r6.value, Q::from_integer(7));
    assert_eq!(r6.attained, vec![0, 2]);
}

#[test]
fn br_never_exceeds_b_and_dominates_the_lower_bound() {
    let mut prev_br = bound_br(1).value;
    let mut prev_b = b(1);
    for g in 1..=10_000u64 {
        let br = bound_br(g).value;
        assert!(at_most_b(br, g), "g = {g}");
        assert!(lower_bound(g) <= br, "g = {g}");
        assert!(br >= prev_br, "b_r decreases at g = {g}");
        assert!(b(g) >= prev_b);
        prev_br = br;
        prev_b = b(g);
    }
}

#[test]
fn integer_square_root() {
    for n in 0..5000u64 {
        let r = isqrt(n);
        assert!(r * r <= n && (r + 1) * (r + 1) > n);
    }
    assert_eq!(isqrt(u32::MAX as u64 * u32::MAX as u64), u32::MAX as u64);
}

#[test]
fn homotopic_caps() {
    for g in 1..10 {
        assert_eq!(homotopic_bound(1, g).0, 3 * g);
    }
    assert_eq!(homotopic_bound(3, 2), (9, Q::from_integer(6)));
    assert_eq!(homotopic_bound(2, 1).0, 4);
}

#[test]
fn lower_bound_values() {
    assert_eq!(lower_bound(1), Q::from_integer(3));
    assert_eq!(lower_bound(4), q(48, 13));
    for g in 1..1000 {
        assert!(lower_bound(g) < Q::from_integer(4));
    }
}

#[test]
fn appendix_values() {
    let t = |g| {
        let a = appendix_bounds(g);
        (a.b, a.c, a.c2)
    };
    assert_eq!(t(0), (0, 0, 1));
    assert_eq!(t(1), (1, 3, 4));
    assert_eq!(t(2), (3, 9, 10));
}

#[test]
fn audit_of_k7_saturates_diamond() {
    let st = ks_polarization(7).unwrap().stats().unwrap();
    let r = audit(&st);
    assert!(r.all_ok());
    assert!(r.diamond.saturated());
    assert!(r.spade.saturated());
}

#[test]
fn audit_of_genus_five_optimum() {
    let st = genus_optimal(5).unwrap().stats().unwrap();
    let r = audit(&st);
    assert!(r.all_ok());
    assert_eq!(r.club_r.slack(), Some(Q::from_integer(7) - q(50, 8)));
}

#[test]
fn audit_of_planar_triangle_saturates_heart() {
    let g = parse("polgraph 1\nvertices 3\nedges 3\nv 0: 0+ 2-\nv 1: 1+ 0-\nv 2: 2+ 1-\n").unwrap();
    let r = audit(&g.stats().unwrap());
    assert!(r.heart.saturated());
    assert!(r.all_ok());
}

#[test]
fn audit_without_condition_c_is_not_applicable() {
    let g = parse("polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 0-\n").unwrap();
    let r = audit(&g.stats().unwrap());
    assert_eq!(r.heart.slack(), None);
    assert_eq!(r.diamond.slack(), None);
    assert!(r.club_r.ok());
}
