use polwalk::constructions::{genus_optimal, standard_monograph, word_monograph};
use polwalk::format::{parse, serialize};
use polwalk::{find_complete_walk, from_faces, isomorphic, trace_walks, Dart, Error, PolarizedGraph, Q};

fn graph(rotations: &[&str]) -> PolarizedGraph {
    let edges: usize = rotations.iter().map(|r| r.split_whitespace().count()).sum::<usize>() / 2;
    let mut text = format!("polgraph 1\nvertices {}\nedges {edges}\n", rotations.len());
    for (v, r) in rotations.iter().enumerate() {
        text.push_str(&format!("v {v}: {r}\n"));
    }
    parse(&text).unwrap()
}

fn d(s: &str) -> Dart {
    s.parse().unwrap()
}

fn triangle() -> PolarizedGraph {
    graph(&["0+ 2-", "1+ 0-", "2+ 1-"])
}

#[test]
fn single_loop_has_two_fixed_points() {
    let g = graph(&["0+ 0-"]);
    assert_eq!(g.tau(d("0+")), d("0+"));
    assert_eq!(g.tau(d("0-")), d("0-"));
}

#[test]
fn pendant_edge_rebounds() {
    let g = graph(&["0+", "0-"]);
    assert_eq!(g.tau(d("0+")), d("0-"));
    assert_eq!(g.tau(d("0-")), d("0+"));
}

#[test]
fn planar_triangle() {
    let g = triangle();
    let w = trace_walks(&g).unwrap();
    assert_eq!(w.lengths(), vec![3, 3]);
    assert!(w.walks.iter().all(|walk| walk.covers_all_edges(&g)));
    // Both walks are complete; the one through dart 0 is designated.
    assert_eq!(w.complete_index, Some(0));
    let st = g.stats().unwrap();
    assert_eq!((st.chi, st.gamma), (2, 0));
}

#[test]
fn standard_monograph_genus_one() {
    let g = standard_monograph(1).unwrap();
    let w = trace_walks(&g).unwrap();
    assert_eq!(w.lengths(), vec![3, 3]);
    assert!(w.complete().is_some());
    assert_eq!(g.stats().unwrap().gamma, 1);
}

#[test]
fn octagon_monograph_has_one_walk() {
    let g = word_monograph(2).unwrap();
    let st = g.stats().unwrap();
    assert_eq!((st.s, st.a, st.f, st.chi, st.gamma), (1, 4, 1, -2, 2));
}

#[test]
fn genus_five_walks_and_itinerary() {
    let g = genus_optimal(5).unwrap();
    let w = trace_walks(&g).unwrap();
    let mc = w.complete().unwrap();
    assert_eq!(mc.len(), 26);
    let mut lengths = w.lengths();
    lengths.sort_unstable();
    assert_eq!(lengths, [vec![3; 8], vec![26]].concat());
    let paper = [1, 2, 3, 7, 8, 5, 6, 3, 8, 2, 1, 5, 4, 6, 2, 7, 1, 3, 4, 8, 1, 4, 2, 5, 7, 6, 1];
    let expected: Vec<usize> = paper.iter().map(|v| v - 1).collect();
    assert_eq!(mc.itinerary(&g), expected);
    let st = g.stats().unwrap();
    assert_eq!((st.s, st.a, st.f, st.gamma), (8, 25, 9, 5));
    assert_eq!(st.v, Q::new(50, 8));
    assert_eq!(st.v_r, Q::new(50, 8));
    assert!(st.is_ordinary);
    let search = find_complete_walk(&g);
    assert_eq!(search.walk.as_ref().map(|w| w.len()), Some(26));
    assert!(search.steps <= 100);
}

#[test]
fn k7_stats() {
    let g = genus_optimal(4).unwrap();
    let st = g.stats().unwrap();
    assert_eq!((st.s, st.a, st.f, st.gamma), (7, 21, 8, 4));
    assert_eq!(st.v, Q::from_integer(6));
    assert_eq!(st.v_r, Q::from_integer(6));
}

#[test]
fn single_loop_complete_walk_has_length_one() {
    let g = graph(&["0+ 0-"]);
    let r = find_complete_walk(&g);
    assert_eq!(r.walk.unwrap().len(), 1);
}

#[test]
fn two_loop_bouquets_agree_with_orbit_oracle() {
    // All six rotations of one vertex with two loops. The interleaved one is
    // the torus with a single walk.
    let rotations = ["0+ 0- 1+ 1-", "0+ 0- 1- 1+", "0+ 1+ 0- 1-", "0+ 1+ 1- 0-", "0+ 1- 0- 1+", "0+ 1- 1+ 0-"];
    for r in rotations {
        let g = graph(&[r]);
        let w = trace_walks(&g).unwrap();
        let oracle = w.walks.iter().any(|walk| walk.covers_all_edges(&g));
        assert_eq!(find_complete_walk(&g).walk.is_some(), oracle, "{r}");
    }
    let torus = graph(&["0+ 1+ 0- 1-"]);
    assert_eq!(trace_walks(&torus).unwrap().lengths(), vec![4]);
    assert_eq!(torus.stats().unwrap().gamma, 1);
}

#[test]
fn planar_k4_has_no_complete_walk() {
    // Edges 0:01 1:02 2:03 3:12 4:23 5:31, drawn with 0 in the middle.
    let g = graph(&["0+ 1+ 2+", "3+ 0- 5-", "4+ 1- 3-", "5+ 2- 4-"]);
    let w = trace_walks(&g).unwrap();
    assert_eq!(w.lengths(), vec![3, 3, 3, 3]);
    assert_eq!(g.stats().unwrap().gamma, 0);
    assert!(w.complete().is_none());
    assert!(find_complete_walk(&g).walk.is_none());
}

#[test]
fn disconnected_graph_is_rejected() {
    let g = graph(&["0+ 0-", "1+ 1-"]);
    assert!(matches!(trace_walks(&g), Err(Error::Structure(_))));
}

#[test]
fn faces_round_trip() {
    for g in [triangle(), standard_monograph(2).unwrap(), genus_optimal(5).unwrap()] {
        let w = trace_walks(&g).unwrap();
        let faces: Vec<Vec<Dart>> = w.walks.iter().map(|walk| walk.darts.clone()).collect();
        let origin: Vec<usize> = g.darts().map(|x| g.origin(x)).collect();
        let back = from_faces(g.vertex_count(), &origin, &faces).unwrap();
        assert!(isomorphic(&g, &back));
        assert_eq!(trace_walks(&back).unwrap().walks, w.walks);
    }
}

#[test]
fn split_vertex_permutation_is_not_a_polarization() {
    let faces = vec![vec![d("0+")], vec![d("0-")], vec![d("1+")], vec![d("1-")]];
    let r = from_faces(1, &[0, 0, 0, 0], &faces);
    assert!(matches!(r, Err(Error::NotPolarization(_))));
}

#[test]
fn duplicated_face_dart_is_an_input_error() {
    let faces = vec![vec![d("0+"), d("0+")], vec![d("0-")]];
    assert!(from_faces(1, &[0, 0], &faces).is_err());
}

#[test]
fn format_round_trip_is_stable() {
    let text = "# a torus\npolgraph 1\nvertices 1\nedges 2\nv 0: 1+ 0- 1- 0+\n";
    let g = parse(text).unwrap();
    let once = serialize(&g);
    assert_eq!(once, "polgraph 1\nvertices 1\nedges 2\nv 0: 0+ 1+ 0- 1-\n");
    assert_eq!(serialize(&parse(&once).unwrap()), once);
}

#[test]
fn format_rejects_bad_input() {
    for bad in [
        "",
        "polgraph 2\nvertices 1\nedges 1\nv 0: 0+ 0-\n",
        "polgraph 1\nvertices 1\nedges 2\nv 0: 0+ 0-\n",
        "polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 0+\n",
        "polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 0x\n",
    ] {
        assert!(parse(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn empty_vertex_line_parses() {
    let g = parse("polgraph 1\nvertices 2\nedges 1\nv 0: 0+ 0-\nv 1:\n").unwrap();
    assert_eq!(g.degree(1), 0);
    assert!(g.stats().is_err());
}
