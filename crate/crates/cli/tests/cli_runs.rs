use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn polwalk(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polwalk"))
        .args(args)
        .env("POLWALK_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = tmp(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn construct(args: &[&str]) -> String {
    let mut full = vec!["construct"];
    full.extend(args);
    let o = polwalk(&full, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn info_on_the_genus_five_optimum() {
    let path = write("g5.polgraph", &construct(&["optimal", "5"]));
    let o = polwalk(&["info", &path], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("S=8 A=25 A_r=25 F=9 chi=-8 gamma=5 V=25/4 V_r=25/4"), "{text}");
    assert!(text.contains("complete_walk=true"));
}

#[test]
fn single_loop_check_complete() {
    let path = write("loop.polgraph", "polgraph 1\nvertices 1\nedges 1\nv 0: 0+ 0-\n");
    let o = polwalk(&["check-complete", &path], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("complete walk of length 1"));
}

#[test]
fn pipeline_from_construct_to_check_complete() {
    let k7 = construct(&["ks", "7"]);
    let o = polwalk(&["check-complete", "-"], Some(&k7));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("complete walk of length 21"));
}

#[test]
fn missing_complete_walk_exits_one() {
    let k4 = "polgraph 1\nvertices 4\nedges 6\nv 0: 0+ 1+ 2+\nv 1: 3+ 0- 5-\nv 2: 4+ 1- 3-\nv 3: 5+ 2- 4-\n";
    let o = polwalk(&["check-complete", "-"], Some(k4));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(polwalk(&["info", "/nonexistent/graph"], None).status.code(), Some(2));
    assert_eq!(polwalk(&["info", "-"], Some("polgraph 9\n")).status.code(), Some(2));
    assert_eq!(polwalk(&["construct", "ks", "13"], None).status.code(), Some(2));
    assert_eq!(polwalk(&["construct", "optimal", "6"], None).status.code(), Some(2));
    assert_eq!(polwalk(&["bounds", "0"], None).status.code(), Some(2));
}

#[test]
fn construct_output_parses_back_losslessly() {
    for args in [vec!["monograph", "3"], vec!["homotopic", "4", "2"], vec!["star", "2"], vec!["family", "52"]] {
        let text = construct(&args);
        let path = write(&format!("rt_{}.polgraph", args.join("_")), &text);
        let once = stdout(&polwalk(&["info", &path], None));
        let o = polwalk(&["op", "subdivide", &path, "0"], None);
        assert!(o.status.success());
        let again = polwalk(&["info", "-"], Some(&text));
        assert_eq!(stdout(&again), once);
    }
}

#[test]
fn certificates_verify_and_tampering_is_caught() {
    let cert = tmp("ks7.json");
    let o = polwalk(&["construct", "ks", "7", "--cert", cert.to_str().unwrap(), "-o", tmp("ks7.polgraph").to_str().unwrap()], None);
    assert!(o.status.success());
    let v = polwalk(&["verify", cert.to_str().unwrap()], None);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));

    let text = std::fs::read_to_string(&cert).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["version"], 1);
    assert_eq!(doc["stats"]["v"], "6/1");
    assert_eq!(doc["recipe"]["construct"], serde_json::json!(["ks", "7"]));
    doc["stats"]["v"] = "7/1".into();
    let bad = write("ks7_bad.json", &doc.to_string());
    let v = polwalk(&["verify", &bad], None);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("stats"));

    // A certificate is also accepted wherever a graph is.
    let o = polwalk(&["check-complete", cert.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn family_certificate_records_its_recipe_tree() {
    let cert = tmp("fam52.json");
    let o = polwalk(&["construct", "family", "52", "--cert", cert.to_str().unwrap(), "-o", tmp("fam52.polgraph").to_str().unwrap()], None);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let tree = &doc["recipe"]["tree"];
    assert_eq!(tree["kind"], "sum");
    assert_eq!(tree["genus"], 52);
    assert_eq!(tree["left"]["kind"], "ks");
    assert_eq!(doc["stats"]["gamma"], 52);
    assert_eq!(polwalk(&["verify", cert.to_str().unwrap()], None).status.code(), Some(0));
}

#[test]
fn bounds_table() {
    let o = polwalk(&["bounds", "1"], None);
    let text = stdout(&o);
    assert!(text.contains("b_r(1) = 18/5"), "{text}");
    assert!(text.contains("lower bound 12g/(3g+1) = 3/1"));
    assert!(text.contains("appendix: b = 1 c = 3 c2 = 4"));
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 10);
    let text = stdout(&polwalk(&["bounds", "4"], None));
    assert!(text.contains("b(4) = 6.000000"));
}

#[test]
fn operations_from_the_command_line() {
    let g1 = write("g1.polgraph", &construct(&["optimal", "1"]));
    let o = polwalk(&["op", "contract", &g1, "0"], None);
    assert!(o.status.success());
    let info = stdout(&polwalk(&["info", "-"], Some(&stdout(&o))));
    assert!(info.contains("S=6 A=11"), "{info}");

    let mono = write("mono1.polgraph", &construct(&["monograph", "1"]));
    let sum = polwalk(&["op", "sum", &g1, "0", &mono, "0"], None);
    assert!(sum.status.success());
    let info = stdout(&polwalk(&["info", "-"], Some(&stdout(&sum))));
    assert!(info.contains("gamma=2"), "{info}");

    let o = polwalk(&["op", "contract", &mono, "0"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = polwalk(&["op", "sum", "-", "0", "-", "0"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_removes_planted_short_walks() {
    // Triangle with a contractible loop at vertex 0.
    let g = "polgraph 1\nvertices 3\nedges 4\nv 0: 0+ 3- 3+ 2-\nv 1: 1+ 0-\nv 2: 2+ 1-\n";
    let o = polwalk(&["reduce", "-"], Some(g));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let info = stdout(&polwalk(&["info", "-"], Some(&stdout(&o))));
    assert!(info.contains("S=3 A=3"), "{info}");
    assert!(info.contains("condition_c=true"));
}

#[test]
fn walks_listing_marks_the_complete_walk() {
    let text = stdout(&polwalk(&["walks", "-"], Some("polgraph 1\nvertices 3\nedges 3\nv 0: 0+ 2-\nv 1: 1+ 0-\nv 2: 2+ 1-\n")));
    assert_eq!(text, "walk 0 length 3 complete: 0+ 1+ 2+\nwalk 1 length 3: 0- 2- 1-\n");
}

#[test]
fn search_commands() {
    let o = polwalk(&["search", "max-vr", "--genus", "1", "--max-s", "3", "--max-a", "5"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("max V_r = 2/1 (exhaustive"), "{text}");
    assert!(text.contains("b_r(1) = 18/5"));

    let cache = tmp("search_cache.json");
    let _ = std::fs::remove_file(&cache);
    let args = ["search", "max-vr", "--genus", "0", "--max-s", "3", "--max-a", "4", "--cache", cache.to_str().unwrap()];
    let first = stdout(&polwalk(&args, None));
    assert!(cache.exists());
    assert_eq!(stdout(&polwalk(&args, None)), first);

    let a = polwalk(&["search", "random", "--s", "5", "--a", "8", "--seed", "42"], None);
    let b = polwalk(&["search", "random", "--s", "5", "--a", "8", "--seed", "42"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let missing_seed = polwalk(&["search", "random", "--s", "5", "--a", "8"], None);
    assert_eq!(missing_seed.status.code(), Some(2));
}
