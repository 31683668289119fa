use std::process::{Command, Output};

fn walkwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkwl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gallery_lists_every_entry() {
    let o = walkwl(&["gallery"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["c6_vs_2c3", "genspec7", "rattan_seppelt", "paulus_2512", "paulus_2502", "shrikhande_rook"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn gallery_entry_prints_graph6() {
    let o = walkwl(&["gallery", "c6_vs_2c3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("g E")));
    assert!(text.lines().any(|l| l.starts_with("h E")));
}

#[test]
fn compute_spec_prints_the_char_poly() {
    let o = walkwl(&["compute", "spec", "c6_vs_2c3:h"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("(n = 6)"));
    assert!(text.lines().any(|l| l.starts_with("charpoly ")));
    assert!(text.lines().any(|l| l.starts_with("spec ")));
}

#[test]
fn compute_codes_agree_across_relabelings() {
    // C6 as 0-1-2-3-4-5 and as 0-2-4-1-3-5.
    let digest = |g6: &str| {
        let o = walkwl(&["compute", "omega(2)", g6]);
        assert!(o.status.success());
        stdout(&o).lines().last().unwrap().to_string()
    };
    assert_eq!(digest("EhEG"), digest("EQYO"));
    assert_ne!(digest("EhEG"), digest("c6_vs_2c3:h"));
}

#[test]
fn compare_emits_a_certificate() {
    let o = walkwl(&["compare", "c6_vs_2c3:g", "c6_vs_2c3:h", "--invariants", "wl1,spec,ea_float"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdicts"]["wl1"], "equal");
    assert_eq!(v["verdicts"]["spec"], "unequal");
    assert_eq!(v["verdicts"]["ea_float"], "unequal");
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["diagram_ok"], true);
}

fn compare_json(g: &str, h: &str) -> serde_json::Map<String, serde_json::Value> {
    let o = walkwl(&["compare", g, h, "--r-max", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["diagram_ok"], true);
    v["verdicts"].as_object().unwrap().clone()
}

#[test]
fn compare_defaults_to_the_diagram_set() {
    // Same-parameter strongly regular graphs: nothing in the diagram separates them.
    let raw = compare_json("shrikhande", "rook4x4");
    assert!(raw.values().all(|v| v == "equal"));
    assert!(raw.contains_key("omega(2)"));
    assert!(!raw.contains_key("omega(3)"));

    let gadget = compare_json("shrikhande_rook:g", "shrikhande_rook:h");
    assert_eq!(gadget["omega(*)"], "equal");
    assert_eq!(gadget["wl32"], "unequal");
}

#[test]
fn mine_finds_the_hexagon_pair() {
    let dir = std::env::temp_dir().join(format!("walkwl-mine-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("mine.json");
    let o = walkwl(&["mine", "--corpus", "all:6", "--equal", "wl1", "--differ", "spec", "--json", json.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("all:6: "));
    let found: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(found.as_array().unwrap().len() + 1, text.lines().count());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["compute", "spec", "not-a-graph"][..],
        &["compute", "iso", "shrikhande"][..],
        &["gallery", "no_such_entry"][..],
        &["compare", "c6_vs_2c3:x", "shrikhande"][..],
    ] {
        let o = walkwl(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("walkwl: "));
    }
}

#[test]
fn unknown_invariant_is_a_usage_error() {
    let o = walkwl(&["compute", "nonsense", "shrikhande"]);
    assert!(!o.status.success());
}
