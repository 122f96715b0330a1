use std::process::Command;

fn hamspan(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hamspan")).args(args).output().expect("run hamspan");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn span_exit_codes() {
    // K5 spanned, K4 not, K9 under a tiny budget unknown
    assert_eq!(hamspan(&["span", "--graph", "D~{"]).0, 0);
    assert_eq!(hamspan(&["span", "--graph", "C~"]).0, 1);
    assert_eq!(hamspan(&["span", "--graph", "H~~~~~~", "--mode", "exact", "--budget", "20"]).0, 2);
}

#[test]
fn span_prints_certificate() {
    let (code, text) = hamspan(&["span", "--graph", "C~"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["verdict"], "not_spanned");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["dim"], 3);
}

#[test]
fn gen_is_deterministic_and_refuses_even_n() {
    let a = hamspan(&["gen", "--n", "31", "--f", "1", "--seed", "4"]);
    let b = hamspan(&["gen", "--n", "31", "--f", "1", "--seed", "4"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert_ne!(hamspan(&["gen", "--n", "30"]).0, 0);
    assert_eq!(hamspan(&["gen", "--n", "30", "--allow-even-n"]).0, 0);
}

#[test]
fn experiment_csv_header() {
    let (code, text) = hamspan(&["experiment", "--n", "21", "--f", "-1,3", "--trials", "2", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        text.lines().next().unwrap(),
        "seed,n,p,m,min_degree,small_count,hamiltonian,verdict,rank,dim,switcher_found,refutation_ok,ms_sample,ms_span,ms_refute"
    );
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn refute_and_switcher_succeed_on_a_threshold_graph() {
    let (code, text) = hamspan(&["refute", "--n", "61", "--f", "3", "--seed", "2"]);
    assert_eq!(code, 0, "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["r_parity"], 1);
    let (code, text) = hamspan(&["switcher", "--n", "61", "--f", "3", "--seed", "2"]);
    assert_eq!(code, 0, "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["r_parity"], 1);
}

#[test]
fn witness_and_props_emit_json() {
    let (code, text) = hamspan(&["witness", "--graph", "E~~w", "--normalize", "exact"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["normalized"], true);
    let (code, text) = hamspan(&["props", "--n", "41", "--budget", "200"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 41);
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("hamspan-cli-{}.g6", std::process::id()));
    let (code, text) = hamspan(&["gen", "--n", "11", "--out", path.to_str().unwrap()]);
    assert_eq!((code, text.as_str()), (0, ""));
    let g6 = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(hamspan::graph::parse_graph6(g6.trim()).unwrap().n(), 11);
}
