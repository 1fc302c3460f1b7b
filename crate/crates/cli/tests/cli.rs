use std::process::{Command, Output};

fn nsgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("single JSON document")
}

#[test]
fn ed_five_seven_mod_six() {
    let o = nsgap(&["ed", "--gens", "5,7", "--mod", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(r#"{"m":6,"evenly_distributed":true,"#));
    for route in ["direct", "apery", "polynomial", "closed-form"] {
        let o = nsgap(&["ed", "--gens", "5,7", "--mod", "6", "--route", route]);
        assert_eq!(json(&o)["evenly_distributed"], true, "{route}");
    }
}

#[test]
fn ed_reports_witness() {
    let o = nsgap(&["ed", "--gens", "4,5,11", "--mod", "5", "--route", "direct"]);
    let v = json(&o);
    assert_eq!(v["evenly_distributed"], false);
    assert_eq!(v["route"], "direct");
    assert_eq!(v["witness"]["kind"], "unequal_counts");
    let o = nsgap(&[
        "ed",
        "--gens",
        "5,7",
        "--mod",
        "5",
        "--route",
        "closed-form",
    ]);
    assert_eq!(
        json(&o)["witness"],
        serde_json::json!({"kind": "no_case", "gcd": 5})
    );
}

#[test]
fn ed_all_moduli() {
    let o = nsgap(&["ed-all", "--gens", "4,5,11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["moduli"], serde_json::json!([1]));
    let o = nsgap(&["ed-all", "--gens", "5,7"]);
    assert_eq!(json(&o)["moduli"], serde_json::json!([1, 2, 3, 4, 6]));
    let o = nsgap(&["ed-all", "--gens", "1"]);
    assert_eq!(json(&o), serde_json::json!({"all_m": true}));
}

#[test]
fn gcd_not_one_is_a_domain_error() {
    let o = nsgap(&["info", "--gens", "4,6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    let err = stderr(&o);
    assert!(err.contains("gcd of generators is 2, not 1"));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["apery", "--gens", "3,5", "--rel", "4"][..],
        &["info", "--gens", "0,3"],
        &[
            "ed",
            "--gens",
            "4,5,11",
            "--mod",
            "5",
            "--route",
            "closed-form",
        ],
        &["classify", "--two", "4,6"],
    ] {
        let o = nsgap(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["info"][..],
        &["info", "--gens", "5,7", "--two", "5,7"],
        &["info", "--two", "5"],
        &["info", "--genarith", "5,2"],
        &["ed", "--gens", "5,7"],
        &["ed", "--gens", "5,7", "--mod", "0"],
        &["apery", "--gens", "5,7", "--rel", "x"],
        &["verify", "nosuch"],
        &["frobnicate"],
    ] {
        assert_eq!(nsgap(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn info_and_gaps() {
    let v = json(&nsgap(&["info", "--gens", "11,5,7,10"]));
    assert_eq!(v["generators"], serde_json::json!([5, 7, 11]));
    assert_eq!(v["multiplicity"], 5);
    assert_eq!(v["frobenius"], 13);
    let v = json(&nsgap(&["gaps", "--gens", "5,7"]));
    assert_eq!(
        v["gaps"],
        serde_json::json!([1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23])
    );
    assert_eq!(v["genus"], 12);
    assert_eq!(v["truncated"], false);
    let v = json(&nsgap(&["gaps", "--gens", "5,7", "--limit", "2"]));
    assert_eq!(v["gaps"], serde_json::json!([1, 2]));
    assert_eq!(v["truncated"], true);
}

#[test]
fn apery_listing() {
    let v = json(&nsgap(&["apery", "--gens", "3,5", "--rel", "5"]));
    assert_eq!(v["elements"], serde_json::json!([0, 3, 6, 9, 12]));
    assert_eq!(v["frobenius"], 7);
}

#[test]
fn shorthands_match_explicit_generators() {
    let cases: [(&[&str], &str); 3] = [
        (&["--two", "5,7"], "5,7"),
        (&["--genarith", "5,2,3"], "5,13,16,19,22"),
        (&["--arith", "4,3"], "4,7,10,13"),
    ];
    for (short, gens) in cases {
        let mut a = vec!["info"];
        a.extend_from_slice(short);
        assert_eq!(
            stdout(&nsgap(&a)),
            stdout(&nsgap(&["info", "--gens", gens]))
        );
    }
}

#[test]
fn classify_families() {
    let v = json(&nsgap(&["classify", "--genarith", "5,2,3"]));
    assert_eq!(v["family"], "GenArithMED");
    assert_eq!(v["params"], serde_json::json!({"a": 5, "h": 2, "d": 3}));
    assert!(v["condition"]
        .as_str()
        .unwrap()
        .starts_with("gcd(15, m) = 1"));
    let v = json(&nsgap(&["classify", "--gens", "2,9"]));
    assert_eq!(v["family"], "Mult2");
    assert_eq!(v["condition"], "m odd and m | 4");
    let v = json(&nsgap(&["classify", "--gens", "4,5,11"]));
    assert_eq!(v["family"], "Other");
    assert!(v["condition"].is_null());
}

#[test]
fn tsv_has_header_row() {
    let o = nsgap(&["ed-all", "--gens", "5,7", "--format", "tsv"]);
    assert_eq!(stdout(&o), "m\n1\n2\n3\n4\n6\n");
    let o = nsgap(&[
        "ed", "--gens", "5,7", "--mod", "4", "--route", "direct", "--format", "tsv",
    ]);
    assert_eq!(
        stdout(&o),
        "m\tevenly_distributed\troute\twitness\n4\ttrue\tdirect\tbalanced\n"
    );
    let o = nsgap(&["info", "--gens", "3,5", "--format", "tsv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split('\t').count(), lines[1].split('\t').count());
}

#[test]
fn verify_emb2_passes() {
    let o = nsgap(&["verify", "emb2", "--max-b", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_output_is_reproducible() {
    let args = ["verify", "equiv", "--trials", "30", "--seed", "7"];
    let first = nsgap(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&nsgap(&args)));
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(stdout(&first), stdout(&nsgap(&seq)));
}

#[test]
fn every_sweep_runs() {
    for args in [
        &["verify", "genarith", "--max-a", "6", "--max-hd", "4"][..],
        &["verify", "mult2", "--max-b", "25"],
        &["verify", "mult3", "--max-c", "20", "--max-m", "10"],
        &["verify", "parity", "--max-b", "20"],
        &["verify", "tuenter", "--pairs", "10"],
    ] {
        let o = nsgap(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&o)["passed"], true, "{args:?}");
    }
}
