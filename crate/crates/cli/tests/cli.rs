use std::process::{Command, Output};

use serde_json::Value;

fn toda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toda"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("run toda")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn e8_pf_components_match_printed_values() {
    let o = toda(&["spectrum", "E8", "--method", "pf", "--normalize", "max"]);
    assert_eq!(o.status.code(), Some(0));
    let printed = [0.2091, 0.4158, 0.6180, 0.8135, 1.0, 0.6728, 0.3383, 0.5028];
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(2)
        .take(8)
        .map(|l| l.split_whitespace().collect())
        .collect();
    for (row, want) in rows.iter().zip(printed) {
        let component: f64 = row[2].parse().unwrap();
        assert!((component - want).abs() < 5e-5, "{row:?}");
    }
    assert_eq!(text.matches("golden").count(), 5, "{text}");
}

#[test]
fn a1_has_a_single_particle() {
    let o = toda(&[
        "spectrum",
        "A1",
        "--format",
        "json",
        "--normalize",
        "absolute",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let particles = v["spectra"][0]["particles"].as_array().unwrap();
    assert_eq!(particles.len(), 1);
    assert!((particles[0]["mass"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    assert!(v["ratios"].as_array().unwrap().is_empty());
}

#[test]
fn both_methods_report_small_spread() {
    let o = toda(&["spectrum", "E8", "--method", "both", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["consistency"]["spread"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["spectra"].as_array().unwrap().len(), 2);
    let golden: Vec<String> = v["ratios"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["golden"].as_bool().unwrap() && r["method"] == "mass-matrix")
        .map(|r| format!("{}/{}", r["numerator"], r["denominator"]))
        .collect();
    assert_eq!(golden, ["7/1", "6/2", "5/3", "4/8"]);

    let table = stdout(&toda(&["spectrum", "E8", "--method", "both"]));
    assert!(table.contains("consistency: m^2/u^2 spread"));
}

#[test]
fn json_ratios_agree_with_table() {
    let json: Value =
        serde_json::from_slice(&toda(&["spectrum", "E7", "--format", "json"]).stdout).unwrap();
    let table = stdout(&toda(&["spectrum", "E7"]));
    let particles = json["spectra"][0]["particles"].as_array().unwrap();
    let mass = |label: u64| {
        particles
            .iter()
            .find(|p| p["label"].as_u64() == Some(label))
            .unwrap()["mass"]
            .as_f64()
            .unwrap()
    };
    for r in json["ratios"].as_array().unwrap() {
        let (a, b) = (
            r["numerator"].as_u64().unwrap(),
            r["denominator"].as_u64().unwrap(),
        );
        let derived = mass(a) / mass(b);
        let line = table
            .lines()
            .find(|l| l.starts_with(&format!("m{a}/m{b} ")))
            .unwrap();
        let shown: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
        assert!(
            (shown - derived).abs() <= 1e-9 * derived,
            "{line} vs {derived}"
        );
    }
}

#[test]
fn csv_has_header_and_record_column() {
    let o = toda(&["spectrum", "D4", "--method", "both", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "record,method,label,node,component,mass,mass_squared,pair,value,golden"
    );
    let kinds: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "particle").count(), 8);
    assert_eq!(kinds.iter().filter(|k| **k == "ratio").count(), 12);
    assert_eq!(kinds.iter().filter(|k| **k == "consistency").count(), 2);
}

#[test]
fn verify_e8_passes_with_eleven_checks() {
    let o = toda(&["verify", "e8-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 11);
    assert!(text.contains("e8-paper: 11/11 checks passed"));
    assert!(!text.contains('\u{1b}'));

    let v: Value =
        serde_json::from_slice(&toda(&["verify", "e8-paper", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_other_scopes() {
    for scope in ["exponents", "all-ade"] {
        let o = toda(&["verify", scope]);
        assert_eq!(o.status.code(), Some(0), "{scope}: {}", stdout(&o));
    }
    let ade = stdout(&toda(&["verify", "all-ade"]));
    assert_eq!(ade.lines().filter(|l| l.starts_with("PASS")).count(), 17);
}

#[test]
fn tolerance_override_can_fail_verification() {
    let o = toda(&["verify", "e8-paper", "--tolerance", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("check failed"));
}

#[test]
fn inspect_outputs() {
    let poly = stdout(&toda(&["inspect", "E8", "charpoly-a"]));
    assert_eq!(poly, "x^8 - 7x^6 + 14x^4 - 8x^2 + 1\n");
    let poly = stdout(&toda(&["inspect", "E8", "charpoly-b"]));
    assert_eq!(
        poly,
        "x^8 - 60x^7 + 1440x^6 - 18000x^5 + 127440x^4 - 518400x^3 + 1166400x^2 - 1296000x + 518400\n"
    );

    let v: Value =
        serde_json::from_slice(&toda(&["inspect", "E8", "cartan", "--format", "json"]).stdout)
            .unwrap();
    let adjacency: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for i in 0..8 {
        for j in 0..8 {
            let want = if i == j {
                2
            } else if adjacency.contains(&(i, j)) || adjacency.contains(&(j, i)) {
                -1
            } else {
                0
            };
            assert_eq!(v["cartan"][i][j], want, "({i},{j})");
        }
    }

    let roots = stdout(&toda(&["inspect", "A2", "roots"]));
    assert!(roots.starts_with("A2: 3 positive roots\n"));
    let dynkin = stdout(&toda(&["inspect", "E8", "dynkin"]));
    assert!(dynkin.contains("o---o---o---o---o---o---o"));
    assert!(dynkin.contains("a8"));
    let exps = stdout(&toda(&["inspect", "F4", "exponents"]));
    assert!(exps.contains("exponents 1 5 7 11"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["spectrum", "X9"][..],
        &["spectrum", "E9"],
        &["inspect", "B1", "cartan"],
        &["spectrum", "E8", "--method", "nope"],
        &["verify", "everything"],
        &["inspect", "E8"],
    ] {
        let o = toda(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let msg = stderr(&toda(&["spectrum", "E9"]));
    assert!(msg.contains("E6, E7, E8") && msg.contains("D3"), "{msg}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["spectrum", "E8", "--method", "both", "--format", "json"][..],
        &["verify", "e8-paper"],
        &["inspect", "E7", "roots", "--format", "csv"],
    ] {
        assert_eq!(toda(args).stdout, toda(args).stdout, "{args:?}");
    }
}
