mod common;

use std::fs;

use bckcode::{parse_code, parse_table, serialize_code, serialize_table, TableFile};
use bckcode_core::{BlockCode, CayleyTable};
use common::*;
use proptest::prelude::*;
use serde_json::Value;

fn code_strategy() -> impl Strategy<Value = BlockCode> {
    (2usize..14, 1usize..7, 1usize..6).prop_flat_map(|(n, q, m)| {
        prop::collection::vec(prop::collection::vec(0..n, q), m)
            .prop_map(move |ws| BlockCode::from_symbols(n, &ws).unwrap())
    })
}

fn table_strategy() -> impl Strategy<Value = TableFile> {
    (1usize..12, any::<bool>()).prop_flat_map(|(r, labelled)| {
        prop::collection::vec(0..r, r * r).prop_map(move |e| TableFile {
            table: CayleyTable::new(r, e).unwrap(),
            labels: labelled.then(|| (0..r).map(|i| format!("x{i}")).collect()),
        })
    })
}

proptest! {
    #[test]
    fn code_files_round_trip(c in code_strategy()) {
        prop_assert_eq!(parse_code(&serialize_code(&c)), Ok(c));
    }

    #[test]
    fn table_files_round_trip(t in table_strategy()) {
        prop_assert_eq!(parse_table(&serialize_table(&t)), Ok(t));
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, _) = bckcode(&full);
    (code, serde_json::from_str(&out).expect("one JSON document"))
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn validate_reports_rule_and_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("v.code");
    fs::write(&f, "4 4 1\n1 2 1 1\n").unwrap();
    let (code, doc) = json(&["validate", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["admissible"], false);
    let first = &doc["failures"][0];
    assert_eq!(
        (
            first["rule"].as_str(),
            first["word"].as_u64(),
            first["position"].as_u64()
        ),
        (Some("R2"), Some(1), Some(2))
    );
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("short.code");
    fs::write(&f, "7 4 3\n3 2 1 1\n4 2 2 1\n").unwrap();
    let (code, doc) = json(&["validate", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "parse");
    assert_eq!(doc["error"]["line"], 4);
    let (_, _, err) = bckcode(["validate", f.to_str().unwrap()]);
    assert!(
        err.contains("short.code:4:1: header declares 3 words, found 2"),
        "{err}"
    );
}

#[test]
fn build_small_code() {
    // one word `1` over n = 3: chain rows 0..1, the word in row 2
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("toy.code");
    fs::write(&f, "3 1 1\n1\n").unwrap();
    let (code, out, _) = bckcode(["build", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "3\n0 0 0\n1 0 0\n2 1 0\n");
}

#[test]
fn build_emits_printed_matrix_and_labelled_rows() {
    let (code, out, _) = bckcode(["build", &path("example_3_1.code")]);
    assert_eq!(code, 0);
    let t = parse_table(&out).unwrap();
    let rows: Vec<Vec<usize>> = t.table.rows().map(|r| r.to_vec()).collect();
    assert_eq!(rows, MATRIX_3_1.map(|r| r.to_vec()).to_vec());
    let (_, grid, _) = bckcode(["build", "--emit", "table", &path("example_3_1.code")]);
    let row7 = grid.lines().find(|l| l.starts_with("a_7")).unwrap();
    let cells: Vec<&str> = row7.split('|').nth(1).unwrap().split_whitespace().collect();
    assert_eq!(
        cells,
        ["a_7", "a_4", "a_2", "a_2", "a_1", "a_1", "a_1", "θ", "θ"]
    );
}

#[test]
fn build_refuses_inadmissible_unless_asked() {
    let (code, doc) = json(&["build", &path("example_3_3.code")]);
    assert_eq!(code, 1);
    assert_eq!(doc["matrix"], Value::Null);
    let (code, doc) = json(&["build", "--no-validate", &path("example_3_3.code")]);
    assert_eq!(code, 1);
    assert_eq!(doc["matrix"]["size"], 11);
    assert_eq!(doc["matrix"]["bck"], false);
    assert_eq!(
        doc["matrix"]["violations"][1]["witness"],
        serde_json::json!([8, 2])
    );
}

#[test]
fn verify_diagonal_entry() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("d.table");
    fs::write(&f, "2\n0 0\n1 1\n").unwrap();
    let (code, doc) = json(&["verify", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v = doc["violations"].as_array().unwrap();
    assert!(v
        .iter()
        .any(|v| v["axiom"] == "bci-3" && v["witness"] == serde_json::json!([1])));
}

#[test]
fn verify_properties_include_published_witnesses() {
    let (code, doc) = json(&["verify", &path("example_3_1.table"), "--properties"]);
    assert_eq!(code, 0);
    let p = &doc["properties"];
    for (name, w) in [
        ("commutative", serde_json::json!([7, 6])),
        ("implicative", serde_json::json!([6, 7])),
        ("positive_implicative", serde_json::json!([7, 6, 3])),
    ] {
        assert_eq!(p[name]["holds"], false);
        assert!(
            p[name]["witnesses"].as_array().unwrap().contains(&w),
            "{name}"
        );
    }
}

#[test]
fn text_and_json_agree() {
    let (_, text, _) = bckcode(["verify", &path("example_3_3.table")]);
    let (_, doc) = json(&["verify", &path("example_3_3.table")]);
    let vs = doc["violations"].as_array().unwrap();
    assert!(text.contains(&format!("fail ({} violations)", vs.len())));
    assert!(text.contains("bci-1") && text.contains("(a_8, θ, a_2)"));
    assert!(text.contains("bci-2") && text.contains("(a_8, a_2)"));
}

#[test]
fn generate_from_small_table() {
    let (code, out, _) = bckcode([
        "generate",
        &path("example_1_3.table"),
        "--points",
        "0,1,2,3",
    ]);
    assert_eq!(code, 0);
    let c = parse_code(&out).unwrap();
    let words: Vec<String> = c.words().iter().map(|w| w.to_string()).collect();
    assert!(words.contains(&"0000".to_string()) && words.contains(&"1001".to_string()));
}

#[test]
fn generate_printed_code() {
    let (_, doc) = json(&[
        "generate",
        &path("example_3_1.table"),
        "--points",
        "1,2,3,4",
    ]);
    assert_eq!(doc["m"], 8);
    assert_eq!(doc["words"][7], serde_json::json!([4, 3, 2, 1]));
}

#[test]
fn roundtrip_stages() {
    let (code, doc) = json(&["roundtrip", &path("example_3_2.code")]);
    assert_eq!(code, 0);
    assert!(doc["generated"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([3, 2, 1, 1, 1])));
    assert!(doc["notes"][0].as_str().unwrap().contains("32211"));
    let (code, doc) = json(&["roundtrip", &path("example_3_3.code")]);
    assert_eq!(code, 1);
    assert_eq!(doc["failed_stage"], "validate");
}

#[test]
fn ideals_modes() {
    let (code, doc) = json(&["ideals", &path("example_1_3.table"), "--subset", "0,3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["subset"]["closed_ideal"], true);
    let (code, doc) = json(&[
        "ideals",
        &path("example_3_1.table"),
        "--subset",
        "0,1,6,7,8",
    ]);
    assert_eq!(code, 1);
    let w = &doc["subset"]["witnesses"][0];
    assert_eq!(
        (w["x"].as_u64(), w["y"].as_u64(), w["product"].as_u64()),
        (Some(6), Some(1), Some(3))
    );
    let (code, doc) = json(&["ideals", &path("example_3_1.table"), "--enumerate"]);
    assert_eq!(code, 0);
    assert_eq!(doc["ideals"].as_array().unwrap().len(), 35);
    let (code, doc) = json(&[
        "ideals",
        &path("example_3_1.table"),
        "--enumerate",
        "--cap",
        "5",
        "--max-size",
        "2",
    ]);
    assert_eq!(code, 0, "{doc}");
    let (code, _, err) = bckcode([
        "ideals",
        &path("example_3_1.table"),
        "--enumerate",
        "--cap",
        "5",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("bound the subset size"));
}

#[test]
fn iso_of_permuted_copy() {
    let t = parse_table(&fs::read_to_string(data("example_3_1.table")).unwrap()).unwrap();
    let perm = [0, 3, 8, 1, 5, 2, 7, 4, 6];
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.table");
    fs::write(&f, serialize_table(&TableFile::new(t.table.relabel(&perm)))).unwrap();
    let (code, doc) = json(&["iso", &path("example_3_1.table"), f.to_str().unwrap()]);
    assert_eq!(code, 0);
    let images: Vec<usize> = doc["permutation"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    let b = t.table.relabel(&perm);
    for x in 0..9 {
        for y in 0..9 {
            assert_eq!(images[t.table.op(x, y)], b.op(images[x], images[y]));
        }
    }
    let (code, doc) = json(&[
        "iso",
        &path("example_3_3.table"),
        &path("example_3_3.table"),
        "--cap",
        "11",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        doc["permutation"],
        serde_json::json!((0..11).collect::<Vec<_>>())
    );
}
