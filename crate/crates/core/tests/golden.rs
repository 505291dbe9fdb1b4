//! Analysis reports compared byte for byte with checked-in files.

use std::path::PathBuf;

use raag_core::graph::{parse_graph, Graph};
use raag_core::report::analyze;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check(name: &str, g: &Graph) {
    let text = analyze(g).unwrap().to_json();
    assert_eq!(text, golden(&format!("analysis_{name}.json")), "{name}");
    assert_eq!(text, analyze(g).unwrap().to_json(), "{name} is not reproducible");
}

#[test]
fn path_of_three() {
    check("p3", &Graph::path(3));
}

#[test]
fn path_of_four() {
    check("p4", &Graph::path(4));
}

#[test]
fn triangle() {
    check("k3", &Graph::complete(3));
}

#[test]
fn star_with_three_leaves() {
    check("star3", &Graph::star_graph(3));
}

#[test]
fn file_input_gives_the_same_report() {
    let g = parse_graph(
        "vertices = [\"a\", \"b\", \"c\", \"d\"]\nedges = [[\"c\", \"d\"], [\"a\", \"b\"], [\"b\", \"c\"]]\n",
    )
    .unwrap();
    assert_eq!(analyze(&g).unwrap().to_json(), golden("analysis_p4.json"));
}

#[test]
fn p4_generator_inventory() {
    let doc: serde_json::Value = serde_json::from_str(&golden("analysis_p4.json")).unwrap();
    let counts = &doc["factors"][0]["generators"]["counts"];
    let read = |k: &str| counts[k].as_u64().unwrap();
    assert_eq!(
        [
            read("transvections"),
            read("partial_conjugations"),
            read("inversions"),
            read("inners")
        ],
        [4, 4, 4, 4]
    );
}
