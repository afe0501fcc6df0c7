use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use maxcut_grover::circuit::{Circuit, GateKind};
use maxcut_grover::cli::{self, EXIT_CAP, EXIT_COUNTING, EXIT_OK, EXIT_PARSE};
use maxcut_grover::graph::{parse_graph, Graph};
use maxcut_grover::layout::{LayoutMode, QubitLayout};
use maxcut_grover::synth::synth_counting_block;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn maxcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxcut"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(args: &[&str], out_name: &str) -> Value {
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join(out_name);
    let mut all: Vec<&str> = args.to_vec();
    let out_str = out.to_str().unwrap();
    all.extend(["--output", out_str]);
    let o = maxcut(&all);
    assert_eq!(
        o.status.code(),
        Some(EXIT_OK),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap()
}

#[test]
fn solve_path3_json() {
    let g = data("path3.graph");
    let v = json_of(&["solve", g.to_str().unwrap()], "solve_path3.json");
    assert_eq!(v["maxCutSize"], 2);
    assert_eq!(v["witness"], "010");
    assert_eq!(v["complement"], "101");
    assert_eq!(v["v1"], serde_json::json!([2]));
    assert_eq!(v["v2"], serde_json::json!([1, 3]));
    assert_eq!(v["optimalCount"], 2);
    assert_eq!(v["mode"], "compact");
    assert_eq!(v["resources"]["qubitCount"], 15);
    assert_eq!(v["trace"]["final"]["verified"], true);
    let rec = &v["trace"]["records"][0];
    assert_eq!(
        (
            rec["t"].as_u64(),
            rec["R"].as_u64(),
            rec["iterations"].as_u64()
        ),
        (Some(2), Some(2), Some(1))
    );
    assert!((rec["successProbability"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    let graph = parse_graph(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let witness =
        maxcut_grover::graph::CutAssignment::from_display(v["witness"].as_str().unwrap()).unwrap();
    assert_eq!(maxcut_grover::graph::cut_size(&graph, &witness).unwrap(), 2);
}

#[test]
fn solve_with_shots_reports_histogram() {
    let g = data("path3.graph");
    let v = json_of(
        &[
            "solve",
            g.to_str().unwrap(),
            "--shots",
            "1024",
            "--seed",
            "7",
        ],
        "solve_shots.json",
    );
    let counts = v["histogram"]["counts"].as_object().unwrap();
    let keys: Vec<&str> = counts.keys().map(String::as_str).collect();
    assert!(keys.iter().all(|k| *k == "010" || *k == "101"));
    let total: u64 = counts.values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 1024);
    assert_eq!(v["trace"]["records"][0]["shotFraction"], 1.0);
}

#[test]
fn parse_error_exits_2() {
    let p = scratch("bad.graph", "3 2\n1 2\n2 2\n");
    let o = maxcut(&["solve", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = maxcut(&["solve", "/nonexistent/graph"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    let o = maxcut(&["solve"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
}

#[test]
fn faithful_over_cap_exits_3_naming_the_cap() {
    let g = data("path3.graph");
    let o = maxcut(&["solve", g.to_str().unwrap(), "--mode", "faithful"]);
    assert_eq!(o.status.code(), Some(EXIT_CAP));
    assert!(String::from_utf8_lossy(&o.stderr).contains("27"));
}

#[test]
fn verify_passes_and_catches_a_missing_toffoli() {
    let g = data("triangle.graph");
    let v = json_of(&["verify", g.to_str().unwrap()], "verify.json");
    assert_eq!(v["passed"], true);
    assert_eq!(v["checked"], 8);

    let graph: Graph = parse_graph("3 3\n1 2\n2 3\n1 3").unwrap();
    for mode in [LayoutMode::Compact, LayoutMode::Faithful] {
        let l = QubitLayout::new(mode, 3, 3);
        let block = synth_counting_block(&graph, &l).unwrap();
        let z: Vec<usize> = l.all_z().collect();
        // Drop the last counter update.
        let drop = block
            .gates()
            .iter()
            .rposition(|gate| gate.kind() == GateKind::Toffoli && z.contains(&gate.target()))
            .unwrap();
        let mut broken = Circuit::new(block.qubit_count());
        for (i, gate) in block.gates().iter().enumerate() {
            if i != drop {
                broken.push(gate.clone()).unwrap();
            }
        }
        let out = cli::verify_with_block(&graph, &l, &broken).unwrap();
        assert_eq!(out.exit_code, EXIT_COUNTING);
        assert_eq!(out.json["passed"], false);
        assert_eq!(
            cli::verify_with_block(&graph, &l, &block)
                .unwrap()
                .exit_code,
            EXIT_OK
        );
    }

    let big = scratch("six.graph", "6 1\n1 2\n");
    let o = maxcut(&["verify", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_CAP));
}

#[test]
fn count_triangle() {
    let g = data("triangle.graph");
    let v = json_of(&["count", g.to_str().unwrap()], "count.json");
    assert_eq!(
        v["counts"],
        serde_json::json!({"0": 2, "1": 0, "2": 6, "3": 0})
    );
    assert_eq!(v["maxCutSize"], 2);
}

#[test]
fn stats_qubit_closed_forms() {
    let pairs = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)];
    for m in 1..=pairs.len() {
        let edges: Vec<String> = pairs[..m].iter().map(|(a, b)| format!("{a} {b}")).collect();
        let p = scratch(
            &format!("k5_{m}.graph"),
            &format!("5 {m}\n{}\n", edges.join("\n")),
        );
        let v = json_of(&["stats", p.to_str().unwrap()], &format!("stats_{m}.json"));
        assert_eq!(
            v["faithfulQubits"],
            5 + 1 + 3 * m * (m + 1) + m * (m + 3) / 2
        );
        assert_eq!(v["compactQubits"], 5 + 7 + m * (m + 3) / 2);
    }
    let g = data("path3.graph");
    let v = json_of(&["stats", g.to_str().unwrap()], "stats_path3.json");
    assert_eq!(v["faithfulQubits"], 27);
    assert_eq!(v["compactQubits"], 15);
    assert_eq!(v["perIteration"]["compact"]["totalGates"], 290);
    let c = &v["candidates"][0];
    assert_eq!(
        (c["t"].as_u64(), c["R"].as_u64(), c["iterations"].as_u64()),
        (Some(2), Some(2), Some(1))
    );
}

#[test]
fn edgeless_graph() {
    let g = data("single_vertex.graph");
    let v = json_of(&["solve", g.to_str().unwrap()], "edgeless.json");
    assert_eq!(v["maxCutSize"], 0);
    let v = json_of(&["stats", g.to_str().unwrap()], "edgeless_stats.json");
    assert!(v["faithfulQubits"].is_null());
}

#[test]
fn human_summary_on_stdout() {
    let g = data("path4.graph");
    let o = maxcut(&["solve", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("max cut size: 3"));
    assert!(text.contains("0.945313"));
}
