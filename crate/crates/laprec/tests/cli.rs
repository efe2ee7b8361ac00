//! End-to-end tests of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn laprec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laprec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn write(path: &Path, value: &serde_json::Value) {
    std::fs::write(path, serde_json::to_string(value).unwrap()).unwrap();
}

#[test]
fn gen_synth_recover_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.json");
    let samples_path = dir.path().join("s.json");

    let gen = laprec(&["gen", "path", "20"]);
    assert!(gen.status.success());
    std::fs::write(&graph_path, &gen.stdout).unwrap();

    let synth = laprec(&[
        "synth",
        "--graph",
        graph_path.to_str().unwrap(),
        "--support",
        "3,15",
        "--coeffs",
        "1,0.2",
    ]);
    assert!(synth.status.success());
    let signal = stdout_json(&synth);
    let values = signal["values"].as_array().unwrap();
    assert_eq!(values.len(), 20);
    assert!((values[0].as_f64().unwrap() - 0.34).abs() < 0.005);

    let samples: Vec<serde_json::Value> = (1..=4)
        .map(|v| serde_json::json!({ "vertex": v, "value": values[v - 1] }))
        .collect();
    write(&samples_path, &serde_json::json!(samples));

    let recover = laprec(&[
        "recover",
        "one",
        "--graph",
        graph_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--vertex",
        "1",
        "--sparsity",
        "2",
        "--match-basis",
    ]);
    assert!(recover.status.success());
    let result = stdout_json(&recover);
    assert_eq!(result["matched_support"], serde_json::json!([[3], [15]]));
    assert_eq!(result["diagnostics"]["effective_sparsity"], 2);
}

#[test]
fn repro_example_reports_tiny_errors_and_writes_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("figure");
    let output = laprec(&["repro-example", "--csv", prefix.to_str().unwrap()]);
    assert!(output.status.success());
    let report = stdout_json(&output);
    assert!(report["max_eigenvalue_error"].as_f64().unwrap() < 1e-10);
    assert!(report["max_component_error"].as_f64().unwrap() < 1e-10);
    assert_eq!(report["matched_support"], serde_json::json!([3, 15]));

    let coefficients = std::fs::read_to_string(dir.path().join("figure-coefficients.csv")).unwrap();
    assert!(coefficients.starts_with("eigenvalue_index,eigenvalue,coefficient\n"));
    assert_eq!(coefficients.lines().count(), 21);
    let signal = std::fs::read_to_string(dir.path().join("figure-signal.csv")).unwrap();
    assert!(signal.starts_with("vertex,value,sampled\n"));
    assert_eq!(signal.lines().count(), 21);
    let components = std::fs::read_to_string(dir.path().join("figure-components.csv")).unwrap();
    assert!(components.starts_with("vertex,eigenvalue_index,value\n"));
    assert_eq!(components.lines().count(), 7);
}

#[test]
fn outputs_are_byte_stable() {
    let a = laprec(&["gen", "erdos-renyi", "10", "--prob", "0.5", "--seed", "1"]);
    let b = laprec(&["gen", "erdos-renyi", "10", "--prob", "0.5", "--seed", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let c = laprec(&["repro-example"]);
    let d = laprec(&["repro-example"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn missing_samples_exit_with_input_error_naming_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.json");
    let samples_path = dir.path().join("s.json");

    let gen = laprec(&["gen", "path", "10"]);
    std::fs::write(&graph_path, &gen.stdout).unwrap();
    write(
        &samples_path,
        &serde_json::json!([
            { "vertex": 1, "value": 0.5 },
            { "vertex": 2, "value": 0.25 }
        ]),
    );

    let output = laprec(&[
        "recover",
        "one",
        "--graph",
        graph_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--vertex",
        "1",
        "--sparsity",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let error = stdout_json(&output);
    assert_eq!(error["error"]["kind"], "missing-samples");
    let message = error["error"]["message"].as_str().unwrap();
    assert!(message.contains('3') && message.contains('4'), "{message}");
}

#[test]
fn rank_deficiency_exits_with_model_violation() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.json");
    let samples_path = dir.path().join("s.json");
    let plan_path = dir.path().join("plan.json");

    let gen = laprec(&["gen", "umbrella", "8"]);
    std::fs::write(&graph_path, &gen.stdout).unwrap();

    // a 3-sparse signal synthesized through the CLI
    let synth = laprec(&[
        "synth",
        "--graph",
        graph_path.to_str().unwrap(),
        "--support",
        "2,4,6",
        "--coeffs",
        "1,1,1",
    ]);
    assert!(synth.status.success());
    let values = stdout_json(&synth)["values"].as_array().unwrap().clone();
    let samples: Vec<serde_json::Value> = (1..=8)
        .map(|v| serde_json::json!({ "vertex": v, "value": values[v - 1] }))
        .collect();
    write(&samples_path, &serde_json::json!(samples));
    write(
        &plan_path,
        &serde_json::json!({ "anchors": [
            { "vertex": 8, "radius": 2 },
            { "vertex": 7, "radius": 1 }
        ] }),
    );

    let output = laprec(&[
        "recover",
        "multi",
        "--graph",
        graph_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--plan",
        plan_path.to_str().unwrap(),
        "--sparsity",
        "3",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert_eq!(stdout_json(&output)["error"]["kind"], "rank-deficient");
}

#[test]
fn sampling_theory_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.json");
    let gen = laprec(&["gen", "path", "10"]);
    std::fs::write(&graph_path, &gen.stdout).unwrap();

    let collide = laprec(&[
        "collide",
        "--graph",
        graph_path.to_str().unwrap(),
        "--vertices",
        "1,2,3",
        "--support",
        "2,5",
    ]);
    assert!(collide.status.success());
    let pair = stdout_json(&collide);
    assert!(pair["max_sample_difference"].as_f64().unwrap() < 1e-10);

    let chebotarev = laprec(&["chebotarev", "--dft", "4"]);
    let verdict = stdout_json(&chebotarev);
    assert_eq!(verdict["chebotarev"], false);
    assert_eq!(verdict["witness"]["rows"], serde_json::json!([0, 2]));

    let uniqueness = laprec(&["uniqueness", "--dft", "5", "--vertices", "1,4", "--sparsity", "1"]);
    assert_eq!(stdout_json(&uniqueness)["unique"], true);
}

#[test]
fn simplicial_recovery_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let complex_path = dir.path().join("cx.json");
    let samples_path = dir.path().join("chain.json");

    let gen = laprec(&["gen", "strip", "6"]);
    assert!(gen.status.success());
    std::fs::write(&complex_path, &gen.stdout).unwrap();

    // a one-sparse down-signal built in-process for the fixture
    use laprec::simplicial::{hodge_decomposition, triangle_strip};
    use laprec::tolerance::Tolerances;
    let cx = triangle_strip(6).unwrap();
    let decomposition = hodge_decomposition(&cx, 1, &Tolerances::default()).unwrap();
    let center = cx.face_index(&vec![3, 4]).unwrap();
    let (lambda, vector) = decomposition
        .down
        .iter()
        .rev()
        .find(|(l, v)| {
            v[center].abs() > 1e-2
                && decomposition
                    .down
                    .iter()
                    .filter(|(o, _)| (o - l).abs() < 1e-6)
                    .count()
                    == 1
        })
        .cloned()
        .unwrap();
    let faces: Vec<Vec<usize>> = cx.faces(1).to_vec();
    let values: Vec<f64> = vector.iter().copied().collect();
    write(
        &samples_path,
        &serde_json::json!({ "k": 1, "faces": faces, "values": values }),
    );

    let output = laprec(&[
        "recover",
        "simplicial",
        "--complex",
        complex_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--k",
        "1",
        "--face",
        "3,4",
        "--sparsity",
        "1",
        "--operator",
        "dn",
    ]);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stdout));
    let result = stdout_json(&output);
    let recovered = result["eigenvalues"][0].as_f64().unwrap();
    assert!((recovered - lambda).abs() < 1e-8);
}
